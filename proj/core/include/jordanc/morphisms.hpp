#pragma once

// Hermiticity-preserving linear maps between block *-algebras, stored as real
// matrices on hermitian coordinates. The hermitian basis is also a complex
// basis, so the same matrix gives the complexified action.

#include "jordanc/composites.hpp"
#include "jordanc/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace jordanc {

class MorphismMap {
 public:
  /// `matrix` is target.dim() x source.dim().
  MorphismMap(StarAlgebra source, StarAlgebra target, RMatrix matrix);

  static MorphismMap identity(const StarAlgebra& algebra);
  /// Samples a complex-linear, hermiticity-preserving `f` on the hermitian
  /// basis. Throws ValidationError if an image is not hermitian.
  static MorphismMap from_function(const StarAlgebra& source, const StarAlgebra& target,
                                   const std::function<AlgebraElement(const AlgebraElement&)>& f);
  /// x -> <x|d> into the scalars; no positivity requirement.
  static MorphismMap functional(const StarAlgebra& source, const AlgebraElement& density);
  /// x -> sum K x K* with one Kraus family per (target block, source block).
  static MorphismMap from_kraus(const StarAlgebra& source, const StarAlgebra& target,
                                const std::vector<std::vector<std::vector<CMatrix>>>& kraus);

  const StarAlgebra& source() const { return source_; }
  const StarAlgebra& target() const { return target_; }
  const RMatrix& matrix() const { return matrix_; }

  /// Complexified action on any element of the source.
  AlgebraElement apply(const AlgebraElement& x) const;

 private:
  StarAlgebra source_;
  StarAlgebra target_;
  RMatrix matrix_;
};

/// Adjoint for the trace forms: the transpose in orthonormal coordinates.
MorphismMap dagger(const MorphismMap& phi);
/// phi o psi.
MorphismMap compose(const MorphismMap& phi, const MorphismMap& psi);
MorphismMap tensor_map(const MorphismMap& phi, const MorphismMap& psi);
/// sigma: M_A (x) M_B -> M_B (x) M_A.
MorphismMap swap_map(const StarAlgebra& a, const StarAlgebra& b);
double distance(const MorphismMap& phi, const MorphismMap& psi);

/// Real orthogonal change of basis from the product basis h_k (x) h'_l
/// (column k * dim B + l) to the hermitian coordinates of M_A (x) M_B.
RMatrix product_basis_matrix(const StarAlgebra& a, const StarAlgebra& b);

struct CpResult {
  bool cp = false;
  double min_choi_eigenvalue = 0.0;
};

/// Choi criterion, blockwise over (source block, target block).
CpResult is_cp(const MorphismMap& phi, double tol = 1e-9);

struct PreservationResult {
  bool preserved = false;
  double residual = 0.0;
};

PreservationResult is_jordan_preserving(const MorphismMap& phi, const Ejc& a, const Ejc& b, double tol = 1e-8);

struct WitnessResult {
  std::string witness;
  double residual = 0.0;
  bool preserved = false;
};

struct CjpResult {
  /// Jordan preserving after tensoring with each listed witness. This is CJP
  /// relative to the witnesses, not CJP against every object.
  bool cjp_relative = false;
  double max_residual = 0.0;
  std::vector<WitnessResult> witnesses;
};

/// The unit object and conj(A) are always added to `witnesses`.
CjpResult is_cjp_relative(const MorphismMap& phi, const Ejc& a, const Ejc& b, const std::vector<Ejc>& witnesses,
                          ProductCache& cache, double tol = 1e-8);
CjpResult is_cjp_relative(const MorphismMap& phi, const Ejc& a, const Ejc& b, const std::vector<Ejc>& witnesses = {},
                          double tol = 1e-8);

/// x -> <x|a>; requires a state density of A.
MorphismMap state_as_morphism(const Ejc& a, const AlgebraElement& density);

/// gamma(y) = Phi_A(y^T) from conj(M_A) to M_A; requires the involution.
MorphismMap gamma_iso(const Ejc& a);

struct GammaReport {
  double multiplicativity_residual = 0.0;
  /// conj(A) basis images measured against A.
  double image_residual = 0.0;
  /// |(alpha (x) gamma)(f_A) - gamma(conj(a))| for a random state.
  double chain_residual = 0.0;
};

GammaReport gamma_check(const Ejc& a, std::uint64_t seed = 0, int samples = 20);

struct SnakeReport {
  /// max |(eta (x) id)(x (x) f_conj) - x| over a basis of M_A.
  double left_residual = 0.0;
  /// Same on the conjugate side.
  double right_residual = 0.0;
  double residual() const { return std::max(left_residual, right_residual); }
};

SnakeReport snake_check(const Ejc& a, std::uint64_t seed = 0);

/// Cup as a map I -> M_A (x) conj(M_A) and counit as its reverse.
MorphismMap cup_map(const Ejc& a);
MorphismMap counit_map(const Ejc& a);

/// Random Kraus map with `kraus_rank` operators per block pair.
MorphismMap random_cp_map(const StarAlgebra& source, const StarAlgebra& target, Rng& rng, int kraus_rank = 2);

/// Random positive element of A with unit trace.
AlgebraElement random_state_density(const Ejc& a, Rng& rng);

enum class Expectation { Holds, Violated, ReportOnly };

struct SuiteObject {
  Ejc object;
  Expectation expectation = Expectation::Holds;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int random_pairs = 20;
  double tol = 1e-8;
};

/// Snake equations, f^dagger = eta, cup membership, state morphisms, swap
/// symmetry and dagger laws on random CP maps.
VerificationReport dagger_compact_suite(const std::vector<SuiteObject>& objects, ProductCache& cache,
                                        const SuiteOptions& options = {});

/// Largest singular value of (1 - P_B)(f (x) id_B) on A (.) B, for the
/// state f with the given density.
double state_leak(const Ejc& a, const Ejc& b, const AlgebraElement& density, ProductCache& cache);

struct NoGoReport {
  int reversibility_gap = 0;
  int product_dim = 0;
  /// u_A (x) b-hat against A (.) B, b-hat spanning Fix(Phi_B) minus B.
  double hat_membership_residual = 0.0;
  std::vector<double> leaks;
  double max_leak = 0.0;
};

/// Requires B with positive reversibility gap (PreconditionError otherwise).
NoGoReport reversibility_nogo(const Ejc& a, const Ejc& b, ProductCache& cache, std::uint64_t seed = 0, int states = 5);

}  // namespace jordanc
