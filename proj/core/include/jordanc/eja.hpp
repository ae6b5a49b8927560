#pragma once

// Euclidean Jordan algebras embedded as unital Jordan subalgebras of the
// hermitian part of a block *-algebra.

#include "jordanc/algebra_kernel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jordanc {

enum class Family { R, C, Q, V };
enum class Embedding { Standard, Universal, Derived };

std::string to_string(Family f);
std::string to_string(Embedding e);

class EmbeddedJordanAlgebra {
 public:
  /// Checks that `basis` is orthonormal and contains the ambient unit.
  EmbeddedJordanAlgebra(HermSubspace basis, Embedding embedding, std::optional<AntiAutomorphism> involution,
                        std::string label);

  const StarAlgebra& ambient() const { return basis_.ambient(); }
  const HermSubspace& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }
  const AlgebraElement& unit() const { return unit_; }
  Embedding embedding() const { return embedding_; }
  const std::optional<AntiAutomorphism>& involution() const { return involution_; }
  const std::string& label() const { return label_; }

  bool contains(const AlgebraElement& x, double tol = 1e-8) const;
  /// Throws MembershipError when x is not in the algebra.
  void require_member(const AlgebraElement& x, const char* what, double tol = 1e-8) const;

  /// Orthonormal-basis coordinates of x (its projection onto the algebra).
  RVector coordinates(const AlgebraElement& x) const;
  AlgebraElement from_coordinates(const Eigen::Ref<const RVector>& c) const;
  /// Standard normal coefficients over the orthonormal basis.
  AlgebraElement random_element(Rng& rng) const;

 private:
  HermSubspace basis_;
  AlgebraElement unit_;
  Embedding embedding_;
  std::optional<AntiAutomorphism> involution_;
  std::string label_;
};

using Ejc = EmbeddedJordanAlgebra;

/// Special families R_n, C_n, Q_n and spin factors V_n.
///
/// R_n: real symmetric matrices in M_n; involution transpose for either
/// embedding. C_n standard: all of M_n's hermitian part, no involution.
/// C_n universal: a -> (a, a^T) in M_n + M_n with swap-transpose. Q_n:
/// hermitian x in M_2n with J conj(x) J^-1 = x, involution the symplectic
/// transpose; Q_2 universal is realized as the spin factor V_5. V_n
/// universal: span of the unit and a spin system; standard embeddings
/// exist only for V_2, V_3, V_5 (those of R_2, C_2, Q_2).
Ejc make_algebra(Family family, int n, Embedding embedding = Embedding::Standard);

/// Always throws NotSpecialError: the Albert algebra has no embedding.
[[noreturn]] void reject_exceptional();

/// Tensor unit I = (R, C).
Ejc unit_object();

Ejc direct_sum(const Ejc& a, const Ejc& b);

/// a o b = (ab + ba)/2. Throws MembershipError if an operand is outside A.
AlgebraElement jordan_product(const Ejc& algebra, const AlgebraElement& a, const AlgebraElement& b);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  /// Pairwise orthogonal primitive idempotents of A summing to the unit.
  std::vector<AlgebraElement> frame;

  AlgebraElement reconstruct() const;
};

/// Spectral decomposition with a Jordan frame inside A. Ambient spectral
/// projectors are split into primitives of A by diagonalising a random
/// element of each Peirce corner U_q(A).
SpectralDecomposition spectral(const Ejc& algebra, const AlgebraElement& a, std::uint64_t seed = 0);

std::vector<AlgebraElement> random_jordan_frame(const Ejc& algebra, std::uint64_t seed = 0);
int rank(const Ejc& algebra, std::uint64_t seed = 0);

bool in_cone(const Ejc& algebra, const AlgebraElement& a, double tol = 1e-9);
bool is_effect(const Ejc& algebra, const AlgebraElement& a, double tol = 1e-9);
bool is_state_density(const Ejc& algebra, const AlgebraElement& a, double tol = 1e-9);

/// U_a = 2 L_a^2 - L_{a^2} as a matrix in A's orthonormal coordinates.
RMatrix quad_rep(const Ejc& algebra, const AlgebraElement& a);

struct SummandClass {
  /// "R", "C", "Q", "V" or "unclassified".
  std::string family;
  /// Matrix size for R/C/Q, the spin index for V.
  int n = 0;
  int dim = 0;
  int rank = 0;

  std::string name() const;
  friend bool operator==(const SummandClass&, const SummandClass&) = default;
  friend auto operator<=>(const SummandClass&, const SummandClass&) = default;
};

/// Simple EJA type from (dimension, rank) invariants.
SummandClass classify_invariants(int dim, int rank);

struct CenterDecomposition {
  HermSubspace center;
  std::vector<AlgebraElement> central_idempotents;
  /// Summand i has unit central_idempotents[i], ambient compressed to its
  /// support.
  std::vector<Ejc> summands;
  std::vector<int> summand_ranks;
};

CenterDecomposition center_and_summands(const Ejc& algebra, std::uint64_t seed = 0);

std::vector<SummandClass> classify(const Ejc& algebra, std::uint64_t seed = 0);
std::string classification_string(const std::vector<SummandClass>& classes);

/// dim(Fix(Phi)_sa) - dim A; needs the involution.
int reversibility_gap(const Ejc& algebra);

struct AlgebraAudit {
  double unit_residual = 0.0;
  double closure_residual = 0.0;
  double jordan_identity_residual = 0.0;
  double form_associativity_residual = 0.0;
};

/// Residuals of the defining laws on all basis pairs (small algebras) or on
/// `samples` random draws.
AlgebraAudit audit_algebra(const Ejc& algebra, int samples = 100, std::uint64_t seed = 0);

/// Parses the algebra mini-language: terms R<n>, C<n>, Q<n>, V<n> joined by
/// '+', each optionally suffixed @std or @univ (default @std for R/C/Q and
/// @univ for V). Throws ValidationError or NotSpecialError.
Ejc parse_algebra(std::string_view spec);

}  // namespace jordanc
