#pragma once

// Dense arithmetic for finite-dimensional complex *-algebras presented as
// direct sums of full matrix blocks M_{d_1} + ... + M_{d_k}.
//
// Hermitian elements are handled as vectors in a real inner-product space.
// The standard orthonormal hermitian basis of a block M_d is, in row-major
// order over the upper triangle,
//
//   E_rr,   (E_rc + E_cr)/sqrt2,   i(E_rc - E_cr)/sqrt2     (r < c)
//
// and blocks are concatenated. The same family is an orthonormal complex
// basis of the whole algebra, so a hermiticity-preserving map has one real
// matrix that serves both the real and the complexified action.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace jordanc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Default linear-dependency tolerance (relative).
inline constexpr double kDependencyTol = 1e-8;
/// Eigenvalues closer than this share one spectral projector.
inline constexpr double kEigenGroupTol = 1e-7;
/// Relative hermiticity tolerance used for input validation.
inline constexpr double kHermitianTol = 1e-9;

/// Process-wide dependency tolerance used when callers pass none.
double default_tolerance();
void set_default_tolerance(double tol);

class StarAlgebra {
 public:
  /// The complex scalars, M_1.
  StarAlgebra();
  explicit StarAlgebra(std::vector<int> blocks, std::string label = {});

  static StarAlgebra full_matrix(int n);

  std::span<const int> blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_size(int b) const { return blocks_[static_cast<std::size_t>(b)]; }
  /// Complex dimension, equal to the real dimension of the hermitian part.
  int dim() const { return dim_; }
  /// First hermitian coordinate belonging to block b.
  int coord_offset(int b) const { return offsets_[static_cast<std::size_t>(b)]; }
  const std::string& label() const { return label_; }

  bool same_shape(const StarAlgebra& other) const { return blocks_ == other.blocks_; }
  friend bool operator==(const StarAlgebra& a, const StarAlgebra& b) { return a.same_shape(b); }

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int dim_ = 0;
  std::string label_;
};

std::string default_label(std::span<const int> blocks);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::vector<CMatrix> blocks);

  static AlgebraElement zero(const StarAlgebra& algebra);
  static AlgebraElement identity(const StarAlgebra& algebra);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const CMatrix& block(int b) const { return blocks_[static_cast<std::size_t>(b)]; }
  CMatrix& block(int b) { return blocks_[static_cast<std::size_t>(b)]; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }

  bool conforms_to(const StarAlgebra& algebra) const;
  bool same_shape(const AlgebraElement& other) const;

  AlgebraElement adjoint() const;
  /// Entrywise complex conjugate, i.e. the image in the conjugate algebra.
  AlgebraElement conjugate() const;
  AlgebraElement transpose() const;

  bool is_hermitian(double tol = kHermitianTol) const;
  /// Trace-form norm sqrt(Tr(x x*)).
  double norm() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, Complex s) { return a *= s; }
  friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, double s) { return a *= Complex(s, 0.0); }
  friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= Complex(s, 0.0); }
  /// Associative (ambient) product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

 private:
  std::vector<CMatrix> blocks_;
};

void require_same_shape(const AlgebraElement& x, const AlgebraElement& y, const char* what);

/// <x|y> = Tr(x y*), summed over blocks with unit weight.
Complex trace_inner(const AlgebraElement& x, const AlgebraElement& y);
double real_inner(const AlgebraElement& x, const AlgebraElement& y);

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// (xy + yx)/2.
AlgebraElement jordan(const AlgebraElement& x, const AlgebraElement& y);

StarAlgebra tensor(const StarAlgebra& a, const StarAlgebra& b);
/// Blockwise Kronecker product; block (i, j) sits at index i * nb + j.
AlgebraElement tensor(const AlgebraElement& x, const AlgebraElement& y);

StarAlgebra conjugate(const StarAlgebra& a);
StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b);
AlgebraElement direct_sum(const AlgebraElement& x, const AlgebraElement& y);

// --- coordinates -----------------------------------------------------------

/// Real coordinates of the hermitian part (x + x*)/2.
RVector herm_coords(const AlgebraElement& x);
/// Complex coordinates <x|h_k> of an arbitrary element.
CVector complex_coords(const AlgebraElement& x);
AlgebraElement from_herm_coords(const StarAlgebra& algebra, const Eigen::Ref<const RVector>& v);
AlgebraElement from_complex_coords(const StarAlgebra& algebra, const Eigen::Ref<const CVector>& v);
AlgebraElement herm_basis_element(const StarAlgebra& algebra, int k);

// --- spectral decomposition ------------------------------------------------

struct HermEig {
  /// Distinct eigenvalues (clustered), descending.
  std::vector<double> eigenvalues;
  std::vector<int> multiplicities;
  std::vector<AlgebraElement> projectors;
  /// Every ambient eigenvalue with multiplicity, descending.
  std::vector<double> spectrum;
};

/// Throws ValidationError on non-hermitian input.
HermEig herm_eig(const AlgebraElement& x, double group_tol = kEigenGroupTol);

double min_eigenvalue(const AlgebraElement& x);

// --- real subspaces of the hermitian part ----------------------------------

class HermSubspace {
 public:
  HermSubspace() = default;
  /// `basis` holds orthonormal hermitian coordinate columns.
  HermSubspace(StarAlgebra ambient, RMatrix basis);

  const StarAlgebra& ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const RMatrix& coords() const { return basis_; }

  AlgebraElement element(int i) const;
  std::vector<AlgebraElement> elements() const;

  RVector project(const Eigen::Ref<const RVector>& v) const;
  AlgebraElement project(const AlgebraElement& x) const;
  /// Norm of the component orthogonal to the subspace.
  double residual(const Eigen::Ref<const RVector>& v) const;
  double residual(const AlgebraElement& x) const;
  /// Relative membership test: residual <= tol * max(|x|, 1e-300).
  bool contains(const AlgebraElement& x, double tol) const;

  /// max |G - I| over the Gram matrix of the basis.
  double orthonormality_defect() const;

 private:
  StarAlgebra ambient_;
  RMatrix basis_;
};

/// Incremental Gram-Schmidt (two-pass) for growing an orthonormal basis in
/// a fixed real coordinate space.
class SubspaceBuilder {
 public:
  SubspaceBuilder(int ambient_dim, double tol);

  /// Adjoins the columns of `candidates` in order, keeping those whose
  /// residual exceeds tol * scale (scale <= 0 means the column's own norm).
  /// Returns the number of vectors adjoined. Throws NumericalError if the
  /// basis would exceed the ambient dimension.
  int add(const Eigen::Ref<const RMatrix>& candidates, double scale = 0.0);
  bool add_one(const Eigen::Ref<const RVector>& v, double scale = 0.0);

  int dim() const { return dim_; }
  int ambient_dim() const { return static_cast<int>(q_.rows()); }
  auto basis() const { return q_.leftCols(dim_); }
  HermSubspace subspace(const StarAlgebra& ambient) const;

 private:
  RMatrix q_;
  int dim_ = 0;
  double tol_;
};

/// Orthonormal basis of the real span of hermitian `vectors`; a vector is
/// dropped when its residual is below tol times the largest input norm.
HermSubspace orthonormalize(const StarAlgebra& ambient, const std::vector<AlgebraElement>& vectors,
                            double tol = default_tolerance());

// --- antiautomorphisms -----------------------------------------------------

/// *-antiautomorphism x -> (U_b x_{sigma(b)}^T U_b^*)_b of a block algebra.
class AntiAutomorphism {
 public:
  AntiAutomorphism(StarAlgebra domain, std::vector<int> permutation,
                   std::vector<CMatrix> conjugators);

  /// Plain transpose on every block.
  static AntiAutomorphism transpose(const StarAlgebra& domain);

  const StarAlgebra& domain() const { return domain_; }
  const std::vector<int>& permutation() const { return permutation_; }
  const std::vector<CMatrix>& conjugators() const { return conjugators_; }

  AlgebraElement operator()(const AlgebraElement& x) const;

  /// Real matrix of the restriction to the hermitian part.
  RMatrix herm_matrix() const;
  /// max |Phi(Phi(h_k)) - h_k| over the hermitian basis.
  double involution_defect() const;
  /// Largest |Phi(xy) - Phi(y)Phi(x)| over random pairs.
  double reversal_residual(Rng& rng, int samples) const;

  /// Transport to the conjugate algebra: conjugators are conjugated.
  AntiAutomorphism conjugate() const;

  friend AntiAutomorphism tensor(const AntiAutomorphism& a, const AntiAutomorphism& b);
  friend AntiAutomorphism direct_sum(const AntiAutomorphism& a, const AntiAutomorphism& b);

 private:
  StarAlgebra domain_;
  std::vector<int> permutation_;
  std::vector<CMatrix> conjugators_;
};

/// Fix(Phi) restricted to hermitian elements. Requires Phi to be an
/// involution (checked).
HermSubspace fixed_hermitian_subspace(const AntiAutomorphism& phi, double tol = default_tolerance());

/// Complex dimension of the unital *-subalgebra generated by `generators`.
int generated_star_algebra_dim(const std::vector<AlgebraElement>& generators,
                               const StarAlgebra& ambient, double tol = default_tolerance());

/// Finds the antiautomorphism fixing every listed element. The list must
/// generate the ambient algebra.
AntiAutomorphism solve_antiautomorphism(const std::vector<AlgebraElement>& fixed,
                                        const StarAlgebra& ambient, double tol = 1e-9);

// --- spin systems ----------------------------------------------------------

struct SpinSystem {
  StarAlgebra ambient;
  std::vector<AlgebraElement> generators;
};

/// n anticommuting hermitian unitaries as Pauli words: in M_{2^k} for
/// n = 2k, in M_{2^k} + M_{2^k} for n = 2k + 1 (last generator flips sign
/// across the two blocks).
SpinSystem spin_system(int n);

// --- random draws ----------------------------------------------------------

double standard_normal(Rng& rng);
AlgebraElement random_hermitian(const StarAlgebra& algebra, Rng& rng);
AlgebraElement random_element(const StarAlgebra& algebra, Rng& rng);
CMatrix random_unitary(int d, Rng& rng);

}  // namespace jordanc
