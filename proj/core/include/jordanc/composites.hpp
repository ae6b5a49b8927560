#pragma once

// Canonical products A (.) B by Jordan closure inside M_A (x) M_B, conjugate
// objects, the cup/counit pair and the composite-level experiments.

#include "jordanc/eja.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jordanc {

enum class ClosureStrategy {
  /// Each round multiplies two random elements of the current span against
  /// every basis vector. A span S is closed iff x o S is in S for generic x.
  GenericElement,
  /// Each round multiplies every new basis vector against every basis vector.
  Pairwise,
};

struct ClosureResult {
  HermSubspace subspace;
  /// Rounds that adjoined at least one vector.
  int rounds = 0;
};

/// Smallest Jordan-closed subspace containing the seed and the unit.
ClosureResult jordan_closure(const StarAlgebra& ambient, const std::vector<AlgebraElement>& seed,
                             double tol = default_tolerance(),
                             ClosureStrategy strategy = ClosureStrategy::GenericElement, std::uint64_t rng_seed = 0);

/// Seeds an existing orthonormal basis (columns) instead of element lists.
ClosureResult jordan_closure(const StarAlgebra& ambient, const RMatrix& seed_coords, double tol,
                             ClosureStrategy strategy, std::uint64_t rng_seed);

struct CompositeResult {
  Ejc product;
  std::string left_label;
  std::string right_label;
  int dim_left = 0;
  int dim_right = 0;
  int closure_rounds = 0;
  /// Sampled Jordan-closure residual of the product basis.
  double closure_residual = 0.0;
  std::vector<SummandClass> classification;
  /// Filled when both factors are universal with reversibility gap 0.
  std::optional<int> fixed_point_dim;
  std::optional<double> fixed_point_residual;

  int dim() const { return product.dim(); }
  int dim_tensor() const { return dim_left * dim_right; }
  int rank() const;
};

struct ProductOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  ClosureStrategy strategy = ClosureStrategy::GenericElement;
  bool classify = true;
  bool fixed_point_check = true;
};

CompositeResult canonical_product(const Ejc& a, const Ejc& b, const ProductOptions& options = {});

/// Memoizes canonical products by operand labels.
class ProductCache {
 public:
  explicit ProductCache(ProductOptions options = {}) : options_(options) {}
  const CompositeResult& get(const Ejc& a, const Ejc& b);

 private:
  ProductOptions options_;
  std::map<std::pair<std::string, std::string>, std::unique_ptr<CompositeResult>> cache_;
};

/// (conj(A), conj(M_A)); the involution is transported by conjugation.
Ejc conjugate_object(const Ejc& a);

/// eta(x) = sum over diagonal block pairs of <Omega|x|Omega>, which equals
/// Tr(a b*) on x = a (x) conj(b).
Complex counit_eval(const StarAlgebra& m, const AlgebraElement& x);

struct CompactStructure {
  /// f = sum_e e (x) conj(e) in M_A (x) conj(M_A).
  AlgebraElement cup;
  /// Hermitian coordinates of the functional x -> <x|f> on the tensor
  /// ambient, evaluated independently as <Omega|x|Omega> per diagonal block.
  RVector counit;
  StarAlgebra pair_ambient;
  /// |f - f'| with f' built from a random unitary mixing of the basis.
  double basis_independence_residual = 0.0;
  double min_eigenvalue = 0.0;
  double hermiticity_residual = 0.0;
  /// |f^dagger - eta|, i.e. cup coordinates against counit coordinates.
  double dagger_residual = 0.0;
};

CompactStructure compact_structure(const Ejc& a, std::uint64_t seed = 0);

struct CupMembership {
  bool member = false;
  double residual = 0.0;
};

CupMembership cup_membership(const Ejc& a, double tol = 1e-8, std::uint64_t seed = 0);
CupMembership cup_membership(const Ejc& a, ProductCache& cache, double tol = 1e-8, std::uint64_t seed = 0);

struct TomographyAudit {
  int dim_tensor = 0;
  int dim_product = 0;
  bool locally_tomographic = false;
};

TomographyAudit tomography_audit(const CompositeResult& product);
TomographyAudit tomography_audit(const Ejc& a, const Ejc& b, const ProductOptions& options = {});

struct DistinguishabilityAudit {
  int rank_product_bound = 0;  // rank A * rank B
  int rank_composite = 0;
  bool supermultiplicative() const { return rank_composite > rank_product_bound; }
};

DistinguishabilityAudit distinguishability_audit(const Ejc& a, const Ejc& b, const CompositeResult& product,
                                                 std::uint64_t seed = 0);
DistinguishabilityAudit distinguishability_audit(const Ejc& a, const Ejc& b, const ProductOptions& options = {});

/// Pure state density p / <p|u> for a primitive idempotent p.
AlgebraElement pure_density(const Ejc& a, const AlgebraElement& primitive);
/// Number of nonzero spectral weights on a Jordan frame of A.
int spectral_support(const Ejc& a, const AlgebraElement& density, std::uint64_t seed = 0, double tol = 1e-9);

struct ProductState {
  /// Trace-form projection of alpha (x) beta onto A (.) B.
  AlgebraElement gamma;
  AlgebraElement marginal_left;
  AlgebraElement marginal_right;
  double marginal_left_residual = 0.0;
  double marginal_right_residual = 0.0;
  int support_gamma = 0;
  int support_left = 0;
  int support_right = 0;
  double min_eigenvalue_gamma = 0.0;

  bool gamma_pure() const { return support_gamma == 1; }
  bool left_pure() const { return support_left == 1; }
  bool right_pure() const { return support_right == 1; }
};

/// Throws ValidationError on non-state inputs and NumericalError when the
/// projected element is not positive.
ProductState product_state(const Ejc& a, const Ejc& b, const CompositeResult& product, const AlgebraElement& alpha,
                           const AlgebraElement& beta, std::uint64_t seed = 0);

struct AssociativityReport {
  int dim_left_nested = 0;   // A (.) (B (.) C)
  int dim_right_nested = 0;  // (A (.) B) (.) C
  double residual = 0.0;     // A(.)(B(.)C) basis projected into (A(.)B)(.)C
  double reverse_residual = 0.0;
  std::vector<SummandClass> classification;
};

/// Index permutation taking hermitian coordinates of M_A (x) (M_B (x) M_C) to
/// those of (M_A (x) M_B) (x) M_C.
std::vector<int> associator_permutation(const StarAlgebra& a, const StarAlgebra& b, const StarAlgebra& c);

AssociativityReport associativity_check(const Ejc& a, const Ejc& b, const Ejc& c, const ProductOptions& options = {});

}  // namespace jordanc
