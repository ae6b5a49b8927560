#include "jordanc/composites.hpp"

#include "jordanc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace jordanc {

namespace {

/// x o b for hermitian x, b: one block product per block.
AlgebraElement herm_jordan(const AlgebraElement& x, const AlgebraElement& b) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(x.num_blocks()));
  for (int k = 0; k < x.num_blocks(); ++k) {
    CMatrix m = x.block(k) * b.block(k);
    out.emplace_back(0.5 * (m + m.adjoint()));
  }
  return AlgebraElement(std::move(out));
}

class ClosureState {
 public:
  ClosureState(const StarAlgebra& ambient, double tol) : ambient_(ambient), builder_(ambient.dim(), tol) {}

  int add(const RMatrix& candidates) {
    const int added = builder_.add(candidates);
    return added;
  }

  int dim() const { return builder_.dim(); }

  const AlgebraElement& element(int i) {
    while (static_cast<int>(cache_.size()) <= i)
      cache_.push_back(from_herm_coords(ambient_, builder_.basis().col(static_cast<Eigen::Index>(cache_.size()))));
    return cache_[static_cast<std::size_t>(i)];
  }

  AlgebraElement random_member(Rng& rng) {
    RVector c(dim());
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = standard_normal(rng);
    return from_herm_coords(ambient_, builder_.basis() * c);
  }

  HermSubspace subspace() const { return builder_.subspace(ambient_); }

 private:
  StarAlgebra ambient_;
  SubspaceBuilder builder_;
  // deque: references stay valid while later elements are materialized.
  std::deque<AlgebraElement> cache_;
};

}  // namespace

ClosureResult jordan_closure(const StarAlgebra& ambient, const RMatrix& seed_coords, double tol,
                             ClosureStrategy strategy, std::uint64_t rng_seed) {
  if (seed_coords.rows() != ambient.dim()) throw StructuralError("jordan_closure: seed from another ambient");
  ClosureState state(ambient, tol);
  state.add(herm_coords(AlgebraElement::identity(ambient)));
  state.add(seed_coords);

  ClosureResult result;
  if (strategy == ClosureStrategy::GenericElement) {
    Rng rng(rng_seed);
    constexpr int kDraws = 2;
    while (true) {
      int added = 0;
      for (int draw = 0; draw < kDraws; ++draw) {
        const AlgebraElement x = state.random_member(rng);
        const int n = state.dim();
        RMatrix cands(ambient.dim(), n);
        for (int j = 0; j < n; ++j) cands.col(j) = herm_coords(herm_jordan(x, state.element(j)));
        added += state.add(cands);
      }
      if (added == 0) break;
      ++result.rounds;
    }
  } else {
    int begin = 0;
    while (begin < state.dim()) {
      const int end = state.dim();
      RMatrix cands(ambient.dim(), 0);
      std::vector<RVector> cols;
      for (int i = begin; i < end; ++i)
        for (int j = 0; j <= i; ++j) cols.push_back(herm_coords(herm_jordan(state.element(i), state.element(j))));
      cands.resize(ambient.dim(), static_cast<Eigen::Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) cands.col(static_cast<Eigen::Index>(k)) = cols[k];
      if (state.add(cands) > 0) ++result.rounds;
      begin = end;
    }
  }
  result.subspace = state.subspace();
  return result;
}

ClosureResult jordan_closure(const StarAlgebra& ambient, const std::vector<AlgebraElement>& seed, double tol,
                             ClosureStrategy strategy, std::uint64_t rng_seed) {
  RMatrix coords(ambient.dim(), static_cast<Eigen::Index>(seed.size()));
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (!seed[i].conforms_to(ambient)) throw StructuralError("jordan_closure: seed element from another ambient");
    if (!seed[i].is_hermitian()) throw ValidationError("jordan_closure: seed must be hermitian");
    coords.col(static_cast<Eigen::Index>(i)) = herm_coords(seed[i]);
  }
  return jordan_closure(ambient, coords, tol, strategy, rng_seed);
}

// --- canonical product -----------------------------------------------------

int CompositeResult::rank() const {
  if (classification.empty()) return jordanc::rank(product);
  int r = 0;
  for (const auto& c : classification) r += c.rank;
  return r;
}

CompositeResult canonical_product(const Ejc& a, const Ejc& b, const ProductOptions& options) {
  const StarAlgebra ambient = tensor(a.ambient(), b.ambient());
  const auto ea = a.basis().elements();
  const auto eb = b.basis().elements();
  RMatrix seed(ambient.dim(), a.dim() * b.dim());
  Eigen::Index col = 0;
  for (const auto& x : ea)
    for (const auto& y : eb) seed.col(col++) = herm_coords(tensor(x, y));
  ClosureResult closure = jordan_closure(ambient, seed, options.tol, options.strategy, options.seed);

  std::optional<AntiAutomorphism> phi;
  if (a.involution() && b.involution()) phi = tensor(*a.involution(), *b.involution());
  Embedding e = Embedding::Derived;
  if (a.embedding() == b.embedding() && a.embedding() != Embedding::Derived) e = a.embedding();

  CompositeResult out{Ejc(std::move(closure.subspace), e, std::move(phi), a.label() + "⊙" + b.label()),
                      a.label(),
                      b.label(),
                      a.dim(),
                      b.dim(),
                      closure.rounds,
                      0.0,
                      {},
                      std::nullopt,
                      std::nullopt};

  Rng rng(options.seed + 17);
  const auto& basis = out.product.basis();
  std::uniform_int_distribution<int> pick(0, out.dim() - 1);
  for (int s = 0; s < 64; ++s) {
    const AlgebraElement x = basis.element(pick(rng));
    const AlgebraElement y = basis.element(pick(rng));
    out.closure_residual = std::max(out.closure_residual, basis.residual(herm_jordan(x, y)));
  }
  for (int s = 0; s < 8; ++s) {
    AlgebraElement x = out.product.random_element(rng);
    AlgebraElement y = out.product.random_element(rng);
    x = (1.0 / x.norm()) * x;
    y = (1.0 / y.norm()) * y;
    out.closure_residual = std::max(out.closure_residual, basis.residual(herm_jordan(x, y)));
  }

  if (options.classify) out.classification = classify(out.product, options.seed);

  if (options.fixed_point_check && out.product.involution() && a.embedding() == Embedding::Universal &&
      b.embedding() == Embedding::Universal && reversibility_gap(a) == 0 && reversibility_gap(b) == 0) {
    const HermSubspace fix = fixed_hermitian_subspace(*out.product.involution(), options.tol);
    out.fixed_point_dim = fix.dim();
    const RMatrix& p = out.product.basis().coords();
    const RMatrix r = p - fix.coords() * (fix.coords().transpose() * p);
    out.fixed_point_residual = r.colwise().norm().maxCoeff();
  }
  return out;
}

const CompositeResult& ProductCache::get(const Ejc& a, const Ejc& b) {
  auto key = std::make_pair(a.label(), b.label());
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(std::move(key), std::make_unique<CompositeResult>(canonical_product(a, b, options_))).first;
  return *it->second;
}

// --- conjugates and compact structure --------------------------------------

namespace {

std::string conjugate_label(const std::string& label) {
  if (label.size() > 6 && label.rfind("conj(", 0) == 0 && label.back() == ')') return label.substr(5, label.size() - 6);
  return "conj(" + label + ")";
}

AlgebraElement cup_from_basis(const std::vector<AlgebraElement>& basis) {
  AlgebraElement f = tensor(basis.front(), basis.front().conjugate());
  for (std::size_t k = 1; k < basis.size(); ++k) f += tensor(basis[k], basis[k].conjugate());
  return f;
}

}  // namespace

Complex counit_eval(const StarAlgebra& m, const AlgebraElement& x) {
  const int nb = m.num_blocks();
  if (x.num_blocks() != nb * nb) throw StructuralError("counit: element is not in M (x) conj(M)");
  Complex v = 0.0;
  for (int i = 0; i < nb; ++i) {
    const int d = m.block_size(i);
    const CMatrix& blk = x.block(i * nb + i);
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) v += blk(r * d + r, s * d + s);
  }
  return v;
}

Ejc conjugate_object(const Ejc& a) {
  const StarAlgebra amb = conjugate(a.ambient());
  RMatrix coords(amb.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) coords.col(j) = herm_coords(a.basis().element(j).conjugate());
  std::optional<AntiAutomorphism> phi;
  if (a.involution()) phi = a.involution()->conjugate();
  return Ejc(HermSubspace(amb, std::move(coords)), a.embedding(), std::move(phi), conjugate_label(a.label()));
}

CompactStructure compact_structure(const Ejc& a, std::uint64_t seed) {
  const StarAlgebra& m = a.ambient();
  const int n = m.dim();
  std::vector<AlgebraElement> herm;
  herm.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) herm.push_back(herm_basis_element(m, k));

  CompactStructure cs;
  cs.pair_ambient = tensor(m, conjugate(m));
  cs.cup = cup_from_basis(herm);

  Rng rng(seed);
  const CMatrix u = random_unitary(n, rng);
  std::vector<AlgebraElement> rotated;
  rotated.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    AlgebraElement e = AlgebraElement::zero(m);
    for (int j = 0; j < n; ++j) e += u(j, k) * herm[static_cast<std::size_t>(j)];
    rotated.push_back(std::move(e));
  }
  cs.basis_independence_residual = (cs.cup - cup_from_basis(rotated)).norm();
  cs.hermiticity_residual = (cs.cup - cs.cup.adjoint()).norm();
  cs.min_eigenvalue = min_eigenvalue(cs.cup);

  cs.counit.resize(cs.pair_ambient.dim());
  for (int t = 0; t < cs.pair_ambient.dim(); ++t)
    cs.counit[t] = counit_eval(m, herm_basis_element(cs.pair_ambient, t)).real();
  cs.dagger_residual = (herm_coords(cs.cup) - cs.counit).norm();
  return cs;
}

CupMembership cup_membership(const Ejc& a, ProductCache& cache, double tol, std::uint64_t seed) {
  const CompactStructure cs = compact_structure(a, seed);
  const CompositeResult& p = cache.get(a, conjugate_object(a));
  CupMembership out;
  out.residual = p.product.basis().residual(cs.cup) / cs.cup.norm();
  out.member = out.residual <= tol;
  return out;
}

CupMembership cup_membership(const Ejc& a, double tol, std::uint64_t seed) {
  ProductOptions opts;
  opts.classify = false;
  opts.fixed_point_check = false;
  opts.seed = seed;
  ProductCache cache(opts);
  return cup_membership(a, cache, tol, seed);
}

// --- audits ----------------------------------------------------------------

TomographyAudit tomography_audit(const CompositeResult& product) {
  return {product.dim_tensor(), product.dim(), product.dim_tensor() == product.dim()};
}

TomographyAudit tomography_audit(const Ejc& a, const Ejc& b, const ProductOptions& options) {
  ProductOptions o = options;
  o.classify = false;
  o.fixed_point_check = false;
  return tomography_audit(canonical_product(a, b, o));
}

DistinguishabilityAudit distinguishability_audit(const Ejc& a, const Ejc& b, const CompositeResult& product,
                                                 std::uint64_t seed) {
  return {rank(a, seed) * rank(b, seed), product.rank()};
}

DistinguishabilityAudit distinguishability_audit(const Ejc& a, const Ejc& b, const ProductOptions& options) {
  ProductOptions o = options;
  o.classify = false;
  o.fixed_point_check = false;
  const CompositeResult p = canonical_product(a, b, o);
  return {rank(a, options.seed) * rank(b, options.seed), rank(p.product, options.seed)};
}

AlgebraElement pure_density(const Ejc& a, const AlgebraElement& primitive) {
  a.require_member(primitive, "pure_density");
  const double t = real_inner(primitive, a.unit());
  if (t <= 0.0) throw ValidationError("pure_density: idempotent has zero trace");
  return (1.0 / t) * primitive;
}

int spectral_support(const Ejc& a, const AlgebraElement& density, std::uint64_t seed, double tol) {
  const SpectralDecomposition sd = spectral(a, density, seed);
  double top = 0.0;
  for (double t : sd.eigenvalues) top = std::max(top, std::abs(t));
  int count = 0;
  for (double t : sd.eigenvalues)
    if (std::abs(t) > tol * std::max(top, 1e-300)) ++count;
  return count;
}

ProductState product_state(const Ejc& a, const Ejc& b, const CompositeResult& product, const AlgebraElement& alpha,
                           const AlgebraElement& beta, std::uint64_t seed) {
  if (!is_state_density(a, alpha)) throw ValidationError("product_state: alpha is not a state density");
  if (!is_state_density(b, beta)) throw ValidationError("product_state: beta is not a state density");
  const Ejc& ab = product.product;
  if (!ab.ambient().same_shape(tensor(a.ambient(), b.ambient())))
    throw StructuralError("product_state: composite does not match the factors");

  ProductState ps;
  ps.gamma = ab.basis().project(tensor(alpha, beta));
  ps.min_eigenvalue_gamma = min_eigenvalue(ps.gamma);
  if (ps.min_eigenvalue_gamma < -1e-9) {
    std::ostringstream os;
    os << "product_state: conditional expectation failed (min eigenvalue " << ps.min_eigenvalue_gamma << ")";
    throw NumericalError(os.str());
  }

  RVector ca(a.dim());
  for (int k = 0; k < a.dim(); ++k) ca[k] = real_inner(ps.gamma, tensor(a.basis().element(k), b.unit()));
  RVector cb(b.dim());
  for (int k = 0; k < b.dim(); ++k) cb[k] = real_inner(ps.gamma, tensor(a.unit(), b.basis().element(k)));
  ps.marginal_left = a.from_coordinates(ca);
  ps.marginal_right = b.from_coordinates(cb);
  ps.marginal_left_residual = (ps.marginal_left - alpha).norm();
  ps.marginal_right_residual = (ps.marginal_right - beta).norm();

  ps.support_gamma = spectral_support(ab, ps.gamma, seed);
  ps.support_left = spectral_support(a, ps.marginal_left, seed);
  ps.support_right = spectral_support(b, ps.marginal_right, seed);
  return ps;
}

// --- associativity ---------------------------------------------------------

std::vector<int> associator_permutation(const StarAlgebra& a, const StarAlgebra& b, const StarAlgebra& c) {
  const StarAlgebra left = tensor(a, tensor(b, c));
  const StarAlgebra right = tensor(tensor(a, b), c);
  const int na = a.num_blocks();
  const int nb = b.num_blocks();
  const int nc = c.num_blocks();
  std::vector<int> perm(static_cast<std::size_t>(left.dim()));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nc; ++k) {
        const int lb = i * (nb * nc) + (j * nc + k);
        const int rb = (i * nb + j) * nc + k;
        const int d = left.block_size(lb);
        if (d != right.block_size(rb)) throw NumericalError("associator: block sizes disagree");
        // Kronecker products are associative, so local coordinates coincide.
        for (int t = 0; t < d * d; ++t)
          perm[static_cast<std::size_t>(left.coord_offset(lb) + t)] = right.coord_offset(rb) + t;
      }
  return perm;
}

AssociativityReport associativity_check(const Ejc& a, const Ejc& b, const Ejc& c, const ProductOptions& options) {
  ProductOptions inner = options;
  inner.classify = false;
  inner.fixed_point_check = false;
  const CompositeResult bc = canonical_product(b, c, inner);
  const CompositeResult left = canonical_product(a, bc.product, inner);
  const CompositeResult ab = canonical_product(a, b, inner);
  ProductOptions outer = inner;
  outer.classify = options.classify;
  const CompositeResult right = canonical_product(ab.product, c, outer);

  const std::vector<int> perm = associator_permutation(a.ambient(), b.ambient(), c.ambient());
  const RMatrix& lc = left.product.basis().coords();
  RMatrix moved(lc.rows(), lc.cols());
  for (Eigen::Index r = 0; r < lc.rows(); ++r) moved.row(perm[static_cast<std::size_t>(r)]) = lc.row(r);

  AssociativityReport rep;
  rep.dim_left_nested = left.dim();
  rep.dim_right_nested = right.dim();
  const RMatrix& rc = right.product.basis().coords();
  rep.residual = (moved - rc * (rc.transpose() * moved)).colwise().norm().maxCoeff();
  rep.reverse_residual = (rc - moved * (moved.transpose() * rc)).colwise().norm().maxCoeff();
  rep.classification = right.classification;
  return rep;
}

}  // namespace jordanc
