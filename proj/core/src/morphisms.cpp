#include "jordanc/morphisms.hpp"

#include "jordanc/errors.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <set>

namespace jordanc {

namespace {

using SparseR = Eigen::SparseMatrix<double>;

SparseR product_basis_sparse(const StarAlgebra& a, const StarAlgebra& b) {
  const StarAlgebra ab = tensor(a, b);
  std::vector<AlgebraElement> hb;
  hb.reserve(static_cast<std::size_t>(b.dim()));
  for (int l = 0; l < b.dim(); ++l) hb.push_back(herm_basis_element(b, l));
  std::vector<Eigen::Triplet<double>> trips;
  for (int k = 0; k < a.dim(); ++k) {
    const AlgebraElement ha = herm_basis_element(a, k);
    for (int l = 0; l < b.dim(); ++l) {
      const RVector v = herm_coords(tensor(ha, hb[static_cast<std::size_t>(l)]));
      for (Eigen::Index t = 0; t < v.size(); ++t)
        if (std::abs(v[t]) > 1e-14) trips.emplace_back(static_cast<int>(t), k * b.dim() + l, v[t]);
    }
  }
  SparseR w(ab.dim(), a.dim() * b.dim());
  w.setFromTriplets(trips.begin(), trips.end());
  return w;
}

RMatrix kron_real(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_map_shape(const MorphismMap& phi, const StarAlgebra& src, const StarAlgebra& tgt, const char* what) {
  if (!phi.source().same_shape(src) || !phi.target().same_shape(tgt))
    throw StructuralError(std::string(what) + ": map does not act between the given ambients");
}

/// max_j |(1 - P) c_j| / max_j |c_j| for the columns of `images`.
double relative_residual(const RMatrix& basis, const RMatrix& images) {
  const double scale = images.colwise().norm().maxCoeff();
  if (scale == 0.0) return 0.0;
  const RMatrix r = images - basis * (basis.transpose() * images);
  return r.colwise().norm().maxCoeff() / scale;
}

}  // namespace

// --- MorphismMap -----------------------------------------------------------

MorphismMap::MorphismMap(StarAlgebra source, StarAlgebra target, RMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw StructuralError("MorphismMap: matrix shape does not match the ambients");
}

MorphismMap MorphismMap::identity(const StarAlgebra& algebra) {
  return MorphismMap(algebra, algebra, RMatrix::Identity(algebra.dim(), algebra.dim()));
}

MorphismMap MorphismMap::from_function(const StarAlgebra& source, const StarAlgebra& target,
                                       const std::function<AlgebraElement(const AlgebraElement&)>& f) {
  RMatrix m(target.dim(), source.dim());
  for (int k = 0; k < source.dim(); ++k) {
    const AlgebraElement y = f(herm_basis_element(source, k));
    if (!y.conforms_to(target)) throw StructuralError("MorphismMap::from_function: image in the wrong algebra");
    if (!y.is_hermitian(1e-9)) throw ValidationError("MorphismMap::from_function: map does not preserve hermiticity");
    m.col(k) = herm_coords(y);
  }
  return MorphismMap(source, target, std::move(m));
}

MorphismMap MorphismMap::functional(const StarAlgebra& source, const AlgebraElement& density) {
  if (!density.conforms_to(source)) throw StructuralError("MorphismMap::functional: density in the wrong algebra");
  if (!density.is_hermitian()) throw ValidationError("MorphismMap::functional: density must be hermitian");
  return MorphismMap(source, StarAlgebra(), herm_coords(density).transpose());
}

MorphismMap MorphismMap::from_kraus(const StarAlgebra& source, const StarAlgebra& target,
                                    const std::vector<std::vector<std::vector<CMatrix>>>& kraus) {
  if (static_cast<int>(kraus.size()) != target.num_blocks())
    throw StructuralError("from_kraus: one Kraus family list per target block");
  for (const auto& row : kraus)
    if (static_cast<int>(row.size()) != source.num_blocks())
      throw StructuralError("from_kraus: one Kraus family per source block");
  return from_function(source, target, [&](const AlgebraElement& x) {
    AlgebraElement y = AlgebraElement::zero(target);
    for (int t = 0; t < target.num_blocks(); ++t)
      for (int s = 0; s < source.num_blocks(); ++s)
        for (const auto& k : kraus[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)]) {
          if (k.rows() != target.block_size(t) || k.cols() != source.block_size(s))
            throw StructuralError("from_kraus: Kraus operator shape mismatch");
          y.block(t) += k * x.block(s) * k.adjoint();
        }
    return y;
  });
}

AlgebraElement MorphismMap::apply(const AlgebraElement& x) const {
  if (!x.conforms_to(source_)) throw StructuralError("MorphismMap::apply: element outside the source algebra");
  const CVector c = complex_coords(x);
  const CVector y = matrix_.cast<Complex>() * c;
  return from_complex_coords(target_, y);
}

MorphismMap dagger(const MorphismMap& phi) { return MorphismMap(phi.target(), phi.source(), phi.matrix().transpose()); }

MorphismMap compose(const MorphismMap& phi, const MorphismMap& psi) {
  if (!psi.target().same_shape(phi.source())) throw StructuralError("compose: maps are not composable");
  return MorphismMap(psi.source(), phi.target(), phi.matrix() * psi.matrix());
}

RMatrix product_basis_matrix(const StarAlgebra& a, const StarAlgebra& b) {
  return RMatrix(product_basis_sparse(a, b));
}

MorphismMap tensor_map(const MorphismMap& phi, const MorphismMap& psi) {
  const SparseR ws = product_basis_sparse(phi.source(), psi.source());
  const SparseR wt = product_basis_sparse(phi.target(), psi.target());
  const RMatrix k = kron_real(phi.matrix(), psi.matrix());
  const RMatrix left = wt * k;
  RMatrix m = (ws * left.transpose()).transpose();
  return MorphismMap(tensor(phi.source(), psi.source()), tensor(phi.target(), psi.target()), std::move(m));
}

MorphismMap swap_map(const StarAlgebra& a, const StarAlgebra& b) {
  const SparseR wab = product_basis_sparse(a, b);
  const SparseR wba = product_basis_sparse(b, a);
  std::vector<Eigen::Triplet<double>> trips;
  for (int k = 0; k < a.dim(); ++k)
    for (int l = 0; l < b.dim(); ++l) trips.emplace_back(l * a.dim() + k, k * b.dim() + l, 1.0);
  SparseR p(a.dim() * b.dim(), a.dim() * b.dim());
  p.setFromTriplets(trips.begin(), trips.end());
  const SparseR m = wba * p * SparseR(wab.transpose());
  return MorphismMap(tensor(a, b), tensor(b, a), RMatrix(m));
}

double distance(const MorphismMap& phi, const MorphismMap& psi) {
  require_map_shape(phi, psi.source(), psi.target(), "distance");
  return (phi.matrix() - psi.matrix()).norm();
}

// --- predicates ------------------------------------------------------------

CpResult is_cp(const MorphismMap& phi, double tol) {
  const StarAlgebra& src = phi.source();
  const StarAlgebra& tgt = phi.target();
  CpResult out{true, std::numeric_limits<double>::infinity()};
  for (int s = 0; s < src.num_blocks(); ++s) {
    const int d = src.block_size(s);
    std::vector<CMatrix> choi;
    for (int t = 0; t < tgt.num_blocks(); ++t) {
      const int dt = tgt.block_size(t);
      choi.push_back(CMatrix::Zero(d * dt, d * dt));
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        AlgebraElement e = AlgebraElement::zero(src);
        e.block(s)(i, j) = 1.0;
        const AlgebraElement y = phi.apply(e);
        for (int t = 0; t < tgt.num_blocks(); ++t) {
          const int dt = tgt.block_size(t);
          choi[static_cast<std::size_t>(t)].block(i * dt, j * dt, dt, dt) = y.block(t);
        }
      }
    for (auto& c : choi) {
      const CMatrix h = 0.5 * (c + c.adjoint());
      Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
      const double lo = es.eigenvalues().minCoeff();
      out.min_choi_eigenvalue = std::min(out.min_choi_eigenvalue, lo);
      const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
      if (lo < -tol * scale) out.cp = false;
    }
  }
  return out;
}

PreservationResult is_jordan_preserving(const MorphismMap& phi, const Ejc& a, const Ejc& b, double tol) {
  require_map_shape(phi, a.ambient(), b.ambient(), "is_jordan_preserving");
  PreservationResult out;
  out.residual = relative_residual(b.basis().coords(), phi.matrix() * a.basis().coords());
  out.preserved = out.residual <= tol;
  return out;
}

CjpResult is_cjp_relative(const MorphismMap& phi, const Ejc& a, const Ejc& b, const std::vector<Ejc>& witnesses,
                          ProductCache& cache, double tol) {
  require_map_shape(phi, a.ambient(), b.ambient(), "is_cjp_relative");
  std::vector<Ejc> all{unit_object(), conjugate_object(a)};
  all.insert(all.end(), witnesses.begin(), witnesses.end());
  std::set<std::string> seen;
  CjpResult out;
  out.cjp_relative = true;
  for (const Ejc& c : all) {
    if (!seen.insert(c.label()).second) continue;
    const CompositeResult& ac = cache.get(a, c);
    const CompositeResult& bc = cache.get(b, c);
    const MorphismMap m = tensor_map(phi, MorphismMap::identity(c.ambient()));
    WitnessResult w;
    w.witness = c.label();
    w.residual = relative_residual(bc.product.basis().coords(), m.matrix() * ac.product.basis().coords());
    w.preserved = w.residual <= tol;
    out.cjp_relative = out.cjp_relative && w.preserved;
    out.max_residual = std::max(out.max_residual, w.residual);
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

CjpResult is_cjp_relative(const MorphismMap& phi, const Ejc& a, const Ejc& b, const std::vector<Ejc>& witnesses,
                          double tol) {
  ProductOptions opts;
  opts.classify = false;
  opts.fixed_point_check = false;
  ProductCache cache(opts);
  return is_cjp_relative(phi, a, b, witnesses, cache, tol);
}

MorphismMap state_as_morphism(const Ejc& a, const AlgebraElement& density) {
  a.require_member(density, "state_as_morphism");
  if (!is_state_density(a, density)) throw ValidationError("state_as_morphism: not a state density");
  return MorphismMap::functional(a.ambient(), density);
}

MorphismMap gamma_iso(const Ejc& a) {
  if (!a.involution()) throw PreconditionError("gamma_iso: " + a.label() + " carries no canonical involution");
  const AntiAutomorphism phi = *a.involution();
  return MorphismMap::from_function(conjugate(a.ambient()), a.ambient(),
                                    [&phi](const AlgebraElement& y) { return phi(y.transpose()); });
}

GammaReport gamma_check(const Ejc& a, std::uint64_t seed, int samples) {
  const MorphismMap g = gamma_iso(a);
  const StarAlgebra conj_amb = conjugate(a.ambient());
  Rng rng(seed);
  GammaReport rep;
  for (int s = 0; s < samples; ++s) {
    const AlgebraElement y1 = random_element(conj_amb, rng);
    const AlgebraElement y2 = random_element(conj_amb, rng);
    const double scale = y1.norm() * y2.norm();
    rep.multiplicativity_residual =
        std::max(rep.multiplicativity_residual, (g.apply(y1 * y2) - g.apply(y1) * g.apply(y2)).norm() / scale);
  }
  const Ejc abar = conjugate_object(a);
  rep.image_residual = relative_residual(a.basis().coords(), g.matrix() * abar.basis().coords());

  const AlgebraElement dens = random_state_density(a, rng);
  const MorphismMap chain = tensor_map(MorphismMap::functional(a.ambient(), dens), g);
  const CompactStructure cs = compact_structure(a, seed);
  rep.chain_residual = (chain.apply(cs.cup) - g.apply(dens.conjugate())).norm();
  return rep;
}

// --- compact structure as maps ---------------------------------------------

MorphismMap cup_map(const Ejc& a) {
  const CompactStructure cs = compact_structure(a);
  return MorphismMap(StarAlgebra(), cs.pair_ambient, RMatrix(herm_coords(cs.cup)));
}

MorphismMap counit_map(const Ejc& a) {
  const CompactStructure cs = compact_structure(a);
  return MorphismMap(cs.pair_ambient, StarAlgebra(), cs.counit.transpose());
}

SnakeReport snake_check(const Ejc& a, std::uint64_t seed) {
  const StarAlgebra& m = a.ambient();
  const int n = m.dim();
  Rng rng(seed);
  const CMatrix u = random_unitary(n, rng);
  std::vector<AlgebraElement> herm;
  std::vector<AlgebraElement> e;
  for (int k = 0; k < n; ++k) herm.push_back(herm_basis_element(m, k));
  for (int k = 0; k < n; ++k) {
    AlgebraElement v = AlgebraElement::zero(m);
    for (int j = 0; j < n; ++j) v += u(j, k) * herm[static_cast<std::size_t>(j)];
    e.push_back(std::move(v));
  }
  std::vector<AlgebraElement> ebar;
  for (const auto& v : e) ebar.push_back(v.conjugate());

  SnakeReport rep;
  for (int j = 0; j < n; ++j) {
    const AlgebraElement& x = herm[static_cast<std::size_t>(j)];
    AlgebraElement left = AlgebraElement::zero(m);
    for (int k = 0; k < n; ++k)
      left += counit_eval(m, tensor(x, ebar[static_cast<std::size_t>(k)])) * e[static_cast<std::size_t>(k)];
    rep.left_residual = std::max(rep.left_residual, (left - x).norm());

    const AlgebraElement y = x.conjugate();
    AlgebraElement right = AlgebraElement::zero(m);
    for (int k = 0; k < n; ++k)
      right += counit_eval(m, tensor(e[static_cast<std::size_t>(k)], y)) * ebar[static_cast<std::size_t>(k)];
    rep.right_residual = std::max(rep.right_residual, (right - y).norm());
  }
  return rep;
}

// --- random draws ----------------------------------------------------------

MorphismMap random_cp_map(const StarAlgebra& source, const StarAlgebra& target, Rng& rng, int kraus_rank) {
  std::vector<std::vector<std::vector<CMatrix>>> kraus(static_cast<std::size_t>(target.num_blocks()));
  for (int t = 0; t < target.num_blocks(); ++t)
    for (int s = 0; s < source.num_blocks(); ++s) {
      std::vector<CMatrix> fam;
      const double scale = 1.0 / std::sqrt(2.0 * kraus_rank * source.block_size(s) * source.num_blocks());
      for (int r = 0; r < kraus_rank; ++r) {
        CMatrix k(target.block_size(t), source.block_size(s));
        for (Eigen::Index i = 0; i < k.rows(); ++i)
          for (Eigen::Index j = 0; j < k.cols(); ++j)
            k(i, j) = scale * Complex(standard_normal(rng), standard_normal(rng));
        fam.push_back(std::move(k));
      }
      kraus[static_cast<std::size_t>(t)].push_back(std::move(fam));
    }
  return MorphismMap::from_kraus(source, target, kraus);
}

AlgebraElement random_state_density(const Ejc& a, Rng& rng) {
  const AlgebraElement x = a.random_element(rng);
  const AlgebraElement y = jordan(x, x);
  return (1.0 / real_inner(y, a.unit())) * y;
}

// --- the dagger-compact suite ----------------------------------------------

namespace {

nlohmann::json verdict_expected(Expectation e) {
  switch (e) {
    case Expectation::Holds: return true;
    case Expectation::Violated: return false;
    case Expectation::ReportOnly: return nullptr;
  }
  return nullptr;
}

}  // namespace

VerificationReport dagger_compact_suite(const std::vector<SuiteObject>& objects, ProductCache& cache,
                                        const SuiteOptions& options) {
  VerificationReport rep;
  rep.suite = "dagger";
  rep.seed = options.seed;
  rep.tolerances = {{"snake", 1e-9},       {"cup_dagger", 1e-11},   {"basis_independence", 1e-10},
                    {"positivity", 1e-10}, {"tensor_dagger", 1e-10}, {"membership", options.tol},
                    {"genuine_violation", 1e-3}};
  Rng rng(options.seed);

  for (const SuiteObject& so : objects) {
    const Ejc& a = so.object;
    const std::vector<std::string> in{a.label()};
    const CompactStructure cs = compact_structure(a, options.seed);
    rep.check("compact.basis_independence", in, "< 1e-10", cs.basis_independence_residual,
              cs.basis_independence_residual < 1e-10);
    rep.check("compact.positivity", in, ">= -1e-10", cs.min_eigenvalue, cs.min_eigenvalue >= -1e-10);
    rep.check("compact.hermiticity", in, "< 1e-12", cs.hermiticity_residual, cs.hermiticity_residual < 1e-12);

    const SnakeReport sn = snake_check(a, options.seed);
    rep.check("snake", in, "< 1e-9", {{"left", sn.left_residual}, {"right", sn.right_residual}},
              sn.residual() < 1e-9);

    const MorphismMap f = cup_map(a);
    const MorphismMap eta = counit_map(a);
    const double d1 = distance(dagger(f), eta);
    const double d2 = distance(dagger(eta), f);
    rep.check("cup_dagger_is_counit", in, "< 1e-11", d1, d1 < 1e-11);
    rep.check("counit_dagger_is_cup", in, "< 1e-11", d2, d2 < 1e-11);

    const CupMembership cm = cup_membership(a, cache, options.tol, options.seed);
    nlohmann::json cm_measured = {{"member", cm.member}, {"residual", cm.residual}};
    if (so.expectation == Expectation::Holds)
      rep.check("cup_membership", in, true, cm_measured, cm.member);
    else
      rep.add("cup_membership", in, nullptr, cm_measured, Status::Info);

    const AlgebraElement dens = random_state_density(a, rng);
    const CjpResult cj = is_cjp_relative(state_as_morphism(a, dens), a, unit_object(), {}, cache, options.tol);
    nlohmann::json sm_measured = {{"cjp_relative_to_witnesses", cj.cjp_relative},
                                  {"max_residual", cj.max_residual}};
    switch (so.expectation) {
      case Expectation::Holds: rep.check("state_morphism", in, true, sm_measured, cj.cjp_relative); break;
      case Expectation::Violated:
        rep.check("state_morphism", in, "violation > 1e-3", sm_measured, !cj.cjp_relative && cj.max_residual > 1e-3);
        break;
      case Expectation::ReportOnly:
        rep.add("state_morphism", in, verdict_expected(so.expectation), sm_measured, Status::Info);
        break;
    }
  }

  for (std::size_t i = 0; i + 1 < objects.size(); ++i) {
    const Ejc& a = objects[i].object;
    const Ejc& b = objects[i + 1].object;
    const std::vector<std::string> in{a.label(), b.label()};
    const MorphismMap s_ab = swap_map(a.ambient(), b.ambient());
    const MorphismMap s_ba = swap_map(b.ambient(), a.ambient());
    const double inv = distance(compose(s_ba, s_ab), MorphismMap::identity(s_ab.source()));
    const double dag = distance(dagger(s_ab), s_ba);
    const PreservationResult jp = is_jordan_preserving(s_ab, cache.get(a, b).product, cache.get(b, a).product);
    rep.check("swap.involutive", in, "< 1e-12", inv, inv < 1e-12);
    rep.check("swap.dagger_is_inverse", in, "< 1e-12", dag, dag < 1e-12);
    rep.check("swap.jordan_preserving", in, true, {{"residual", jp.residual}}, jp.preserved);
  }

  double tensor_dagger = 0.0;
  double contravariance = 0.0;
  double involutive = 0.0;
  double adjoint_identity = 0.0;
  double cp_min = std::numeric_limits<double>::infinity();
  bool cp_closed = true;
  std::uniform_int_distribution<std::size_t> pick(0, objects.empty() ? 0 : objects.size() - 1);
  for (int r = 0; r < options.random_pairs && !objects.empty(); ++r) {
    const StarAlgebra& ma = objects[pick(rng)].object.ambient();
    const StarAlgebra& mb = objects[pick(rng)].object.ambient();
    const MorphismMap phi = random_cp_map(ma, mb, rng);
    const MorphismMap psi = random_cp_map(mb, ma, rng);
    const MorphismMap t = tensor_map(phi, psi);
    tensor_dagger = std::max(tensor_dagger, distance(dagger(t), tensor_map(dagger(phi), dagger(psi))));
    contravariance = std::max(contravariance, distance(dagger(compose(phi, psi)), compose(dagger(psi), dagger(phi))));
    involutive = std::max(involutive, distance(dagger(dagger(phi)), phi));
    const AlgebraElement x = random_hermitian(ma, rng);
    const AlgebraElement y = random_hermitian(mb, rng);
    adjoint_identity = std::max(adjoint_identity,
                                std::abs(real_inner(phi.apply(x), y) - real_inner(x, dagger(phi).apply(y))));
    if (t.source().dim() <= 256) {
      const CpResult cp = is_cp(t);
      cp_closed = cp_closed && cp.cp;
      cp_min = std::min(cp_min, cp.min_choi_eigenvalue);
    }
  }
  const std::vector<std::string> all_in{"random CP pairs"};
  rep.check("tensor_dagger", all_in, "< 1e-10", tensor_dagger, tensor_dagger < 1e-10);
  rep.check("dagger_contravariant", all_in, "< 1e-11", contravariance, contravariance < 1e-11);
  rep.check("dagger_involutive", all_in, "< 1e-11", involutive, involutive < 1e-11);
  rep.check("adjoint_identity", all_in, "< 1e-10", adjoint_identity, adjoint_identity < 1e-10);
  rep.check("cp_closed_under_tensor", all_in, true, {{"min_choi_eigenvalue", cp_min}}, cp_closed);
  return rep;
}

// --- reversibility no-go ---------------------------------------------------

double state_leak(const Ejc& a, const Ejc& b, const AlgebraElement& density, ProductCache& cache) {
  const CompositeResult& ab = cache.get(a, b);
  const MorphismMap m = tensor_map(MorphismMap::functional(a.ambient(), density), MorphismMap::identity(b.ambient()));
  const RMatrix img = m.matrix() * ab.product.basis().coords();
  const RMatrix& pb = b.basis().coords();
  const RMatrix r = img - pb * (pb.transpose() * img);
  Eigen::SelfAdjointEigenSolver<RMatrix> es(r * r.transpose(), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

NoGoReport reversibility_nogo(const Ejc& a, const Ejc& b, ProductCache& cache, std::uint64_t seed, int states) {
  NoGoReport rep;
  rep.reversibility_gap = reversibility_gap(b);
  if (rep.reversibility_gap <= 0)
    throw PreconditionError("reversibility_nogo: " + b.label() + " is reversible in its embedding (gap 0)");
  const CompositeResult& ab = cache.get(a, b);
  rep.product_dim = ab.dim();

  const HermSubspace fix = fixed_hermitian_subspace(*b.involution());
  const RMatrix& pb = b.basis().coords();
  const RMatrix extra = fix.coords() - pb * (pb.transpose() * fix.coords());
  SubspaceBuilder hat(b.ambient().dim(), 1e-8);
  hat.add(extra, 1.0);
  for (int k = 0; k < hat.dim(); ++k) {
    const AlgebraElement bh = from_herm_coords(b.ambient(), hat.basis().col(k));
    const AlgebraElement z = tensor(a.unit(), bh);
    rep.hat_membership_residual = std::max(rep.hat_membership_residual, ab.product.basis().residual(z) / z.norm());
  }

  Rng rng(seed);
  for (int s = 0; s < states; ++s) {
    const AlgebraElement dens = s == 0 ? (1.0 / real_inner(a.unit(), a.unit())) * a.unit()
                                       : random_state_density(a, rng);
    rep.leaks.push_back(state_leak(a, b, dens, cache));
    rep.max_leak = std::max(rep.max_leak, rep.leaks.back());
  }
  return rep;
}

}  // namespace jordanc
