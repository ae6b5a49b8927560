#include "jordanc/errors.hpp"
#include "jordanc/morphisms.hpp"

#include <gtest/gtest.h>

using namespace jordanc;

namespace {

MorphismMap transpose_map(const StarAlgebra& m) {
  return MorphismMap::from_function(m, m, [](const AlgebraElement& x) { return x.transpose(); });
}

}  // namespace

TEST(Choi, IdentityIsCompletelyPositive) {
  const CpResult r = is_cp(MorphismMap::identity(StarAlgebra({3, 2})));
  EXPECT_TRUE(r.cp);
  EXPECT_NEAR(r.min_choi_eigenvalue, 0.0, 1e-12);
}

TEST(Choi, TransposeHasSwapChoiMatrix) {
  // Choi matrix of the transpose is the swap operator, eigenvalues +1 and -1.
  const CpResult r = is_cp(transpose_map(StarAlgebra({2})));
  EXPECT_FALSE(r.cp);
  EXPECT_NEAR(r.min_choi_eigenvalue, -1.0, 1e-12);
}

TEST(Choi, RandomKrausMapsAreCp) {
  Rng rng(2);
  const MorphismMap phi = random_cp_map(StarAlgebra({2, 1}), StarAlgebra({3}), rng);
  EXPECT_TRUE(is_cp(phi).cp);
  EXPECT_TRUE(is_cp(dagger(phi)).cp);
}

TEST(FromFunction, RejectsNonHermitianImages) {
  const StarAlgebra m({2});
  CMatrix k(2, 2);
  k << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(MorphismMap::from_function(m, m, [&](const AlgebraElement& x) { return AlgebraElement({k * x.block(0)}); }),
               ValidationError);
}

TEST(Dagger, KrausAdjointIsConjugateTransposeKraus) {
  Rng rng(4);
  const StarAlgebra m({3});
  const CMatrix k = random_element(m, rng).block(0);
  const MorphismMap phi = MorphismMap::from_kraus(m, m, {{{k}}});
  const MorphismMap phi_star = MorphismMap::from_kraus(m, m, {{{CMatrix(k.adjoint())}}});
  EXPECT_LT(distance(dagger(phi), phi_star), 1e-12);
}

TEST(Dagger, AdjointIdentityAndInvolution) {
  Rng rng(5);
  const StarAlgebra s({2, 2});
  const StarAlgebra t({3});
  const MorphismMap phi = random_cp_map(s, t, rng);
  const AlgebraElement x = random_element(s, rng);
  const AlgebraElement y = random_element(t, rng);
  const Complex lhs = trace_inner(phi.apply(x), y);
  const Complex rhs = trace_inner(x, dagger(phi).apply(y));
  EXPECT_LT(std::abs(lhs - rhs), 1e-11);
  EXPECT_LT(distance(dagger(dagger(phi)), phi), 1e-14);
}

TEST(Tensor, ActsOnProductElements) {
  Rng rng(6);
  const StarAlgebra a({2});
  const StarAlgebra b({1, 2});
  const MorphismMap phi = random_cp_map(a, StarAlgebra({3}), rng);
  const MorphismMap psi = random_cp_map(b, StarAlgebra({2}), rng);
  const MorphismMap t = tensor_map(phi, psi);
  const AlgebraElement x = random_element(a, rng);
  const AlgebraElement y = random_element(b, rng);
  EXPECT_LT((t.apply(tensor(x, y)) - tensor(phi.apply(x), psi.apply(y))).norm(), 1e-11);
  EXPECT_LT(distance(dagger(t), tensor_map(dagger(phi), dagger(psi))), 1e-12);
}

TEST(Compose, MatchesSequentialApplication) {
  Rng rng(7);
  const StarAlgebra a({2});
  const StarAlgebra b({3});
  const StarAlgebra c({1, 1});
  const MorphismMap phi = random_cp_map(b, c, rng);
  const MorphismMap psi = random_cp_map(a, b, rng);
  const AlgebraElement x = random_element(a, rng);
  EXPECT_LT((compose(phi, psi).apply(x) - phi.apply(psi.apply(x))).norm(), 1e-11);
  EXPECT_LT(distance(dagger(compose(phi, psi)), compose(dagger(psi), dagger(phi))), 1e-12);
  EXPECT_THROW(compose(psi, phi), StructuralError);
}

TEST(Swap, ExchangesFactors) {
  Rng rng(8);
  const StarAlgebra a({2, 1});
  const StarAlgebra b({3});
  const MorphismMap s = swap_map(a, b);
  const AlgebraElement x = random_element(a, rng);
  const AlgebraElement y = random_element(b, rng);
  EXPECT_LT((s.apply(tensor(x, y)) - tensor(y, x)).norm(), 1e-12);
  EXPECT_LT(distance(compose(swap_map(b, a), s), MorphismMap::identity(tensor(a, b))), 1e-12);
}

TEST(ProductBasis, IsOrthogonal) {
  const RMatrix w = product_basis_matrix(StarAlgebra({2}), StarAlgebra({1, 2}));
  EXPECT_LT((w.transpose() * w - RMatrix::Identity(w.cols(), w.cols())).norm(), 1e-12);
}

TEST(JordanPreserving, IdentityAndSwapPreserve) {
  const Ejc a = parse_algebra("R2");
  const Ejc b = parse_algebra("C2@univ");
  EXPECT_TRUE(is_jordan_preserving(MorphismMap::identity(a.ambient()), a, a).preserved);
  const CompositeResult ab = canonical_product(a, b);
  const CompositeResult ba = canonical_product(b, a);
  const MorphismMap s = swap_map(a.ambient(), b.ambient());
  EXPECT_TRUE(is_jordan_preserving(s, ab.product, ba.product).preserved);
}

TEST(JordanPreserving, ComplexConjugationByUnitaryLeavesRealAlgebra) {
  const Ejc a = parse_algebra("R2");
  CMatrix u(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  u << r, Complex(0.0, r), Complex(0.0, r), r;
  const MorphismMap phi = MorphismMap::from_kraus(a.ambient(), a.ambient(), {{{u}}});
  EXPECT_FALSE(is_jordan_preserving(phi, a, a).preserved);
}

TEST(StateMorphism, InsideDensitiesAreCjpRelative) {
  const Ejc a = parse_algebra("C2@univ");
  Rng rng(10);
  const AlgebraElement rho = random_state_density(a, rng);
  ASSERT_TRUE(is_state_density(a, rho));
  const MorphismMap f = state_as_morphism(a, rho);
  const CjpResult r = is_cjp_relative(f, a, unit_object());
  EXPECT_TRUE(r.cjp_relative);
  EXPECT_GE(r.witnesses.size(), 2u);
}

TEST(StateMorphism, OutsideDensitiesFail) {
  const Ejc a = parse_algebra("R3");
  Rng rng(11);
  AlgebraElement rho = random_state_density(a, rng);
  CMatrix k = CMatrix::Zero(3, 3);
  k(0, 1) = Complex(0.0, 0.1);
  k(1, 0) = Complex(0.0, -0.1);
  rho += AlgebraElement({k});
  const MorphismMap f = MorphismMap::functional(a.ambient(), rho);
  EXPECT_FALSE(is_cjp_relative(f, a, unit_object()).cjp_relative);
  EXPECT_THROW(state_as_morphism(a, rho), MembershipError);
}

TEST(Gamma, IsAJordanIsomorphismOntoA) {
  for (const char* s : {"R2", "C2@univ", "Q2", "V4"}) {
    SCOPED_TRACE(s);
    const GammaReport g = gamma_check(parse_algebra(s), 2);
    EXPECT_LT(g.multiplicativity_residual, 1e-10);
    EXPECT_LT(g.image_residual, 1e-10);
    EXPECT_LT(g.chain_residual, 1e-10);
  }
}

TEST(Snake, ResidualsVanish) {
  for (const char* s : {"R3", "C2", "C2@univ", "Q2@univ"}) {
    const SnakeReport r = snake_check(parse_algebra(s), 3);
    EXPECT_LT(r.residual(), 1e-9) << s;
  }
}

TEST(CupCounit, AreMutualDaggers) {
  const Ejc a = parse_algebra("C2@univ");
  EXPECT_LT(distance(dagger(cup_map(a)), counit_map(a)), 1e-11);
}

TEST(NoGo, SpinFactorLeaks) {
  ProductCache cache;
  const NoGoReport r = reversibility_nogo(parse_algebra("R2"), parse_algebra("V4"), cache, 1);
  EXPECT_EQ(r.reversibility_gap, 1);
  EXPECT_LT(r.hat_membership_residual, 1e-8);
  EXPECT_GT(r.max_leak, 1e-3);
}

TEST(NoGo, RequiresPositiveGap) {
  ProductCache cache;
  EXPECT_THROW(reversibility_nogo(parse_algebra("R2"), parse_algebra("V3"), cache), PreconditionError);
  Rng rng(3);
  const Ejc a = parse_algebra("R2");
  EXPECT_LE(state_leak(a, parse_algebra("V3"), random_state_density(a, rng), cache), 1e-8);
}

TEST(Suite, DaggerCompactSmallSet) {
  ProductCache cache;
  SuiteOptions o;
  o.random_pairs = 5;
  const VerificationReport r = dagger_compact_suite({{parse_algebra("R2")}, {parse_algebra("C2@univ")}}, cache, o);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.count(Status::Pass), 10);
}
