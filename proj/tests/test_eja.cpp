#include "jordanc/eja.hpp"
#include "jordanc/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace jordanc;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Self-adjoint part of the fixed points of Clifford reversal: products of k
// generators are fixed iff k(k-1)/2 is even.
int clifford_reversal_gap(int n) {
  long long fixed = 0;
  for (int k = 0; k <= n; ++k)
    if (k % 4 == 0 || k % 4 == 1) fixed += binomial(n, k);
  return static_cast<int>(fixed) - (n + 1);
}

AlgebraElement spin_element(const SpinSystem& s, double t, const std::vector<double>& x) {
  AlgebraElement out = t * AlgebraElement::identity(s.ambient);
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * s.generators[i];
  return out;
}

}  // namespace

TEST(Constructors, DimensionFormulas) {
  for (int n = 1; n <= 6; ++n) {
    SCOPED_TRACE(n);
    EXPECT_EQ(make_algebra(Family::R, n).dim(), n * (n + 1) / 2);
    EXPECT_EQ(make_algebra(Family::R, n, Embedding::Universal).dim(), n * (n + 1) / 2);
    EXPECT_EQ(make_algebra(Family::C, n).dim(), n * n);
    EXPECT_EQ(make_algebra(Family::C, n, Embedding::Universal).dim(), n * n);
    EXPECT_EQ(make_algebra(Family::Q, n).dim(), n * (2 * n - 1));
    if (n >= 2) EXPECT_EQ(make_algebra(Family::V, n, Embedding::Universal).dim(), n + 1);
  }
}

TEST(Constructors, RanksFromJordanFrames) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(rank(make_algebra(Family::R, n)), n);
    EXPECT_EQ(rank(make_algebra(Family::C, n, Embedding::Universal)), n);
    EXPECT_EQ(rank(make_algebra(Family::Q, n)), n);
  }
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(rank(make_algebra(Family::V, n, Embedding::Universal)), 2);
}

TEST(Constructors, UniversalAmbients) {
  EXPECT_EQ(make_algebra(Family::C, 3, Embedding::Universal).ambient().num_blocks(), 2);
  EXPECT_EQ(make_algebra(Family::Q, 3).ambient().block_size(0), 6);
  // Q_2 universal is realized through five anticommuting generators.
  EXPECT_EQ(make_algebra(Family::Q, 2, Embedding::Universal).ambient().dim(), 32);
  EXPECT_TRUE(make_algebra(Family::R, 3).involution().has_value());
  EXPECT_FALSE(make_algebra(Family::C, 3).involution().has_value());
}

TEST(Constructors, AuditResidualsAreSmall) {
  for (const char* s : {"R3", "C3@univ", "Q2", "V4", "V5@std", "R2+C2"}) {
    SCOPED_TRACE(s);
    const AlgebraAudit a = audit_algebra(parse_algebra(s), 30, 1);
    EXPECT_LT(a.unit_residual, 1e-12);
    EXPECT_LT(a.closure_residual, 1e-10);
    EXPECT_LT(a.jordan_identity_residual, 1e-9);
    EXPECT_LT(a.form_associativity_residual, 1e-9);
  }
}

TEST(SpinFactor, ProductRule) {
  for (int n : {2, 4, 5}) {
    SCOPED_TRACE(n);
    const Ejc v = make_algebra(Family::V, n, Embedding::Universal);
    const SpinSystem s = spin_system(n);
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> y(static_cast<std::size_t>(n));
    Rng rng(static_cast<std::uint64_t>(n));
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = standard_normal(rng);
      y[static_cast<std::size_t>(i)] = standard_normal(rng);
    }
    const double t = 0.7;
    const double u = -1.3;
    double xy = 0.0;
    std::vector<double> z(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < x.size(); ++i) {
      xy += x[i] * y[i];
      z[i] = t * y[i] + u * x[i];
    }
    const AlgebraElement a = spin_element(s, t, x);
    const AlgebraElement b = spin_element(s, u, y);
    ASSERT_TRUE(v.contains(a));
    ASSERT_TRUE(v.contains(b));
    EXPECT_LT((jordan_product(v, a, b) - spin_element(s, t * u + xy, z)).norm(), 1e-12);
  }
}

TEST(SpinFactor, EigenvaluesAreTPlusMinusNorm) {
  const Ejc v = make_algebra(Family::V, 4, Embedding::Universal);
  const SpinSystem s = spin_system(4);
  const std::vector<double> x{0.3, -1.2, 0.5, 2.0};
  double nx = 0.0;
  for (double c : x) nx += c * c;
  nx = std::sqrt(nx);
  const double t = 0.4;
  const SpectralDecomposition d = spectral(v, spin_element(s, t, x));
  ASSERT_EQ(d.frame.size(), 2u);
  std::vector<double> ev = d.eigenvalues;
  std::sort(ev.begin(), ev.end());
  EXPECT_NEAR(ev[0], t - nx, 1e-12);
  EXPECT_NEAR(ev[1], t + nx, 1e-12);
}

TEST(Spectral, FrameIsOrthogonalAndReconstructs) {
  for (const char* s : {"R4", "C3@univ", "Q3", "V6", "R2+C2"}) {
    SCOPED_TRACE(s);
    const Ejc a = parse_algebra(s);
    Rng rng(21);
    const AlgebraElement x = a.random_element(rng);
    const SpectralDecomposition d = spectral(a, x, 3);
    EXPECT_EQ(static_cast<int>(d.frame.size()), rank(a));
    AlgebraElement sum = AlgebraElement::zero(a.ambient());
    for (std::size_t i = 0; i < d.frame.size(); ++i) {
      EXPECT_TRUE(a.contains(d.frame[i]));
      EXPECT_LT((d.frame[i] * d.frame[i] - d.frame[i]).norm(), 1e-9);
      for (std::size_t j = i + 1; j < d.frame.size(); ++j) EXPECT_LT((d.frame[i] * d.frame[j]).norm(), 1e-9);
      sum += d.frame[i];
    }
    EXPECT_LT((sum - a.unit()).norm(), 1e-9);
    EXPECT_LT((d.reconstruct() - x).norm(), 1e-8 * std::max(1.0, x.norm()));
  }
}

TEST(QuadraticRepresentation, UnitIsIdentityAndIdempotentsProject) {
  const Ejc a = parse_algebra("C3@univ");
  const RMatrix uu = quad_rep(a, a.unit());
  EXPECT_LT((uu - RMatrix::Identity(a.dim(), a.dim())).norm(), 1e-12);
  const auto frame = random_jordan_frame(a, 4);
  for (const auto& p : frame) {
    const RMatrix up = quad_rep(a, p);
    EXPECT_LT((up * up - up).norm(), 1e-9);
    // U_p has rank 1 on a primitive idempotent.
    EXPECT_NEAR(up.trace(), 1.0, 1e-9);
  }
}

TEST(LowRankIsomorphisms, InvariantsMatch) {
  const std::pair<const char*, const char*> pairs[] = {{"V2", "R2"}, {"V3", "C2"}, {"V5", "Q2"}};
  for (const auto& [v, m] : pairs) {
    const Ejc a = parse_algebra(v);
    const Ejc b = parse_algebra(m);
    EXPECT_EQ(a.dim(), b.dim()) << v;
    EXPECT_EQ(rank(a), rank(b)) << v;
    EXPECT_EQ(classify(a), classify(b)) << v;
  }
}

TEST(ReversibilityGap, MatchesCliffordReversalCount) {
  for (int n = 2; n <= 7; ++n) {
    SCOPED_TRACE(n);
    EXPECT_EQ(reversibility_gap(make_algebra(Family::V, n, Embedding::Universal)), clifford_reversal_gap(n));
  }
  EXPECT_EQ(clifford_reversal_gap(4), 1);
  EXPECT_EQ(reversibility_gap(parse_algebra("R3")), 0);
  EXPECT_EQ(reversibility_gap(parse_algebra("C2@univ")), 0);
  EXPECT_EQ(reversibility_gap(parse_algebra("Q3")), 0);
  // Q_2 universal is V_5, whose reversal fixes more than the algebra.
  EXPECT_EQ(reversibility_gap(parse_algebra("Q2@univ")), clifford_reversal_gap(5));
  EXPECT_THROW(reversibility_gap(parse_algebra("C2")), PreconditionError);
}

TEST(Center, DirectSumSplitsIntoCommutingSummands) {
  const Ejc a = parse_algebra("R2+C3");
  const CenterDecomposition c = center_and_summands(a);
  ASSERT_EQ(c.central_idempotents.size(), 2u);
  EXPECT_EQ(c.center.dim(), 2);
  for (const auto& e : c.central_idempotents) {
    for (const auto& x : a.basis().elements()) EXPECT_LT((e * x - x * e).norm(), 1e-10);
    EXPECT_LT((e * e - e).norm(), 1e-10);
  }
  std::vector<SummandClass> cls = classify(a);
  ASSERT_EQ(cls.size(), 2u);
  EXPECT_EQ(classification_string(cls).find("unclassified"), std::string::npos);
}

TEST(Center, SimpleAlgebraHasTrivialCenter) {
  for (const char* s : {"R3", "Q2", "V4", "C2@univ"}) {
    const CenterDecomposition c = center_and_summands(parse_algebra(s));
    EXPECT_EQ(c.center.dim(), 1) << s;
  }
}

TEST(ClassifyInvariants, SimpleTypes) {
  EXPECT_EQ(classify_invariants(10, 4).name(), classify(parse_algebra("R4"))[0].name());
  EXPECT_EQ(classify_invariants(16, 4).family, "C");
  EXPECT_EQ(classify_invariants(28, 4).family, "Q");
  EXPECT_EQ(classify_invariants(136, 16).family, "R");
  EXPECT_EQ(classify_invariants(8, 2).family, "V");
  EXPECT_EQ(classify_invariants(7, 3).family, "unclassified");
}

TEST(Cone, MembershipAndStates) {
  const Ejc a = parse_algebra("R2");
  CMatrix m(2, 2);
  m << 0.75, 0.25, 0.25, 0.25;
  const AlgebraElement rho({m});
  EXPECT_TRUE(in_cone(a, rho));
  EXPECT_TRUE(is_state_density(a, rho));
  EXPECT_TRUE(is_effect(a, rho));
  const AlgebraElement neg = rho - 0.5 * a.unit();
  EXPECT_FALSE(in_cone(a, neg));
  EXPECT_FALSE(is_state_density(a, 2.0 * rho));
}

TEST(Membership, JordanProductRejectsOutsiders) {
  const Ejc a = parse_algebra("R2");
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, 1.0);
  m(1, 0) = Complex(0.0, -1.0);
  EXPECT_THROW(jordan_product(a, a.unit(), AlgebraElement({m})), MembershipError);
}

TEST(Parser, LabelsAndErrors) {
  EXPECT_EQ(parse_algebra("C2@univ").embedding(), Embedding::Universal);
  EXPECT_EQ(parse_algebra("V4").embedding(), Embedding::Universal);
  EXPECT_EQ(parse_algebra("R2+C3").dim(), 3 + 9);
  EXPECT_THROW(parse_algebra("X2"), ValidationError);
  EXPECT_THROW(parse_algebra("R0"), ValidationError);
  EXPECT_THROW(parse_algebra("V4@std"), ValidationError);
  EXPECT_THROW(parse_algebra("O3"), NotSpecialError);
  EXPECT_THROW(reject_exceptional(), NotSpecialError);
}

TEST(UnitObject, IsTheScalars) {
  const Ejc i = unit_object();
  EXPECT_EQ(i.dim(), 1);
  EXPECT_EQ(i.ambient().dim(), 1);
  EXPECT_EQ(rank(i), 1);
  EXPECT_EQ(reversibility_gap(i), 0);
}
