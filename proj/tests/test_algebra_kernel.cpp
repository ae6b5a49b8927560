#include "jordanc/algebra_kernel.hpp"
#include "jordanc/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace jordanc;

namespace {

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

}  // namespace

TEST(StarAlgebra, DimensionIsSumOfSquares) {
  StarAlgebra m({3, 2, 1});
  EXPECT_EQ(m.dim(), 9 + 4 + 1);
  EXPECT_EQ(m.coord_offset(0), 0);
  EXPECT_EQ(m.coord_offset(1), 9);
  EXPECT_EQ(m.coord_offset(2), 13);
  EXPECT_EQ(StarAlgebra().dim(), 1);
}

TEST(HermitianBasis, IsOrthonormal) {
  StarAlgebra m({3, 2});
  for (int k = 0; k < m.dim(); ++k) {
    const AlgebraElement hk = herm_basis_element(m, k);
    EXPECT_TRUE(hk.is_hermitian());
    for (int l = 0; l < m.dim(); ++l) {
      const Complex g = trace_inner(hk, herm_basis_element(m, l));
      EXPECT_NEAR(g.real(), k == l ? 1.0 : 0.0, 1e-14);
      EXPECT_NEAR(g.imag(), 0.0, 1e-14);
    }
  }
}

TEST(HermitianBasis, ComplexCoordinatesRoundTrip) {
  StarAlgebra m({2, 3});
  Rng rng(3);
  const AlgebraElement x = random_element(m, rng);
  const AlgebraElement y = from_complex_coords(m, complex_coords(x));
  EXPECT_LT((x - y).norm(), 1e-13);
  const AlgebraElement h = random_hermitian(m, rng);
  EXPECT_LT((from_herm_coords(m, herm_coords(h)) - h).norm(), 1e-13);
}

TEST(Kron, MatchesEntrywiseDefinition) {
  Rng rng(1);
  const CMatrix a = random_element(StarAlgebra({2}), rng).block(0);
  const CMatrix b = random_element(StarAlgebra({3}), rng).block(0);
  const CMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) EXPECT_EQ(k(3 * i + r, 3 * j + c), a(i, j) * b(r, c));
}

TEST(Tensor, BlockLayoutIsRowMajorOverPairs) {
  StarAlgebra a({1, 2});
  StarAlgebra b({3, 1});
  const StarAlgebra t = tensor(a, b);
  ASSERT_EQ(t.num_blocks(), 4);
  EXPECT_EQ(t.block_size(0), 3);
  EXPECT_EQ(t.block_size(1), 1);
  EXPECT_EQ(t.block_size(2), 6);
  EXPECT_EQ(t.block_size(3), 2);
}

TEST(Jordan, ProductIsSymmetrizedProduct) {
  StarAlgebra m({3});
  Rng rng(5);
  const AlgebraElement x = random_hermitian(m, rng);
  const AlgebraElement y = random_hermitian(m, rng);
  const CMatrix expected = 0.5 * anticommutator(x.block(0), y.block(0));
  EXPECT_LT((jordan(x, y).block(0) - expected).norm(), 1e-13);
}

TEST(Shapes, MismatchRaisesStructuralError) {
  const AlgebraElement x = AlgebraElement::identity(StarAlgebra({2}));
  const AlgebraElement y = AlgebraElement::identity(StarAlgebra({3}));
  EXPECT_THROW(require_same_shape(x, y, "test"), StructuralError);
}

TEST(HermEig, ReconstructsAndGroupsEigenvalues) {
  CMatrix d = CMatrix::Zero(4, 4);
  d.diagonal() << 2.0, -1.0, 2.0, 0.5;
  Rng rng(9);
  const CMatrix u = random_unitary(4, rng);
  const AlgebraElement x({u * d * u.adjoint()});
  const HermEig e = herm_eig(x);
  ASSERT_EQ(e.eigenvalues.size(), 3u);
  EXPECT_NEAR(e.eigenvalues[0], 2.0, 1e-12);
  EXPECT_EQ(e.multiplicities[0], 2);
  EXPECT_NEAR(e.eigenvalues[2], -1.0, 1e-12);
  AlgebraElement sum = AlgebraElement::zero(StarAlgebra({4}));
  for (std::size_t i = 0; i < e.projectors.size(); ++i) {
    EXPECT_LT((e.projectors[i] * e.projectors[i] - e.projectors[i]).norm(), 1e-12);
    sum += e.eigenvalues[i] * e.projectors[i];
  }
  EXPECT_LT((sum - x).norm(), 1e-12);
  EXPECT_NEAR(min_eigenvalue(x), -1.0, 1e-12);
}

TEST(HermEig, RejectsNonHermitian) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(herm_eig(AlgebraElement({m})), ValidationError);
}

TEST(Subspace, OrthonormalizeDropsDependentVectors) {
  StarAlgebra m({2});
  Rng rng(2);
  const AlgebraElement a = random_hermitian(m, rng);
  const AlgebraElement b = random_hermitian(m, rng);
  const HermSubspace s = orthonormalize(m, {a, b, a + 2.0 * b, a * 3.0});
  EXPECT_EQ(s.dim(), 2);
  EXPECT_LT(s.orthonormality_defect(), 1e-13);
  EXPECT_TRUE(s.contains(a - b, 1e-10));
  EXPECT_FALSE(s.contains(AlgebraElement::identity(m) + random_hermitian(m, rng), 1e-6));
}

TEST(SubspaceBuilder, RefusesToOverflowAmbient) {
  SubspaceBuilder b(2, 1e-10);
  EXPECT_EQ(b.add(RMatrix::Identity(2, 2)), 2);
  EXPECT_FALSE(b.add_one(RVector::Ones(2)));
  EXPECT_EQ(b.dim(), 2);
}

TEST(AntiAutomorphism, TransposeIsInvolutiveReversal) {
  StarAlgebra m({3, 2});
  const AntiAutomorphism t = AntiAutomorphism::transpose(m);
  Rng rng(4);
  EXPECT_LT(t.involution_defect(), 1e-14);
  EXPECT_LT(t.reversal_residual(rng, 10), 1e-12);
  // Fixed hermitian elements of the transpose are the real symmetric ones.
  EXPECT_EQ(fixed_hermitian_subspace(t).dim(), 6 + 3);
}

TEST(AntiAutomorphism, SwapTransposeOnTwoCopies) {
  StarAlgebra m({2, 2});
  const CMatrix id = CMatrix::Identity(2, 2);
  const AntiAutomorphism phi(m, {1, 0}, {id, id});
  EXPECT_LT(phi.involution_defect(), 1e-14);
  // (a, b) -> (b^T, a^T): fixed points are (a, a^T), one copy of M_2 hermitian.
  EXPECT_EQ(fixed_hermitian_subspace(phi).dim(), 4);
}

class SpinSystemTest : public ::testing::TestWithParam<int> {};

TEST_P(SpinSystemTest, PauliRelations) {
  const int n = GetParam();
  const SpinSystem s = spin_system(n);
  ASSERT_EQ(static_cast<int>(s.generators.size()), n);
  EXPECT_EQ(s.ambient.dim(), 1 << n);
  const AlgebraElement one = AlgebraElement::identity(s.ambient);
  for (int i = 0; i < n; ++i) {
    const auto& si = s.generators[static_cast<std::size_t>(i)];
    EXPECT_TRUE(si.is_hermitian(1e-14));
    EXPECT_LT((si * si - one).norm(), 1e-13);
    for (int j = i + 1; j < n; ++j) {
      const auto& sj = s.generators[static_cast<std::size_t>(j)];
      EXPECT_LT((si * sj + sj * si).norm(), 1e-13);
    }
  }
  EXPECT_EQ(generated_star_algebra_dim(s.generators, s.ambient), s.ambient.dim());
}

TEST_P(SpinSystemTest, ReversalFixesGenerators) {
  const int n = GetParam();
  const SpinSystem s = spin_system(n);
  const AntiAutomorphism phi = solve_antiautomorphism(s.generators, s.ambient);
  Rng rng(11);
  EXPECT_LT(phi.involution_defect(), 1e-10);
  EXPECT_LT(phi.reversal_residual(rng, 5), 1e-10);
  for (const auto& g : s.generators) EXPECT_LT((phi(g) - g).norm(), 1e-10);
  // Reversal multiplies a k-fold product of generators by (-1)^{k(k-1)/2}.
  if (n >= 3) {
    const AlgebraElement e3 = s.generators[0] * s.generators[1] * s.generators[2];
    EXPECT_LT((phi(e3) + e3).norm(), 1e-10);
    const AlgebraElement e2 = s.generators[0] * s.generators[1];
    EXPECT_LT((phi(e2) + e2).norm(), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(N, SpinSystemTest, ::testing::Range(2, 9));

TEST(GeneratedAlgebra, DiagonalGeneratorGivesCommutativeAlgebra) {
  CMatrix d = CMatrix::Zero(3, 3);
  d.diagonal() << 1.0, 2.0, 2.0;
  EXPECT_EQ(generated_star_algebra_dim({AlgebraElement({d})}, StarAlgebra({3})), 2);
}

TEST(RandomUnitary, IsUnitary) {
  Rng rng(7);
  const CMatrix u = random_unitary(5, rng);
  EXPECT_LT((u.adjoint() * u - CMatrix::Identity(5, 5)).norm(), 1e-13);
}
