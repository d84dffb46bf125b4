#include <gtest/gtest.h>

#include "lgh/algebra.hpp"
#include "lgh/errors.hpp"

using namespace lgh;

TEST(Generators, ShapesAndNormalisation) {
  const ComplexMatrix x = symmetric_unit(0, 2, 3);
  const ComplexMatrix y = skew_unit(0, 2, 3);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(x(0, 2).real(), r);
  EXPECT_DOUBLE_EQ(x(2, 0).real(), r);
  EXPECT_DOUBLE_EQ(y(0, 2).real(), r);
  EXPECT_DOUBLE_EQ(y(2, 0).real(), -r);
  EXPECT_DOUBLE_EQ(euclidean_form(x, x), 1.0);
  EXPECT_THROW((void)symmetric_unit(2, 1, 3), ArgumentError);
  EXPECT_THROW((void)unit_matrix(3, 0, 3), ArgumentError);
}

TEST(Identities, HoldForAllSizes) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const IdentityResiduals r = verify_matrix_identities(n);
    EXPECT_LT(r.max(), 1e-12) << "n = " << n;
  }
}

TEST(Identities, RejectsTrivialSize) { EXPECT_THROW((void)verify_matrix_identities(1), ArgumentError); }

TEST(Identities, HandComputedCaseNTwo) {
  // X_12^2 = I/2, Y_12^2 = -I/2 for n = 2.
  const ComplexMatrix x = symmetric_unit(0, 1, 2);
  const ComplexMatrix y = skew_unit(0, 1, 2);
  EXPECT_LT(max_abs_diff(x * x, ComplexMatrix::identity(2) * 0.5), 1e-15);
  EXPECT_LT(max_abs_diff(y * y, ComplexMatrix::identity(2) * -0.5), 1e-15);
}

struct BasisCase {
  GroupId group;
  std::size_t dim;
};

class CompactBasis : public ::testing::TestWithParam<BasisCase> {};

TEST_P(CompactBasis, OrthonormalAndInAlgebra) {
  const auto& c = GetParam();
  const SignedBasis b = compact_basis(c.group);
  EXPECT_EQ(b.size(), c.dim);
  EXPECT_EQ(algebra_dim(c.group), c.dim);
  EXPECT_LT(b.orthonormality_defect(), 1e-12);
  for (const auto& v : b.vectors) {
    EXPECT_LT(max_abs_diff(v.matrix.adjoint(), -v.matrix), 1e-15);  // skew-Hermitian
    if (c.group.family == GroupFamily::SU) EXPECT_LT(std::abs(v.matrix.trace()), 1e-15);
    if (c.group.family == GroupFamily::SO) EXPECT_EQ(max_abs_diff(v.matrix.conj(), v.matrix), 0.0);
    if (c.group.family == GroupFamily::Sp) {
      const ComplexMatrix j = symplectic_unit(c.group.n);
      EXPECT_LT(max_abs_diff(v.matrix.transpose() * j + j * v.matrix, ComplexMatrix(2 * c.group.n)), 1e-15);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, CompactBasis,
                         ::testing::Values(BasisCase{GroupId::so(2), 1}, BasisCase{GroupId::so(5), 10},
                                           BasisCase{GroupId::u(1), 1}, BasisCase{GroupId::u(3), 9},
                                           BasisCase{GroupId::su(2), 3}, BasisCase{GroupId::su(4), 15},
                                           BasisCase{GroupId::sp(1), 3}, BasisCase{GroupId::sp(3), 21}));

TEST(CompactBasis, RejectsNonCompactGroup) { EXPECT_THROW((void)compact_basis(GroupId::slr(2)), ArgumentError); }

TEST(SplitBasis, SignsAndSizes) {
  const SplitBasis s = glc_split_basis(3);
  EXPECT_EQ(s.plus.size(), 9u);
  EXPECT_EQ(s.minus.size(), 9u);
  const SignedBasis all = s.combined();
  EXPECT_EQ(all.size(), 18u);
  EXPECT_LT(all.orthonormality_defect(), 1e-12);
}

TEST(GramSchmidt, IndefiniteSignatureOfGl2) {
  std::vector<ComplexMatrix> v;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      v.push_back(unit_matrix(i, j, 2));
      v.push_back(unit_matrix(i, j, 2) * kI);
    }
  const SignedBasis b = gram_schmidt_indefinite(v);
  int plus = 0, minus = 0;
  for (const auto& e : b.vectors) (e.sign > 0 ? plus : minus)++;
  EXPECT_EQ(plus, 4);
  EXPECT_EQ(minus, 4);
  EXPECT_LT(b.orthonormality_defect(), 1e-12);
}

TEST(GramSchmidt, NullDirectionThrows) {
  // E_12 is null for Re trace(ZW).
  EXPECT_THROW((void)gram_schmidt_indefinite({unit_matrix(0, 1, 2)}), DegeneracyError);
}

TEST(GramSchmidt, IndependentSpanDropsDependentVectors) {
  const ComplexMatrix a = unit_matrix(0, 0, 2);
  const auto span = independent_span({a, a * 2.0, unit_matrix(1, 1, 2)});
  EXPECT_EQ(span.size(), 2u);
}

TEST(Quaternion, EmbeddingIsSymplecticUnitary) {
  const ComplexMatrix z{{Complex(0.6, 0.0)}};
  const ComplexMatrix w{{Complex(0.0, 0.8)}};
  const ComplexMatrix q = quaternion_embed(z, w);
  EXPECT_LT(max_abs_diff(q * q.adjoint(), ComplexMatrix::identity(2)), 1e-15);
  const ComplexMatrix j = symplectic_unit(1);
  EXPECT_LT(max_abs_diff(q * j * q.transpose(), j), 1e-15);
}
