#include <gtest/gtest.h>

#include "lgh/operators.hpp"
#include "lgh/sampling.hpp"
#include "oracle.hpp"

using namespace lgh;
using E = FunctionExpr;

namespace {

// tau and kappa assembled from finite-difference derivatives along each frame direction.
Complex fd_tau(const E& f, const ComplexMatrix& x, const SignedBasis& b) {
  const oracle::Scalar fx = [&](const ComplexMatrix& y) { return eval_point(f, y); };
  Complex s{};
  for (const auto& z : b.vectors) s += static_cast<double>(z.sign) * oracle::second_derivative(fx, x, z.matrix);
  return s;
}

Complex fd_kappa(const E& f, const E& g, const ComplexMatrix& x, const SignedBasis& b) {
  const oracle::Scalar fx = [&](const ComplexMatrix& y) { return eval_point(f, y); };
  const oracle::Scalar gx = [&](const ComplexMatrix& y) { return eval_point(g, y); };
  Complex s{};
  for (const auto& z : b.vectors)
    s += static_cast<double>(z.sign) * oracle::first_derivative(fx, x, z.matrix) *
         oracle::first_derivative(gx, x, z.matrix);
  return s;
}

}  // namespace

class OperatorOracle : public ::testing::TestWithParam<GroupId> {};

TEST_P(OperatorOracle, TauAndKappaMatchFiniteDifferences) {
  const GroupId g = GetParam();
  const SignedBasis b = compact_basis(g);
  const std::size_t d = b.matrix_dim();
  const E f = E::entry(0, d - 1) * E::entry(d - 1, 0) + E::power(E::entry(0, 0), 2);
  const E h = E::quotient(E::entry(0, 0), E::constant(2.0) + E::entry(d - 1, d - 1));
  for (const auto& x : sample_group(g, 3, 11)) {
    // Second differences lose about eps / h^2 ~ 1e-8 per direction; first differences are far tighter.
    EXPECT_LT(std::abs(tau(f, x, b) - fd_tau(f, x, b)), 5e-5);
    EXPECT_LT(std::abs(tau(h, x, b) - fd_tau(h, x, b)), 5e-5);
    EXPECT_LT(std::abs(kappa(f, h, x, b) - fd_kappa(f, h, x, b)), 5e-7);
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, OperatorOracle,
                         ::testing::Values(GroupId::so(3), GroupId::u(2), GroupId::su(3), GroupId::sp(1)));

TEST(Operators, KappaIsSymmetricAndBilinear) {
  const GroupId g = GroupId::u(2);
  const SignedBasis b = compact_basis(g);
  const ComplexMatrix x = sample_group(g, 1, 5).front();
  const E f = E::entry(0, 1), h = E::entry(1, 1) * E::entry(0, 0);
  EXPECT_LT(std::abs(kappa(f, h, x, b) - kappa(h, f, x, b)), 1e-15);
  // Complex-bilinear: kappa(i f, h) = i kappa(f, h), no conjugation.
  EXPECT_LT(std::abs(kappa(kI * f, h, x, b) - kI * kappa(f, h, x, b)), 1e-15);
}

TEST(Operators, TableAgreesWithSingleCalls) {
  const GroupId g = GroupId::so(4);
  const SignedBasis b = compact_basis(g);
  const ComplexMatrix x = sample_group(g, 1, 8).front();
  const std::vector<E> fs{E::entry(0, 0), E::entry(1, 2), E::entry(3, 1) * E::entry(0, 0)};
  const Frame frame(x, b);
  const OperatorTable t = operator_table(fs, frame);
  for (std::size_t a = 0; a < fs.size(); ++a) {
    EXPECT_LT(std::abs(t.tau[a] - tau(fs[a], x, b)), 1e-15);
    for (std::size_t c = 0; c < fs.size(); ++c) EXPECT_LT(std::abs(t.kappa[a][c] - kappa(fs[a], fs[c], x, b)), 1e-15);
  }
}

TEST(Operators, ConstantHasZeroTensionAndGradient) {
  const GroupId g = GroupId::sp(2);
  const SignedBasis b = compact_basis(g);
  const ComplexMatrix x = sample_group(g, 1, 2).front();
  EXPECT_EQ(tau(E::constant(3.0), x, b), Complex(0.0));
  EXPECT_EQ(kappa(E::constant(3.0), E::entry(0, 0), x, b), Complex(0.0));
}

TEST(Operators, EmptyFrameGivesValuesOnly) {
  const SignedBasis empty{GroupId::u(2), {}, true};
  const Frame frame(ComplexMatrix::identity(2), empty);
  const std::vector<E> fs{E::entry(0, 0)};
  const OperatorTable t = operator_table(fs, frame);
  ASSERT_EQ(t.values.size(), 1u);
  EXPECT_EQ(t.values[0], Complex(1.0));
  EXPECT_EQ(t.tau[0], Complex(0.0));
}
