#include <gtest/gtest.h>

#include "lgh/errors.hpp"
#include "lgh/jet.hpp"
#include "lgh/sampling.hpp"
#include "oracle.hpp"

using namespace lgh;

namespace {
// Jets of the explicit functions exp(s) and 1 + s^2 at s = 0.
const Jet2 kExp{1.0, 1.0, 1.0};
const Jet2 kQuad{1.0, 0.0, 2.0};
}  // namespace

TEST(Jet, LeibnizProduct) {
  // exp(s) (1 + s^2): value 1, first 1, second 1 + 0 + 2 = 3.
  const Jet2 p = jet_mul(kExp, kQuad);
  EXPECT_EQ(p.f0, Complex(1.0));
  EXPECT_EQ(p.f1, Complex(1.0));
  EXPECT_EQ(p.f2, Complex(3.0));
}

TEST(Jet, AddScale) {
  const Jet2 a = jet_add(kExp, jet_scale(2.0, kQuad));
  EXPECT_EQ(a.f0, Complex(3.0));
  EXPECT_EQ(a.f2, Complex(5.0));
}

TEST(Jet, QuotientRuleMatchesClosedForm) {
  // exp(s) / (1 + s^2) at 0: value 1, first 1, second 1 - 2 = -1.
  const Jet2 q = jet_div(kExp, kQuad);
  EXPECT_NEAR(std::abs(q.f0 - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q.f1 - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q.f2 + 1.0), 0.0, 1e-15);
}

TEST(Jet, QuotientRuleMatchesFiniteDifferences) {
  // f = 2 + sin(s) + i s, g = 3 + s^3 - s evaluated at s0 = 0.4.
  const double s0 = 0.4, h = 1e-4;
  const auto f = [](double s) { return Complex(2.0 + std::sin(s), s); };
  const auto g = [](double s) { return Complex(3.0 + s * s * s - s, 0.0); };
  const Jet2 jf{f(s0), Complex(std::cos(s0), 1.0), -std::sin(s0)};
  const Jet2 jg{g(s0), 3.0 * s0 * s0 - 1.0, 6.0 * s0};
  const Jet2 q = jf / jg;
  const auto r = [&](double s) { return f(s) / g(s); };
  EXPECT_LT(std::abs(q.f1 - (r(s0 + h) - r(s0 - h)) / (2 * h)), 5e-7);
  EXPECT_LT(std::abs(q.f2 - (r(s0 + h) - 2.0 * r(s0) + r(s0 - h)) / (h * h)), 5e-5);
}

TEST(Jet, DivisionByZeroThrows) {
  EXPECT_THROW((void)jet_div(kExp, Jet2{0.0, 1.0, 1.0}), DomainError);
}

TEST(Jet, PowerAgreesWithRepeatedProduct) {
  const Jet2 a{Complex(0.3, 0.2), Complex(-0.5, 1.0), Complex(2.0, -0.1)};
  Jet2 p = Jet2::constant(1.0);
  for (unsigned k = 0; k <= 5; ++k) {
    const Jet2 q = jet_pow(a, k);
    EXPECT_LT(std::abs(q.f0 - p.f0) + std::abs(q.f1 - p.f1) + std::abs(q.f2 - p.f2), 1e-14) << "k = " << k;
    p = p * a;
  }
}

TEST(CurvePoint, EntryJetMatchesFiniteDifferences) {
  SplitMix64 rng(3);
  const SignedBasis b = compact_basis(GroupId::u(3));
  const ComplexMatrix x = random_group_element(b, 0.5, rng);
  for (const auto& z : b.vectors) {
    const CurvePoint c(x, z);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Jet2 e = entry_jet(c, i, j);
        const oracle::Scalar f = [&](const ComplexMatrix& y) { return y(i, j); };
        EXPECT_EQ(e.f0, x(i, j));
        EXPECT_LT(std::abs(e.f1 - oracle::first_derivative(f, x, z.matrix)), 5e-7);
        EXPECT_LT(std::abs(e.f2 - oracle::second_derivative(f, x, z.matrix)), 5e-5);
      }
  }
}

TEST(CurvePoint, DimensionMismatchThrows) {
  EXPECT_THROW(CurvePoint(ComplexMatrix::identity(2), SignedBasisVector{ComplexMatrix(3), 1}), ArgumentError);
}
