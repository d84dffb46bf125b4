#include <gtest/gtest.h>

#include "lgh/families.hpp"
#include "lgh/sampling.hpp"

using namespace lgh;

namespace {

VerificationReport check(const Eigenfamily& fam, std::size_t samples = 40, std::uint64_t seed = 21) {
  return verify_eigenfamily(fam, compact_basis(fam.group), sample_group(fam.group, samples, seed));
}

}  // namespace

TEST(Constants, ClosedForms) {
  // SO(n): -(n-1)/2, -1/2; U(n): -n, -1; Sp(n): -(2n+1)/2, -1/2.
  EXPECT_EQ(eigen_constants(GroupId::so(5)).lambda, Complex(-2.0));
  EXPECT_EQ(eigen_constants(GroupId::so(5)).mu, Complex(-0.5));
  EXPECT_EQ(eigen_constants(GroupId::u(3)).lambda, Complex(-3.0));
  EXPECT_EQ(eigen_constants(GroupId::u(3)).mu, Complex(-1.0));
  EXPECT_EQ(eigen_constants(GroupId::sp(2)).lambda, Complex(-2.5));
  EXPECT_EQ(eigen_constants(GroupId::sp(2)).mu, Complex(-0.5));
}

TEST(Constants, SpecialUnitaryRemovesTheCentralDirection) {
  // Dropping the unit central direction iI/sqrt(n) from U(n) removes -1/n from lambda and mu.
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto u = eigen_constants(GroupId::u(n));
    const auto su = eigen_constants(GroupId::su(n));
    const double c = 1.0 / static_cast<double>(n);
    EXPECT_NEAR(std::abs(su.lambda - (u.lambda + c)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(su.mu - (u.mu + c)), 0.0, 1e-15);
  }
}

TEST(Constants, Sp1AgreesWithSU2) {
  const auto sp = eigen_constants(GroupId::sp(1));
  const auto su = eigen_constants(GroupId::su(2));
  EXPECT_EQ(sp.lambda, Complex(-1.5));
  EXPECT_EQ(sp.mu, Complex(-0.5));
  EXPECT_NEAR(std::abs(su.lambda - sp.lambda), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(su.mu - sp.mu), 0.0, 1e-15);
}

class Lemmas : public ::testing::TestWithParam<GroupId> {};

TEST_P(Lemmas, CoordinateFormulasHold) {
  const auto r = verify_coordinate_lemmas(GetParam(), sample_group(GetParam(), 50, 13));
  EXPECT_TRUE(r.passed()) << to_json(r).dump();
  EXPECT_LT(r.residual("group_defect"), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Groups, Lemmas,
                         ::testing::Values(GroupId::so(2), GroupId::so(4), GroupId::so(6), GroupId::u(1),
                                           GroupId::u(3), GroupId::sp(1), GroupId::sp(2)));

TEST(Lemmas, SpHasSixResiduals) {
  const auto r = verify_coordinate_lemmas(GroupId::sp(1), sample_group(GroupId::sp(1), 5, 1));
  EXPECT_EQ(r.residuals.size(), 6u);
  EXPECT_EQ(r.find("zw_symmetry")->tol, 1e-10);
}

TEST(Lemmas, UnsupportedGroup) {
  EXPECT_THROW((void)verify_coordinate_lemmas(GroupId::su(2), {}), ArgumentError);
}

TEST(Lemmas, SimplifiedKappaNeedsGroupPoints) {
  // Off the group x x^t = I fails; the general formula still holds, the simplified one does not.
  ComplexMatrix x = sample_group(GroupId::so(3), 1, 2).front() * 1.1;
  const auto r = verify_coordinate_lemmas(GroupId::so(3), {x});
  EXPECT_LT(r.residual("kappa_general"), 1e-12);
  EXPECT_GT(r.residual("kappa_simplified"), 1e-3);
}

TEST(Families, MaximalIsotropicSO) {
  for (std::size_t n = 2; n <= 6; ++n) {
    ComplexVector p(n, 0.0);
    p[0] = 1.0;
    p[n - 1] = Complex(0.3, -0.4);
    const auto fam = so_family_V(n, p, maximal_isotropic_basis(n));
    EXPECT_EQ(fam.members.size(), n / 2);
    EXPECT_TRUE(check(fam).passed()) << "n = " << n;
  }
}

TEST(Families, IsotropicBasisIsIsotropic) {
  const auto v = maximal_isotropic_basis(5);
  for (const auto& a : v)
    for (const auto& b : v) EXPECT_LT(std::abs(bilinear(a, b)), 1e-15);
}

TEST(Families, NonIsotropicVIsRejectedWithOffendingPair) {
  try {
    (void)so_family_V(3, unit_vector(0, 3), {unit_vector(1, 3)});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not isotropic"), std::string::npos);
  }
}

TEST(Families, ZeroPIsRejected) {
  EXPECT_THROW((void)u_family(2, {0.0, 0.0}), ValidationError);
  EXPECT_THROW((void)sp_family(1, {0.0}), ValidationError);
  EXPECT_THROW((void)u_family(2, {1.0}), ArgumentError);
}

TEST(Families, DeformedSO4FamilyForSeveralParameters) {
  SplitMix64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const Complex z = rng.unit_disc(), w = rng.unit_disc();
    const ComplexVector p = so4_deformation(z, w);
    EXPECT_LT(std::abs(bilinear(p, p)), 1e-14);
    const auto fam = so_family_special(4, p);
    EXPECT_FALSE(fam.dual_continuable);
    EXPECT_TRUE(check(fam).passed());
  }
}

TEST(Families, NonIsotropicSpecialVectorIsRejected) {
  EXPECT_THROW((void)so_family_special(3, unit_vector(0, 3)), ValidationError);
}

TEST(Families, UnitaryAndSpecialUnitary) {
  for (std::size_t n = 1; n <= 4; ++n) {
    ComplexVector p(n, Complex(0.5, 0.5));
    EXPECT_TRUE(check(u_family(n, p)).passed()) << "U(" << n << ")";
    if (n >= 2) {
      EXPECT_TRUE(check(su_family(n, p)).passed()) << "SU(" << n << ")";
    }
  }
}

TEST(Families, UnitaryConstantsFailOnSpecialUnitary) {
  // The U(n) constants do not hold on SU(n): the check must detect the wrong lambda.
  Eigenfamily fam = su_family(3, {1.0, 0.0, 0.0});
  fam.lambda = eigen_constants(GroupId::u(3)).lambda;
  fam.mu = eigen_constants(GroupId::u(3)).mu;
  EXPECT_FALSE(check(fam).passed());
}

TEST(Families, Quaternionic) {
  for (std::size_t n = 1; n <= 3; ++n) {
    ComplexVector p(n, 0.0);
    p[0] = Complex(0.2, 1.0);
    if (n > 1) p[1] = 0.7;
    const auto fam = sp_family(n, p);
    EXPECT_EQ(fam.members.size(), 2 * n);
    EXPECT_TRUE(check(fam).passed()) << "Sp(" << n << ")";
  }
}

TEST(Families, ReportShape) {
  const auto r = check(u_family(2, {1.0, 0.0}), 10);
  EXPECT_EQ(r.check, "eigenfamily");
  EXPECT_EQ(r.samples_used, 10u);
  EXPECT_NE(r.find("tau"), nullptr);
  EXPECT_NE(r.find("kappa"), nullptr);
  EXPECT_GT(r.residual("max_member_magnitude"), 0.0);
}

TEST(Minors, RankOneIsotropicProductSatisfiesBothConditions) {
  // a = p q^t: every 2x2 minor vanishes, and a a^t = (q.q) p p^t vanishes when q is isotropic.
  const ComplexVector p{1.0, Complex(0.5, 2.0)};
  const ComplexVector iso{1.0, kI};
  const ComplexVector plain{1.0, 2.0};
  const auto outer_of = [](const ComplexVector& u, const ComplexVector& v) {
    ComplexMatrix a(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a(i, j) = u[i] * v[j];
    return a;
  };
  const MinorResiduals good = minor_condition(outer_of(p, iso), outer_of(p, iso));
  EXPECT_LT(good.minors, 1e-15);
  EXPECT_LT(good.product, 1e-15);
  const MinorResiduals bad = minor_condition(outer_of(p, plain), outer_of(p, plain));
  EXPECT_LT(bad.minors, 1e-15);
  EXPECT_GT(bad.product, 1.0);
}
