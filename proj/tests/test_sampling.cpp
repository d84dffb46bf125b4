#include <gtest/gtest.h>

#include <cstdlib>

#include "lgh/report.hpp"
#include "lgh/sampling.hpp"

using namespace lgh;

TEST(SplitMix64, MatchesPublishedReferenceStream) {
  // Reference outputs of splitmix64 seeded with 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng(), 6457827717110365317ULL);
  EXPECT_EQ(rng(), 3203168211198807973ULL);
  EXPECT_EQ(rng(), 9817491932198370423ULL);
  EXPECT_EQ(rng(), 4593380528125082431ULL);
  EXPECT_EQ(rng(), 16408922859458223821ULL);
}

TEST(SplitMix64, UniformRangeAndDisc) {
  SplitMix64 rng(99);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LE(std::abs(rng.unit_disc()), 1.0);
  }
}

class GroupSamples : public ::testing::TestWithParam<GroupId> {};

TEST_P(GroupSamples, LieOnTheGroup) {
  for (const auto& x : sample_group(GetParam(), 20, 5)) EXPECT_LT(group_defect(GetParam(), x), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Groups, GroupSamples,
                         ::testing::Values(GroupId::so(2), GroupId::so(6), GroupId::u(1), GroupId::u(4),
                                           GroupId::su(2), GroupId::su(4), GroupId::sp(1), GroupId::sp(3)));

TEST(Sampling, DeterministicInSeed) {
  const auto a = sample_group(GroupId::u(3), 5, 77);
  const auto b = sample_group(GroupId::u(3), 5, 77);
  const auto c = sample_group(GroupId::u(3), 5, 78);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
  EXPECT_FALSE(a[0] == c[0]);
}

TEST(Sampling, ZeroRadiusGivesIdentity) {
  for (const auto& x : sample_group(GroupId::sp(2), 3, 1, 0.0)) EXPECT_EQ(x, ComplexMatrix::identity(4));
}

TEST(Sampling, GroupDefectDetectsOffGroupPoints) {
  ComplexMatrix x = ComplexMatrix::identity(3);
  x(0, 0) = 2.0;
  EXPECT_GT(group_defect(GroupId::so(3), x), 0.5);
  EXPECT_GT(group_defect(GroupId::u(3), x), 0.5);
  ComplexMatrix r = ComplexMatrix::identity(2);
  r(0, 0) = -1.0;  // in O(2), not SO(2)
  EXPECT_GT(group_defect(GroupId::so(2), r), 1.0);
}

TEST(Parallel, ResultsIndependentOfWorkerCount) {
  const auto run = [] {
    return max_over_samples(sample_group(GroupId::u(2), 64, 3), 1, [](const ComplexMatrix& x) {
      return std::vector<double>{std::abs(x(0, 0) * x(1, 1))};
    });
  };
  setenv("LGH_THREADS", "1", 1);
  const auto one = run();
  setenv("LGH_THREADS", "4", 1);
  const auto four = run();
  unsetenv("LGH_THREADS");
  EXPECT_EQ(one, four);
}

TEST(Parallel, WorkerExceptionsPropagate) {
  EXPECT_THROW((void)parallel_map(8, [](std::size_t i) -> int {
                 if (i == 5) throw std::runtime_error("boom");
                 return 0;
               }),
               std::runtime_error);
}

TEST(Report, NanResidualFails) {
  VerificationReport r;
  r.tol = 1.0;
  r.add("x", std::nan(""));
  r.decide();
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(std::isnan(max_nan(0.0, std::nan(""))));
}

TEST(Report, PassRequiresEveryResidualBelowTolerance) {
  VerificationReport r;
  r.tol = 1e-8;
  r.add("a", 1e-9);
  r.add("b", 5e-9, 1e-9);
  r.decide();
  EXPECT_FALSE(r.passed());
  r.residuals.pop_back();
  r.decide();
  EXPECT_TRUE(r.passed());
}
