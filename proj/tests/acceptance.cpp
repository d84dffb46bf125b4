// Acceptance matrix: one PASS/FAIL line per criterion, then a determinism check.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "lgh/suite.hpp"

namespace {

// Runtime limits in seconds for the criteria that carry one.
constexpr double kLimitIdentities = 1.0;
constexpr double kLimitLemmaSO = 30.0;
constexpr double kLimitDuality = 120.0;

const char* word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string worst(const lgh::SuiteResult& r, int c) {
  double ratio = 0.0;
  std::string where = "-";
  for (const auto& e : r.entries) {
    if (e.criterion != c) continue;
    for (const auto& res : e.report.residuals) {
      const double q = res.tol > 0 ? res.value / res.tol : 0.0;
      if (!(q <= ratio)) {
        ratio = q;
        where = e.report.check + " " + e.report.group + " " + res.name;
      }
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "worst residual/tol %.3g at %s", ratio, where.c_str());
  return buf;
}

}  // namespace

int main() {
  const lgh::SuiteResult r = lgh::run_suite();
  const char* names[] = {"",
                         "matrix identities n=2..10 < 1e-12",
                         "coordinate lemma SO(2..6), 200 samples, 1e-8",
                         "coordinate lemma U(2..4), 200 samples, 1e-8",
                         "coordinate lemma Sp(1..3), 200 samples, 1e-8 / 1e-10",
                         "eigenfamilies SO, SO(4) deformations, U, SU, Sp at 1e-8",
                         "P/Q factory 1e-7, Hopf 1e-9, negative control",
                         "power constants 1e-8, quotient condition 1e-7",
                         "duality on 11 pairs at 1e-8"};
  const double limits[] = {0, kLimitIdentities, kLimitLemmaSO, 0, 0, 0, 0, 0, kLimitDuality};
  bool all = true;
  for (int c = 1; c <= lgh::kCriteria; ++c) {
    const bool within = limits[c] == 0 || r.criterion_seconds[c] < limits[c];
    const bool ok = r.criterion_passed(c) && within;
    all = all && ok;
    std::printf("criterion %d: %s  %s  (%.3f s%s)  %s\n", c, word(ok), names[c], r.criterion_seconds[c],
                limits[c] > 0 ? (within ? ", within limit" : ", OVER LIMIT") : "", worst(r, c).c_str());
  }

  const std::string first = lgh::to_json(r, false).dump();
  const std::string second = lgh::to_json(lgh::run_suite(), false).dump();
  setenv("LGH_THREADS", "1", 1);
  const std::string serial = lgh::to_json(lgh::run_suite(), false).dump();
  const bool same = first == second && first == serial;
  all = all && same;
  std::printf("criterion 9: %s  determinism: seed 42 twice and single-threaded give identical reports\n", word(same));
  std::printf("acceptance: %s\n", word(all));
  return all ? 0 : 1;
}
