#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgh/algebra.hpp"
#include "lgh/duality.hpp"
#include "lgh/errors.hpp"
#include "lgh/families.hpp"
#include "lgh/morphisms.hpp"
#include "lgh/operators.hpp"
#include "lgh/report.hpp"
#include "lgh/sampling.hpp"

namespace lgh {

// `tol` can only tighten the built-in tolerances; `samples` replaces every sample count.
struct SuiteOptions {
  std::uint64_t seed{42};
  std::optional<double> tol;
  std::optional<std::size_t> samples;
  double radius{kDefaultRadius};
  std::optional<double> floor;  // replaces the factory domain floor
};

struct SuiteEntry {
  int criterion{0};
  VerificationReport report;
};

struct SuiteResult {
  std::uint64_t seed{0};
  std::vector<SuiteEntry> entries;
  std::vector<double> criterion_seconds;  // index c holds the wall time of criterion c

  // Informational entries (pass unset) do not take part in the verdict.
  bool criterion_passed(int c) const {
    bool any = false;
    for (const auto& e : entries) {
      if (e.criterion != c || !e.report.pass) continue;
      any = true;
      if (!*e.report.pass) return false;
    }
    return any;
  }

  bool passed() const {
    for (const auto& e : entries)
      if (e.report.pass && !*e.report.pass) return false;
    return true;
  }
};

inline constexpr int kCriteria = 8;

// Fixed tolerances of the acceptance matrix.
inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kLemmaTol = 1e-8;
inline constexpr double kFamilyTol = 1e-8;
inline constexpr double kFactoryTol = 1e-7;
inline constexpr double kHopfTol = 1e-9;
inline constexpr double kPowerTol = 1e-8;
inline constexpr double kQuotientTol = 1e-7;
inline constexpr double kDualTol = 1e-8;

inline constexpr std::size_t kLemmaSamples = 200;
inline constexpr std::size_t kFamilySamples = 100;
inline constexpr std::size_t kFactoryPairs = 20;
inline constexpr std::size_t kFactorySamples = 50;
inline constexpr std::size_t kFactoryMaxMembers = 4;
inline constexpr unsigned kFactoryMaxDegree = 3;
inline constexpr std::size_t kDeformations = 10;
inline constexpr double kHopfFloor = 0.1;
// Rounding in kappa(P/Q) grows like eps |grad(P/Q)|^2 ~ eps / |Q|^4; at |Q| > 0.05 it stays near 1e-10.
inline constexpr double kFactoryFloor = 0.05;
inline constexpr double kRatioFloor = 0.1;
inline constexpr double kControlTol = 1e-8;

namespace detail {

inline double tighten(double builtin, const SuiteOptions& o) { return o.tol ? std::min(builtin, *o.tol) : builtin; }
inline std::size_t count(std::size_t builtin, const SuiteOptions& o) { return o.samples.value_or(builtin); }

inline void tighten_all(VerificationReport& r, const SuiteOptions& o) {
  if (!o.tol) return;
  r.tol = std::min(r.tol, *o.tol);
  for (auto& res : r.residuals) res.tol = std::min(res.tol, *o.tol);
  r.decide();
}

// Runs `fn`; a library exception becomes a failed report that records the message.
inline VerificationReport guarded(const std::string& check, const std::string& group,
                                  const std::function<VerificationReport()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    VerificationReport r;
    r.check = check;
    r.group = group;
    r.parameters = {{"error", e.what()}};
    r.pass = false;
    return r;
  }
}

// Measured eigen-ratios tau(phi)/phi - lambda and kappa(phi,psi)/(phi psi) - mu at
// points where the denominators exceed `floor` in magnitude.
struct RatioMeasurement {
  double lambda_dev{0.0};
  double mu_dev{0.0};
  std::size_t tau_points{0};
  std::size_t kappa_points{0};
};

inline RatioMeasurement measure_ratios(const Eigenfamily& fam, const SignedBasis& basis,
                                       const std::vector<ComplexMatrix>& samples, double floor) {
  const auto per = parallel_map(samples.size(), [&](std::size_t s) {
    const Frame frame(samples[s], basis);
    const OperatorTable t = operator_table(fam.members, frame);
    RatioMeasurement m;
    for (std::size_t a = 0; a < t.values.size(); ++a) {
      if (std::abs(t.values[a]) > floor) {
        m.lambda_dev = max_nan(m.lambda_dev, std::abs(t.tau[a] / t.values[a] - fam.lambda));
        ++m.tau_points;
      }
      for (std::size_t b = 0; b < t.values.size(); ++b) {
        const Complex d = t.values[a] * t.values[b];
        if (std::abs(d) <= floor) continue;
        m.mu_dev = max_nan(m.mu_dev, std::abs(t.kappa[a][b] / d - fam.mu));
        ++m.kappa_points;
      }
    }
    return m;
  });
  RatioMeasurement out;
  for (const auto& m : per) {
    out.lambda_dev = max_nan(out.lambda_dev, m.lambda_dev);
    out.mu_dev = max_nan(out.mu_dev, m.mu_dev);
    out.tau_points += m.tau_points;
    out.kappa_points += m.kappa_points;
  }
  return out;
}

struct NamedFamily {
  std::string label;
  Eigenfamily family;
};

// Unit-norm p with every coordinate non-zero.
inline ComplexVector generic_vector(std::size_t n) {
  ComplexVector p(n);
  double norm2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    p[k] = Complex(1.0 + 0.25 * static_cast<double>(k), 0.5 - 0.3 * static_cast<double>(k));
    norm2 += std::norm(p[k]);
  }
  for (auto& v : p) v /= std::sqrt(norm2);
  return p;
}

inline Eigenfamily truncated(const Eigenfamily& fam, std::size_t m) {
  Eigenfamily out = fam;
  if (out.members.size() > m) out.members.resize(m);
  return out;
}

}  // namespace detail

// The families of criterion 5; the (z, w) deformations of SO(4) are drawn from the unit disc.
inline std::vector<detail::NamedFamily> acceptance_families(std::uint64_t seed, std::size_t deformations = kDeformations) {
  std::vector<detail::NamedFamily> out;
  for (std::size_t n : {4, 5, 6})
    out.push_back({"maximal_isotropic", so_family_V(n, detail::generic_vector(n), maximal_isotropic_basis(n))});
  SplitMix64 rng(seed);
  for (std::size_t k = 0; k < deformations; ++k) {
    const Complex z = rng.unit_disc();
    const Complex w = rng.unit_disc();
    out.push_back({"isotropic_vector", so_family_special(4, so4_deformation(z, w))});
  }
  for (std::size_t n : {2, 3}) out.push_back({"unitary", u_family(n, detail::generic_vector(n))});
  for (std::size_t n : {2, 3}) out.push_back({"special_unitary", su_family(n, detail::generic_vector(n))});
  for (std::size_t n : {1, 2}) out.push_back({"quaternionic", sp_family(n, detail::generic_vector(n))});
  return out;
}

// Families of criterion 6: those of criterion 5 with a single SO(4) deformation.
inline std::vector<detail::NamedFamily> factory_families(std::uint64_t seed) { return acceptance_families(seed, 1); }

// The compact family continued to each non-compact dual.
inline Eigenfamily dual_test_family(const DualPair& pair) {
  const std::size_t n = pair.compact.n;
  const ComplexVector p = detail::generic_vector(n);
  switch (pair.compact.family) {
    case GroupFamily::SU: return su_family(n, p);
    case GroupFamily::U: return u_family(n, p);
    case GroupFamily::Sp: return sp_family(n, p);
    case GroupFamily::SO: return so_family_V(n, p, maximal_isotropic_basis(n));
    default: throw ArgumentError("dual_test_family: unsupported compact group " + to_string(pair.compact));
  }
}

inline std::vector<GroupId> acceptance_pairs() {
  return {GroupId::slr(2),    GroupId::slr(3),      GroupId::su_star(4),  GroupId::sp_r(1),
          GroupId::sp_r(2),   GroupId::so_star(4),  GroupId::so_pq(1, 2), GroupId::so_pq(2, 2),
          GroupId::su_pq(1, 1), GroupId::su_pq(1, 2), GroupId::sp_pq(1, 1)};
}

// ---------------------------------------------------------------------------
// Individual checks, shared by the suite and the command line.
// ---------------------------------------------------------------------------

inline VerificationReport identities_report(std::size_t n, double tol = kIdentityTol) {
  Stopwatch clock;
  VerificationReport r;
  r.check = "matrix_identities";
  r.group = "n=" + std::to_string(n);
  r.parameters = {{"n", n}};
  r.tol = tol;
  const IdentityResiduals id = verify_matrix_identities(n);
  r.add("sum_x_squared", id.sum_x_squared);
  r.add("sum_y_squared", id.sum_y_squared);
  r.add("sum_d_squared", id.sum_d_squared);
  r.add("x_sandwich", id.x_sandwich);
  r.add("y_sandwich", id.y_sandwich);
  r.add("d_sandwich", id.d_sandwich);
  r.decide();
  r.wall_time_s = clock.seconds();
  return r;
}

// Max deviation of measured eigen-ratios from the power-family constants.
inline VerificationReport power_constants_report(const Eigenfamily& fam, unsigned k,
                                                 const std::vector<ComplexMatrix>& samples, double tol = kPowerTol) {
  Stopwatch clock;
  const PowerFamily pf = power_family(fam, k);
  const Eigenfamily pe = pf.as_eigenfamily();
  const SignedBasis basis = compact_basis(fam.group);
  VerificationReport r = verify_eigenfamily(pe, basis, samples, tol);
  r.check = "power_constants";
  r.parameters["k"] = k;
  const auto m = detail::measure_ratios(pe, basis, samples, kRatioFloor);
  r.add("lambda_ratio", m.tau_points ? m.lambda_dev : std::nan(""));
  r.add("mu_ratio", m.kappa_points ? m.mu_dev : std::nan(""));
  r.add_diagnostic("ratio_points_tau", static_cast<double>(m.tau_points));
  r.add_diagnostic("ratio_points_kappa", static_cast<double>(m.kappa_points));
  r.decide();
  r.wall_time_s = clock.seconds();
  return r;
}

// Pair invariants as residuals, then the continued family with negated constants.
inline VerificationReport duality_report(const GroupId& g, std::size_t samples, double radius, std::uint64_t seed,
                                         double tol = kDualTol) {
  Stopwatch clock;
  const DualPair pair = dual_pair(g);
  const Eigenfamily fam = dual_test_family(pair);
  VerificationReport r = verify_dual_eigenfamily(pair, fam, sample_noncompact(pair, samples, radius, seed), tol);
  const auto& inv = pair.invariants;
  r.add("involution", inv.involution, kInvolutionTol);
  r.add("automorphism", inv.automorphism, kAutomorphismTol);
  r.add("bracket_kk", inv.bracket_kk, kBracketTol);
  r.add("bracket_kp", inv.bracket_kp, kBracketTol);
  r.add("bracket_pp", inv.bracket_pp, kBracketTol);
  r.add("sign", inv.sign, kSignTol);
  r.add("dimension", std::abs(static_cast<double>(inv.dim_k + inv.dim_p) - static_cast<double>(inv.dim_compact)), 0.5);
  r.parameters["dim_k"] = inv.dim_k;
  r.parameters["dim_p"] = inv.dim_p;
  r.parameters["radius"] = radius;
  r.decide();
  r.wall_time_s = clock.seconds();
  return r;
}

// The SO(4) family built from an isotropic p, evaluated on SO(2,2); informational.
inline VerificationReport deformed_family_dual_probe(std::size_t samples, double radius, std::uint64_t seed) {
  const DualPair pair = dual_pair(GroupId::so_pq(2, 2));
  const Eigenfamily fam = so_family_special(4, so4_deformation(Complex(0.3, 0.1), Complex(-0.2, 0.4)));
  VerificationReport r = probe_noncontinuable(pair, fam, sample_noncompact(pair, samples, radius, seed));
  r.parameters["radius"] = radius;
  return r;
}

// ---------------------------------------------------------------------------
// The acceptance matrix.
// ---------------------------------------------------------------------------

inline SuiteResult run_suite(const SuiteOptions& o = {}) {
  SuiteResult out;
  out.seed = o.seed;
  out.criterion_seconds.assign(kCriteria + 1, 0.0);
  SplitMix64 seeds(o.seed);
  const double factory_floor = o.floor.value_or(kFactoryFloor);
  const auto push = [&](int c, VerificationReport r) {
    detail::tighten_all(r, o);
    out.entries.push_back({c, std::move(r)});
  };

  // 1. Matrix identities.
  {
    Stopwatch clock;
    for (std::size_t n = 2; n <= 10; ++n) push(1, identities_report(n, detail::tighten(kIdentityTol, o)));
    out.criterion_seconds[1] = clock.seconds();
  }

  // 2-4. Coordinate lemmas on SO(n), U(n), Sp(n).
  const auto lemmas = [&](int c, GroupFamily f, std::initializer_list<std::size_t> sizes) {
    Stopwatch clock;
    for (std::size_t n : sizes) {
      const GroupId g = make_group(f, n);
      const std::uint64_t s = seeds();
      push(c, detail::guarded("coordinate_lemma", to_string(g), [&] {
             return verify_coordinate_lemmas(g, sample_group(g, detail::count(kLemmaSamples, o), s, o.radius),
                                             detail::tighten(kLemmaTol, o));
           }));
    }
    out.criterion_seconds[c] = clock.seconds();
  };
  lemmas(2, GroupFamily::SO, {2, 3, 4, 5, 6});
  lemmas(3, GroupFamily::U, {2, 3, 4});
  lemmas(4, GroupFamily::Sp, {1, 2, 3});

  // 5. Eigenfamilies and the Sp(1) / SU(2) constant cross-check.
  {
    Stopwatch clock;
    for (const auto& nf : acceptance_families(seeds())) {
      const std::uint64_t s = seeds();
      push(5, detail::guarded("eigenfamily", to_string(nf.family.group), [&] {
             auto r = verify_eigenfamily(nf.family, compact_basis(nf.family.group),
                                         sample_group(nf.family.group, detail::count(kFamilySamples, o), s, o.radius),
                                         detail::tighten(kFamilyTol, o));
             r.parameters["label"] = nf.label;
             return r;
           }));
    }
    const std::uint64_t s = seeds();
    push(5, detail::guarded("constants_cross_check", "Sp(1)~SU(2)", [&] {
           VerificationReport r;
           r.check = "constants_cross_check";
           r.group = "Sp(1)~SU(2)";
           r.tol = detail::tighten(kFamilyTol, o);
           const Complex lam(-1.5), mu(-0.5);
           const auto sp = eigen_constants(GroupId::sp(1));
           const auto su = eigen_constants(GroupId::su(2));
           r.add("sp1_lambda", std::abs(sp.lambda - lam));
           r.add("sp1_mu", std::abs(sp.mu - mu));
           r.add("su2_lambda", std::abs(su.lambda - lam));
           r.add("su2_mu", std::abs(su.mu - mu));
           const std::size_t m = detail::count(kFamilySamples, o);
           for (const auto& fam : {sp_family(1, detail::generic_vector(1)), su_family(2, detail::generic_vector(2))}) {
             const auto ratios = detail::measure_ratios(fam, compact_basis(fam.group), sample_group(fam.group, m, s, o.radius),
                                                        kRatioFloor);
             const std::string tag = fam.group.family == GroupFamily::Sp ? "sp1" : "su2";
             r.add(tag + "_measured_lambda", ratios.tau_points ? ratios.lambda_dev : std::nan(""));
             r.add(tag + "_measured_mu", ratios.kappa_points ? ratios.mu_dev : std::nan(""));
           }
           r.samples_used = m;
           r.decide();
           return r;
         }));
    out.criterion_seconds[5] = clock.seconds();
  }

  // 6 and 7b. Random P/Q factory instances; the quotient condition is checked on the same instances.
  {
    Stopwatch clock6;
    double seconds7 = 0.0;
    for (const auto& nf : factory_families(seeds())) {
      const Eigenfamily fam = detail::truncated(nf.family, kFactoryMaxMembers);
      const SignedBasis basis = compact_basis(fam.group);
      const std::size_t want = detail::count(kFactorySamples, o);
      VerificationReport agg;
      agg.check = "harmonic_morphism_factory";
      agg.group = to_string(fam.group);
      agg.tol = detail::tighten(kFactoryTol, o);
      agg.parameters = {{"label", nf.label}, {"instances", kFactoryPairs}, {"family_size", fam.members.size()},
                        {"floor", factory_floor}};
      VerificationReport quot = agg;
      quot.check = "quotient_condition";
      quot.tol = detail::tighten(kQuotientTol, o);
      double tau = 0.0, kappa = 0.0, shortfall = 0.0, min_used = static_cast<double>(want);
      double q[4] = {0.0, 0.0, 0.0, 0.0};
      SplitMix64 rng(seeds());
      for (std::size_t i = 0; i < kFactoryPairs; ++i) {
        const unsigned d = 1 + static_cast<unsigned>(i % kFactoryMaxDegree);
        CoeffMap p = random_hom_poly(fam.members.size(), d, rng);
        CoeffMap qc = random_hom_poly(fam.members.size(), d, rng);
        while (proportional(p, qc)) qc = random_hom_poly(fam.members.size(), d, rng);
        const RationalMorphism m = quotient_morphism(fam, p, qc, factory_floor);
        std::size_t drawn = 0;
        const auto samples = sample_domain(
            basis, want, o.radius, rng(), [&](const ComplexMatrix& x) { return in_quotient_domain(m, x); }, 10, &drawn);
        agg.samples_discarded += drawn - samples.size();
        if (samples.size() < want) shortfall += 1.0;
        min_used = std::min(min_used, static_cast<double>(samples.size()));
        agg.samples_used += samples.size();
        if (samples.empty()) {
          tau = kappa = std::nan("");
          continue;
        }
        const auto hm = verify_harmonic_morphism(m, basis, samples, agg.tol);
        tau = max_nan(tau, hm.residual("tau"));
        kappa = max_nan(kappa, hm.residual("kappa"));
        Stopwatch clock7;
        const auto qr = verify_quotient_condition(fam, p, qc, basis, samples, quot.tol);
        q[0] = max_nan(q[0], qr.residual("q2_kpp_minus_pq_kpq"));
        q[1] = max_nan(q[1], qr.residual("pq_kpq_minus_p2_kqq"));
        q[2] = max_nan(q[2], qr.residual("tau_p"));
        q[3] = max_nan(q[3], qr.residual("tau_q"));
        seconds7 += clock7.seconds();
      }
      agg.add("tau", tau);
      agg.add("kappa", kappa);
      agg.add("instances_short_of_samples", shortfall, 0.5);
      agg.add_diagnostic("min_in_domain_samples", min_used);
      agg.decide();
      quot.samples_used = agg.samples_used;
      quot.add("q2_kpp_minus_pq_kpq", q[0]);
      quot.add("pq_kpq_minus_p2_kqq", q[1]);
      quot.add("tau_p", q[2]);
      quot.add("tau_q", q[3]);
      quot.decide();
      push(6, std::move(agg));
      push(7, std::move(quot));
    }

    // Hopf map z/w on SU(2).
    const std::uint64_t hs = seeds();
    push(6, detail::guarded("hopf", "SU(2)", [&] {
           const Eigenfamily fam = su_family(2, unit_vector(0, 2));
           const RationalMorphism m = quotient_morphism(fam, {{{1, 0}, 1.0}}, {{{0, 1}, 1.0}}, kHopfFloor);
           const SignedBasis basis = compact_basis(fam.group);
           std::size_t drawn = 0;
           const auto samples = sample_domain(
               basis, detail::count(kFamilySamples, o), o.radius, hs,
               [&](const ComplexMatrix& x) { return in_quotient_domain(m, x); }, 10, &drawn);
           auto r = verify_harmonic_morphism(m, basis, samples, detail::tighten(kHopfTol, o));
           r.check = "hopf";
           r.samples_discarded = drawn - samples.size();
           return r;
         }));

    // Negative control z_11 / 1 on U(2): tau(z_11) = -2 z_11, so the harmonic residual is 2 max|z_11|.
    const std::uint64_t ns = seeds();
    push(6, detail::guarded("negative_control", "U(2)", [&] {
           const GroupId g = GroupId::u(2);
           const auto samples = sample_group(g, detail::count(kFamilySamples, o), ns, o.radius);
           const FunctionExpr f = FunctionExpr::quotient(FunctionExpr::entry(0, 0), FunctionExpr::constant(1.0));
           const VerificationReport inner =
               verify_eigenfamily(orthogonal_family(g, {f}), compact_basis(g), samples, kFactoryTol);
           double max_z11 = 0.0;
           for (const auto& x : samples) max_z11 = std::max(max_z11, std::abs(x(0, 0)));
           VerificationReport r;
           r.check = "negative_control";
           r.group = to_string(g);
           r.tol = detail::tighten(kControlTol, o);
           r.parameters = {{"function", "z_11 / 1"}, {"inner_pass", inner.passed()}};
           r.add("relative_deviation_from_2_max_abs_z11", std::abs(inner.residual("tau") / (2.0 * max_z11) - 1.0));
           r.add("harmonic_check_passed", inner.passed() ? 1.0 : 0.0, 0.5);
           r.add_diagnostic("tau_residual", inner.residual("tau"));
           r.add_diagnostic("two_max_abs_z11", 2.0 * max_z11);
           r.samples_used = samples.size();
           r.decide();
           return r;
         }));
    out.criterion_seconds[6] = clock6.seconds() - seconds7;

    // 7a. Power-family constants.
    Stopwatch clock7;
    for (const auto& fam : {u_family(2, detail::generic_vector(2)),
                            so_family_V(4, detail::generic_vector(4), maximal_isotropic_basis(4))}) {
      for (unsigned k : {2u, 3u}) {
        const std::uint64_t s = seeds();
        push(7, detail::guarded("power_constants", to_string(fam.group), [&] {
               return power_constants_report(fam, k, sample_group(fam.group, detail::count(kFamilySamples, o), s, o.radius),
                                             detail::tighten(kPowerTol, o));
             }));
      }
    }
    out.criterion_seconds[7] = seconds7 + clock7.seconds();
  }

  // 8. Duality, plus the informational probe of the isotropic-vector family on SO(2,2).
  {
    Stopwatch clock;
    for (const auto& g : acceptance_pairs()) {
      const std::uint64_t s = seeds();
      push(8, detail::guarded("dual_eigenfamily", to_string(g), [&] {
             return duality_report(g, detail::count(kFamilySamples, o), o.radius, s, detail::tighten(kDualTol, o));
           }));
    }
    const std::uint64_t s = seeds();
    push(8, detail::guarded("dual_probe", "SO(2,2)",
                            [&] { return deformed_family_dual_probe(detail::count(kFamilySamples, o), o.radius, s); }));
    out.criterion_seconds[8] = clock.seconds();
  }
  return out;
}

inline nlohmann::json to_json(const SuiteResult& s, bool include_wall_time = true) {
  nlohmann::json criteria = nlohmann::json::array();
  for (int c = 1; c <= kCriteria; ++c) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : s.entries)
      if (e.criterion == c) checks.push_back(to_json(e.report, include_wall_time));
    nlohmann::json entry = {{"criterion", c}, {"pass", s.criterion_passed(c)}, {"checks", std::move(checks)}};
    if (include_wall_time) entry["wall_time_s"] = s.criterion_seconds[c];
    criteria.push_back(std::move(entry));
  }
  return {{"suite", "acceptance"}, {"seed", s.seed}, {"pass", s.passed()}, {"criteria", std::move(criteria)}};
}

}  // namespace lgh
