#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgh/config.hpp"
#include "lgh/suite.hpp"

namespace {

using lgh::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Flags {
  std::string config;
  std::string out;
  std::size_t n{0};
  std::size_t p{0};
  std::size_t q{0};
  std::string group;
  std::string pair;
  std::string family;
  std::size_t samples{0};
  std::uint64_t seed{0};
  double tol{0.0};
  double radius{0.0};
  double floor{0.0};
};

struct Options {
  CLI::Option* n{};
  CLI::Option* p{};
  CLI::Option* q{};
  CLI::Option* samples{};
  CLI::Option* seed{};
  CLI::Option* tol{};
  CLI::Option* radius{};
  CLI::Option* floor{};
};

void add_common(CLI::App* sub, Flags& f, Options& o) {
  sub->add_option("--config", f.config, "JSON run configuration");
  sub->add_option("--out", f.out, "write the JSON report to this file instead of stdout");
  o.samples = sub->add_option("--samples", f.samples, "number of samples (default 100)");
  o.seed = sub->add_option("--seed", f.seed, "64-bit RNG seed (default 42)");
  o.tol = sub->add_option("--tol", f.tol, "residual tolerance (default 1e-8)");
  o.radius = sub->add_option("--radius", f.radius, "sampling radius in (0, 1] (default 0.5)");
  o.floor = sub->add_option("--floor", f.floor, "quotient domain floor (default 1e-3)");
  o.n = sub->add_option("--n", f.n, "size parameter");
  o.p = sub->add_option("--p", f.p, "first signature parameter");
  o.q = sub->add_option("--q", f.q, "second signature parameter");
}

// Configuration file first, then explicit flags on top.
lgh::RunConfig merged_config(const Flags& f, const Options& o) {
  lgh::RunConfig c = f.config.empty() ? lgh::RunConfig{} : lgh::load_config(f.config);
  if (o.samples && o.samples->count()) c.samples = f.samples;
  if (o.seed && o.seed->count()) c.seed = f.seed;
  if (o.tol && o.tol->count()) c.tol = f.tol;
  if (o.radius && o.radius->count()) c.radius = f.radius;
  if (o.floor && o.floor->count()) c.floor = f.floor;
  lgh::validate(c);
  return c;
}

std::size_t required_n(const Flags& f, const Options& o) {
  if (!o.n->count()) throw lgh::ConfigError("n", "missing (use --n)");
  if (f.n == 0) throw lgh::ConfigError("n", "must be positive");
  return f.n;
}

lgh::GroupId group_from_flags(const std::string& name, const Flags& f, const Options& o, const std::string& field) {
  json j = {{"family", name}};
  if (o.n->count()) j["n"] = f.n;
  if (o.p->count()) j["p"] = f.p;
  if (o.q->count()) j["q"] = f.q;
  return lgh::group_from_json(j, field);
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(out);
  if (!file) throw lgh::ConfigError("out", "cannot write '" + out + "'");
  file << j.dump(2) << "\n";
}

int verdict(const lgh::VerificationReport& r) { return !r.pass || *r.pass ? kExitPass : kExitFail; }

int run_identities(const Flags& f, const Options& o) {
  const lgh::RunConfig c = merged_config(f, o);
  const double tol = o.tol->count() ? c.tol : lgh::kIdentityTol;
  const auto r = lgh::identities_report(required_n(f, o), tol);
  emit(lgh::to_json(r), f.out);
  return verdict(r);
}

int run_lemma(const Flags& f, const Options& o) {
  lgh::RunConfig c = merged_config(f, o);
  if (!f.group.empty()) c.group = group_from_flags(f.group, f, o, "group");
  if (!c.group) throw lgh::ConfigError("group", "missing (use --group or a config 'group')");
  const auto r = lgh::verify_coordinate_lemmas(*c.group, lgh::sample_group(*c.group, c.samples, c.seed, c.radius), c.tol);
  emit(lgh::to_json(r), f.out);
  return verdict(r);
}

lgh::FamilySpec family_spec(const lgh::RunConfig& c, const Flags& f, const Options& o) {
  if (!f.family.empty()) {
    json j = {{"kind", f.family}, {"n", required_n(f, o)}};
    return lgh::family_from_json(j);
  }
  if (!c.family) throw lgh::ConfigError("family", "missing (use --family KIND --n N or a config 'family')");
  return *c.family;
}

int run_family(const Flags& f, const Options& o) {
  const lgh::RunConfig c = merged_config(f, o);
  const lgh::Eigenfamily fam = lgh::build_family(family_spec(c, f, o));
  const auto r = lgh::verify_eigenfamily(fam, lgh::compact_basis(fam.group),
                                         lgh::sample_group(fam.group, c.samples, c.seed, c.radius), c.tol);
  emit(lgh::to_json(r), f.out);
  return verdict(r);
}

int run_morphism(const Flags& f, const Options& o) {
  const lgh::RunConfig c = merged_config(f, o);
  if (!c.morphism) throw lgh::ConfigError("morphism", "missing (verify-morphism needs a config with 'morphism')");
  const lgh::Eigenfamily fam = lgh::build_family(family_spec(c, f, o));
  lgh::RationalMorphism m;
  try {
    m = lgh::quotient_morphism(fam, c.morphism->P, c.morphism->Q, c.floor);
  } catch (const lgh::ValidationError& e) {
    throw lgh::ConfigError("morphism", e.what());
  }
  const lgh::SignedBasis basis = lgh::compact_basis(fam.group);
  std::size_t drawn = 0;
  const auto samples = lgh::sample_domain(
      basis, c.samples, c.radius, c.seed, [&](const lgh::ComplexMatrix& x) { return lgh::in_quotient_domain(m, x); },
      10, &drawn);
  auto r = lgh::verify_harmonic_morphism(m, basis, samples, c.tol);
  r.samples_discarded = drawn - samples.size();
  emit(lgh::to_json(r), f.out);
  return verdict(r);
}

lgh::GroupId pair_group(const lgh::RunConfig& c, const Flags& f, const Options& o) {
  if (!f.pair.empty()) return group_from_flags(f.pair, f, o, "pair");
  if (!c.pair) throw lgh::ConfigError("pair", "missing (use --pair FAMILY with --n or --p/--q, or a config 'pair')");
  return *c.pair;
}

int run_duality(const Flags& f, const Options& o) {
  const lgh::RunConfig c = merged_config(f, o);
  const lgh::GroupId g = pair_group(c, f, o);
  if (c.family || !f.family.empty()) {
    const lgh::DualPair pair = lgh::dual_pair(g);
    const auto r = lgh::verify_dual_eigenfamily(pair, lgh::build_family(family_spec(c, f, o)),
                                                lgh::sample_noncompact(pair, c.samples, c.radius, c.seed), c.tol);
    emit(lgh::to_json(r), f.out);
    return verdict(r);
  }
  const auto r = lgh::duality_report(g, c.samples, c.radius, c.seed, c.tol);
  emit(lgh::to_json(r), f.out);
  return verdict(r);
}

int run_probe(const Flags& f, const Options& o) {
  const lgh::RunConfig c = merged_config(f, o);
  const lgh::GroupId g = (!f.pair.empty() || c.pair) ? pair_group(c, f, o) : lgh::GroupId::so_pq(2, 2);
  const lgh::DualPair pair = g.compact() ? lgh::identity_pair(g) : lgh::dual_pair(g);
  lgh::Eigenfamily fam;
  if (c.family || !f.family.empty()) {
    fam = lgh::build_family(family_spec(c, f, o));
  } else {
    if (!(pair.compact == lgh::GroupId::so(4)))
      throw lgh::ConfigError("family", "the default probe family lives on SO(4); give a family for " +
                                           lgh::to_string(pair.compact));
    fam = lgh::so_family_special(4, lgh::so4_deformation(lgh::Complex(0.3, 0.1), lgh::Complex(-0.2, 0.4)));
  }
  const auto r = lgh::probe_noncontinuable(pair, fam, lgh::sample_noncompact(pair, c.samples, c.radius, c.seed));
  emit(lgh::to_json(r), f.out);
  return kExitPass;
}

int run_suite_cmd(const Flags& f, const Options& o) {
  const lgh::RunConfig c = merged_config(f, o);
  lgh::SuiteOptions s;
  s.seed = c.seed;
  s.radius = c.radius;
  if (o.tol->count()) s.tol = c.tol;
  if (o.samples->count()) s.samples = c.samples;
  if (o.floor->count()) s.floor = c.floor;
  const auto result = lgh::run_suite(s);
  emit(lgh::to_json(result), f.out);
  return result.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenfamily and harmonic morphism verification on classical Lie groups"};
  app.require_subcommand(1);
  Flags f;
  Options o;

  auto* identities = app.add_subcommand("verify-identities", "generator identities for the real matrix basis");
  auto* lemma = app.add_subcommand("verify-lemma", "tau and kappa formulas for coordinate functions");
  auto* family = app.add_subcommand("verify-family", "eigenfamily equations for a configured family");
  auto* morphism = app.add_subcommand("verify-morphism", "harmonic morphism P/Q built from a family");
  auto* duality = app.add_subcommand("verify-duality", "continued family on a non-compact dual");
  auto* probe = app.add_subcommand("probe-duality", "informational dual residuals of a non-continuable family");
  auto* suite = app.add_subcommand("suite", "full acceptance matrix");

  // Every subcommand shares one flag set; each gets its own option objects.
  std::vector<std::pair<CLI::App*, Options>> subs;
  for (auto* sub : {identities, lemma, family, morphism, duality, probe, suite}) {
    Options so;
    add_common(sub, f, so);
    subs.emplace_back(sub, so);
  }
  lemma->add_option("--group", f.group, "so, u or sp");
  for (auto* sub : {family, morphism, duality, probe})
    sub->add_option("--family", f.family, "family kind: so_v, so_special, u, su, sp");
  for (auto* sub : {duality, probe})
    sub->add_option("--pair", f.pair, "non-compact family: sl_r, su_star, sp_r, so_star, so_pq, su_pq, sp_pq");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitError;
  }

  try {
    for (auto& [sub, so] : subs) {
      if (!sub->parsed()) continue;
      o = so;
      if (sub == identities) return run_identities(f, o);
      if (sub == lemma) return run_lemma(f, o);
      if (sub == family) return run_family(f, o);
      if (sub == morphism) return run_morphism(f, o);
      if (sub == duality) return run_duality(f, o);
      if (sub == probe) return run_probe(f, o);
      if (sub == suite) return run_suite_cmd(f, o);
    }
  } catch (const lgh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
