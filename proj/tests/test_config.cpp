#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "lgh/config.hpp"

using namespace lgh;

namespace {

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST(Config, Defaults) {
  const RunConfig c = config_from_json(json::object());
  EXPECT_EQ(c.samples, 100u);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.radius, 0.5);
  EXPECT_EQ(c.tol, 1e-8);
  EXPECT_EQ(c.floor, 1e-3);
}

TEST(Config, RoundTrip) {
  RunConfig c;
  c.samples = 17;
  c.seed = 0xFFFFFFFFFFFFFFF1ULL;
  c.radius = 0.25;
  c.tol = 3e-9;
  c.floor = 0.02;
  c.group = GroupId::sp(2);
  c.pair = GroupId::su_star(4);
  FamilySpec f;
  f.kind = "so_v";
  f.n = 4;
  f.p = ComplexVector{1.0, Complex(0.0, 0.5), 0.0, -1.0};
  f.V = maximal_isotropic_basis(4);
  f.power = 2;
  c.family = f;
  c.morphism = MorphismSpec{{{{1, 1}, Complex(1.0, -2.0)}}, {{{2, 0}, 1.0}, {{0, 2}, kI}}};
  const json j = to_json(c);
  const RunConfig back = config_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(*back.pair, GroupId::su_star(4));
  EXPECT_EQ(back.family->V.size(), 2u);
  EXPECT_EQ(back.morphism->Q.at({0, 2}), kI);
}

TEST(Config, PairFormat) {
  const RunConfig c = config_from_json(json::parse(R"({"pair": {"family": "so_pq", "p": 2, "q": 2}})"));
  EXPECT_EQ(*c.pair, GroupId::so_pq(2, 2));
  EXPECT_EQ(group_to_json(GroupId::so_star(4))["n"], 4);
  EXPECT_EQ(group_from_json(group_to_json(GroupId::so_star(6)), "pair"), GroupId::so_star(6));
}

TEST(Config, ValidationNamesTheField) {
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"samples": 0})")); }), "samples");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"radius": 1.5})")); }), "radius");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"radius": 0})")); }), "radius");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"tol": -1})")); }), "tol");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"seed": "x"})")); }), "seed");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"group": {"family": "xx", "n": 2}})")); }),
            "group.family");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"pair": {"family": "so_pq", "p": 2}})")); }), "pair.q");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"family": {"kind": "u", "n": 2, "p": [[1]]}})")); }),
            "family.p[0]");
  EXPECT_EQ(field_of([] { config_from_json(json::parse(R"({"morphism": {"P": []}})")); }), "morphism");
  EXPECT_EQ(field_of([] { config_from_json(json::parse("[1]")); }), "<root>");
}

TEST(Config, BuildFamilies) {
  const auto build = [](const char* text) { return build_family(family_from_json(json::parse(text))); };
  EXPECT_EQ(build(R"({"kind": "u", "n": 3})").members.size(), 3u);
  EXPECT_EQ(build(R"({"kind": "sp", "n": 2, "p": [1, [0, 1]]})").members.size(), 4u);
  EXPECT_EQ(build(R"({"kind": "so_v", "n": 5})").members.size(), 2u);
  EXPECT_EQ(build(R"({"kind": "so_special", "n": 4, "deformation": [[0.1, 0], [0, 0.2]]})").provenance,
            Provenance::IsotropicVector);
  EXPECT_EQ(build(R"({"kind": "u", "n": 2, "power": 3})").members.size(), 4u);
  EXPECT_EQ(field_of([&] { build(R"({"kind": "so_v", "n": 3, "V": [[1, 0, 0]]})"); }), "family");
  EXPECT_EQ(field_of([&] { build(R"({"kind": "so_special", "n": 4})"); }), "family.p");
  EXPECT_EQ(field_of([&] { build(R"({"kind": "so_special", "n": 3, "deformation": [0, 0]})"); }),
            "family.deformation");
  EXPECT_EQ(field_of([&] { family_from_json(json::parse(R"({"kind": "zz", "n": 2})")); }), "family.kind");
}

TEST(Config, CustomFamily) {
  const json j = json::parse(R"({
    "kind": "custom",
    "group": {"family": "u", "n": 2},
    "members": [{"entry": [0, 0]}, {"entry": [0, 1]}],
    "lambda": [-2, 0], "mu": [-1, 0]})");
  const Eigenfamily fam = build_family(family_from_json(j));
  EXPECT_TRUE(fam.dual_continuable);
  const auto r = verify_eigenfamily(fam, compact_basis(fam.group), sample_group(fam.group, 20, 1));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(family_to_json(family_from_json(j)), family_to_json(family_from_json(family_to_json(family_from_json(j)))));
}

TEST(Expr, JsonRoundTripPreservesValues) {
  using E = FunctionExpr;
  ComplexMatrix a(2);
  a(1, 0) = Complex(0.5, 0.5);
  const E f = E::sum({E::product({E::entry(0, 0), E::conj_entry(1, 1)}), E::power(E::linear_trace(a), 2),
                      E::quotient(E::constant(Complex(1.0, 2.0)), E::entry(0, 1)),
                      E::hom_poly({{{1, 1}, 3.0}}, {E::entry(0, 0), E::entry(1, 0)}, 2)});
  const json j = expr_to_json(f);
  const E g = expr_from_json(j);
  EXPECT_EQ(expr_to_json(g), j);
  const ComplexMatrix x{{Complex(0.3, 0.1), 0.7}, {Complex(-0.2, 0.4), 0.9}};
  EXPECT_EQ(eval_point(f, x), eval_point(g, x));
}

TEST(Expr, JsonErrors) {
  EXPECT_EQ(field_of([] { expr_from_json(json::parse(R"({"nope": 1})")); }), "expr");
  EXPECT_EQ(field_of([] { expr_from_json(json::parse(R"({"entry": [0]})")); }), "expr.entry");
  EXPECT_EQ(field_of([] { expr_from_json(json::parse(R"({"sum": [{"entry": [0, -1]}]})")); }), "expr.sum[0].entry");
  EXPECT_EQ(field_of([] {
              expr_from_json(json::parse(
                  R"({"hom_poly": {"degree": 2, "args": [{"entry": [0, 0]}], "coeffs": [{"exponents": [1], "coeff": 1}]}})"));
            }),
            "expr.hom_poly");
}

TEST(Config, LoadFromFile) {
  const std::string path = ::testing::TempDir() + "lgh_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"samples": 5, "group": {"family": "so", "n": 3}})";
  }
  const RunConfig c = load_config(path);
  EXPECT_EQ(c.samples, 5u);
  EXPECT_EQ(*c.group, GroupId::so(3));
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_EQ(field_of([&] { load_config(path); }), "config");
  std::remove(path.c_str());
  EXPECT_EQ(field_of([&] { load_config(path); }), "config");
}
