#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lgh/duality.hpp"
#include "lgh/errors.hpp"
#include "lgh/expr.hpp"
#include "lgh/families.hpp"
#include "lgh/group.hpp"
#include "lgh/morphisms.hpp"

namespace lgh {

using nlohmann::json;

// Malformed configuration; the message names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : Error("config field '" + field + "': " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices. Complex numbers are [re, im]; matrices are row arrays.
// ---------------------------------------------------------------------------

inline Complex complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(field, "expected a complex number [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json vector_to_json(const ComplexVector& v) {
  json j = json::array();
  for (const auto& c : v) j.push_back(to_json(c));
  return j;
}

inline ComplexVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of complex numbers");
  ComplexVector v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(complex_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  return v;
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected a square array of rows");
  ComplexMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw ConfigError(field, "matrix must be square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = complex_from_json(j[i][k], field);
  }
  return m;
}

inline json coeffs_to_json(const CoeffMap& c) {
  json j = json::array();
  for (const auto& [e, v] : c) j.push_back({{"exponents", e}, {"coeff", to_json(v)}});
  return j;
}

inline CoeffMap coeffs_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected a list of {exponents, coeff} terms");
  CoeffMap c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = field + "[" + std::to_string(k) + "]";
    if (!j[k].is_object() || !j[k].contains("exponents") || !j[k].contains("coeff"))
      throw ConfigError(f, "term needs 'exponents' and 'coeff'");
    Exponents e;
    try {
      e = j[k]["exponents"].get<Exponents>();
    } catch (const json::exception&) {
      throw ConfigError(f + ".exponents", "expected non-negative integers");
    }
    c[e] += complex_from_json(j[k]["coeff"], f + ".coeff");
  }
  return c;
}

// ---------------------------------------------------------------------------
// FunctionExpr
// ---------------------------------------------------------------------------

inline json expr_to_json(const FunctionExpr& f) {
  using E = FunctionExpr;
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        const auto list = [](const std::vector<FunctionExpr>& v) {
          json a = json::array();
          for (const auto& e : v) a.push_back(expr_to_json(e));
          return a;
        };
        if constexpr (std::is_same_v<T, E::Const>) {
          return {{"const", to_json(n.value)}};
        } else if constexpr (std::is_same_v<T, E::Entry>) {
          return {{"entry", {n.i, n.j}}};
        } else if constexpr (std::is_same_v<T, E::ConjEntry>) {
          return {{"conj_entry", {n.i, n.j}}};
        } else if constexpr (std::is_same_v<T, E::LinearTrace>) {
          return {{"linear_trace", matrix_to_json(n.coeffs)}};
        } else if constexpr (std::is_same_v<T, E::Sum>) {
          return {{"sum", list(n.terms)}};
        } else if constexpr (std::is_same_v<T, E::Product>) {
          return {{"product", list(n.factors)}};
        } else if constexpr (std::is_same_v<T, E::Power>) {
          return {{"power", {{"base", expr_to_json(n.base)}, {"k", n.k}}}};
        } else if constexpr (std::is_same_v<T, E::Quotient>) {
          return {{"quotient", {{"num", expr_to_json(n.num)}, {"den", expr_to_json(n.den)}}}};
        } else {
          return {{"hom_poly", {{"degree", n.degree}, {"args", list(n.args)}, {"coeffs", coeffs_to_json(n.coeffs)}}}};
        }
      },
      f.node().value);
}

inline FunctionExpr expr_from_json(const json& j, const std::string& field = "expr") {
  if (!j.is_object() || j.size() != 1) throw ConfigError(field, "expression must be an object with exactly one key");
  const auto& [key, v] = *j.items().begin();
  const std::string f = field + "." + key;
  const auto list = [&](const json& a) {
    if (!a.is_array()) throw ConfigError(f, "expected a list of expressions");
    std::vector<FunctionExpr> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(expr_from_json(a[k], f + "[" + std::to_string(k) + "]"));
    return out;
  };
  const auto index_pair = [&](const json& a) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() || !a[1].is_number_unsigned())
      throw ConfigError(f, "expected [i, j] with non-negative integers");
    return std::pair<std::size_t, std::size_t>{a[0].get<std::size_t>(), a[1].get<std::size_t>()};
  };
  try {
    if (key == "const") return FunctionExpr::constant(complex_from_json(v, f));
    if (key == "entry") {
      const auto [i, k] = index_pair(v);
      return FunctionExpr::entry(i, k);
    }
    if (key == "conj_entry") {
      const auto [i, k] = index_pair(v);
      return FunctionExpr::conj_entry(i, k);
    }
    if (key == "linear_trace") return FunctionExpr::linear_trace(matrix_from_json(v, f));
    if (key == "sum") return FunctionExpr::sum(list(v));
    if (key == "product") return FunctionExpr::product(list(v));
    if (key == "power") {
      if (!v.contains("base") || !v.contains("k")) throw ConfigError(f, "needs 'base' and 'k'");
      return FunctionExpr::power(expr_from_json(v["base"], f + ".base"), v["k"].get<unsigned>());
    }
    if (key == "quotient") {
      if (!v.contains("num") || !v.contains("den")) throw ConfigError(f, "needs 'num' and 'den'");
      return FunctionExpr::quotient(expr_from_json(v["num"], f + ".num"), expr_from_json(v["den"], f + ".den"));
    }
    if (key == "hom_poly") {
      if (!v.contains("degree") || !v.contains("args") || !v.contains("coeffs"))
        throw ConfigError(f, "needs 'degree', 'args' and 'coeffs'");
      return FunctionExpr::hom_poly(coeffs_from_json(v["coeffs"], f + ".coeffs"), list(v["args"]),
                                    v["degree"].get<unsigned>());
    }
  } catch (const json::exception& e) {
    throw ConfigError(f, e.what());
  } catch (const ValidationError& e) {
    throw ConfigError(f, e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError(f, e.what());
  }
  throw ConfigError(field, "unknown expression node '" + key + "'");
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

// {"family": "so", "n": 4} or {"family": "so_pq", "p": 2, "q": 2}. For su_star and
// so_star, "n" is the full matrix size (SU*(4) is {"family": "su_star", "n": 4}).
inline json group_to_json(const GroupId& g) {
  json j = {{"family", family_name(g.family)}};
  if (g.indefinite()) {
    j["p"] = g.p;
    j["q"] = g.q;
  } else if (g.family == GroupFamily::SUstar || g.family == GroupFamily::SOstar) {
    j["n"] = 2 * g.n;
  } else {
    j["n"] = g.n;
  }
  return j;
}

inline GroupId group_from_json(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ConfigError(field + ".family", "expected a group family name");
  GroupFamily fam;
  try {
    fam = parse_family(j["family"].get<std::string>());
  } catch (const ArgumentError& e) {
    throw ConfigError(field + ".family", e.what());
  }
  const auto size = [&](const char* key) -> std::size_t {
    if (!j.contains(key)) throw ConfigError(field + "." + key, "missing");
    if (!j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0)
      throw ConfigError(field + "." + key, "expected a positive integer");
    return j[key].get<std::size_t>();
  };
  try {
    if (fam == GroupFamily::SOpq || fam == GroupFamily::SUpq || fam == GroupFamily::Sppq)
      return make_group(fam, 0, size("p"), size("q"));
    return make_group(fam, size("n"));
  } catch (const ArgumentError& e) {
    throw ConfigError(field, e.what());
  }
}

// ---------------------------------------------------------------------------
// Family and morphism specifications
// ---------------------------------------------------------------------------

// kind: "so_v" (p, optional V; default V = maximal isotropic), "so_special" (p, or
// "deformation": [z, w] for n = 4), "u", "su", "sp" (p; default p = e_1), "custom"
// (group, members, lambda, mu). "power" > 1 replaces the family by its k-fold products.
struct FamilySpec {
  std::string kind{"u"};
  std::size_t n{2};
  std::optional<ComplexVector> p;
  std::vector<ComplexVector> V;
  std::optional<std::pair<Complex, Complex>> deformation;
  unsigned power{1};
  // custom
  std::optional<GroupId> group;
  std::vector<FunctionExpr> members;
  Complex lambda{};
  Complex mu{};
};

struct MorphismSpec {
  CoeffMap P;
  CoeffMap Q;
};

struct RunConfig {
  std::optional<GroupId> group;
  std::optional<FamilySpec> family;
  std::optional<MorphismSpec> morphism;
  std::optional<GroupId> pair;
  std::size_t samples{100};
  std::uint64_t seed{42};
  double radius{kDefaultRadius};
  double tol{kDefaultTol};
  double floor{kDefaultQuotientFloor};
};

inline constexpr double kMaxRadius = 1.0;

inline void validate(const RunConfig& c) {
  if (c.samples < 1) throw ConfigError("samples", "must be >= 1");
  if (!(c.radius > 0.0) || c.radius > kMaxRadius) throw ConfigError("radius", "must lie in (0, 1]");
  if (!(c.tol > 0.0)) throw ConfigError("tol", "must be positive");
  if (!(c.floor >= 0.0)) throw ConfigError("floor", "must be non-negative");
}

inline json family_to_json(const FamilySpec& f) {
  json j = {{"kind", f.kind}, {"n", f.n}};
  if (f.p) j["p"] = vector_to_json(*f.p);
  if (!f.V.empty()) {
    j["V"] = json::array();
    for (const auto& v : f.V) j["V"].push_back(vector_to_json(v));
  }
  if (f.deformation) j["deformation"] = json::array({to_json(f.deformation->first), to_json(f.deformation->second)});
  if (f.power != 1) j["power"] = f.power;
  if (f.kind == "custom") {
    if (f.group) j["group"] = group_to_json(*f.group);
    j["members"] = json::array();
    for (const auto& m : f.members) j["members"].push_back(expr_to_json(m));
    j["lambda"] = to_json(f.lambda);
    j["mu"] = to_json(f.mu);
  }
  return j;
}

inline FamilySpec family_from_json(const json& j) {
  const std::string field = "family";
  if (!j.is_object()) throw ConfigError(field, "expected an object");
  FamilySpec f;
  if (!j.contains("kind") || !j["kind"].is_string()) throw ConfigError(field + ".kind", "missing family kind");
  f.kind = j["kind"].get<std::string>();
  static const std::vector<std::string> kinds{"so_v", "so_special", "u", "su", "sp", "custom"};
  if (std::find(kinds.begin(), kinds.end(), f.kind) == kinds.end())
    throw ConfigError(field + ".kind", "unknown family kind '" + f.kind + "'");
  if (j.contains("n")) {
    if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
      throw ConfigError(field + ".n", "expected a positive integer");
    f.n = j["n"].get<std::size_t>();
  } else if (f.kind != "custom") {
    throw ConfigError(field + ".n", "missing");
  }
  if (j.contains("p")) f.p = vector_from_json(j["p"], field + ".p");
  if (j.contains("V")) {
    if (!j["V"].is_array()) throw ConfigError(field + ".V", "expected a list of vectors");
    for (std::size_t k = 0; k < j["V"].size(); ++k)
      f.V.push_back(vector_from_json(j["V"][k], field + ".V[" + std::to_string(k) + "]"));
  }
  if (j.contains("deformation")) {
    const auto& d = j["deformation"];
    if (!d.is_array() || d.size() != 2) throw ConfigError(field + ".deformation", "expected [z, w]");
    f.deformation = std::pair{complex_from_json(d[0], field + ".deformation[0]"),
                              complex_from_json(d[1], field + ".deformation[1]")};
  }
  if (j.contains("power")) {
    if (!j["power"].is_number_unsigned() || j["power"].get<unsigned>() == 0)
      throw ConfigError(field + ".power", "expected a positive integer");
    f.power = j["power"].get<unsigned>();
  }
  if (f.kind == "custom") {
    if (!j.contains("group")) throw ConfigError(field + ".group", "custom families need a group");
    f.group = group_from_json(j["group"], field + ".group");
    if (!j.contains("members") || !j["members"].is_array() || j["members"].empty())
      throw ConfigError(field + ".members", "expected a non-empty list of expressions");
    for (std::size_t k = 0; k < j["members"].size(); ++k)
      f.members.push_back(expr_from_json(j["members"][k], field + ".members[" + std::to_string(k) + "]"));
    f.lambda = j.contains("lambda") ? complex_from_json(j["lambda"], field + ".lambda") : Complex{};
    f.mu = j.contains("mu") ? complex_from_json(j["mu"], field + ".mu") : Complex{};
  }
  return f;
}

// Builds the family a specification describes. Validation failures surface as ConfigError.
inline Eigenfamily build_family(const FamilySpec& f) {
  const ComplexVector p = f.p.value_or(unit_vector(0, f.n));
  try {
    Eigenfamily fam;
    if (f.kind == "so_v") {
      fam = so_family_V(f.n, p, f.V.empty() ? maximal_isotropic_basis(f.n) : f.V);
    } else if (f.kind == "so_special") {
      if (f.deformation) {
        if (f.n != 4) throw ConfigError("family.deformation", "the (z, w) deformation exists for n = 4 only");
        fam = so_family_special(4, so4_deformation(f.deformation->first, f.deformation->second));
      } else {
        if (!f.p) throw ConfigError("family.p", "so_special needs an isotropic p or a deformation");
        fam = so_family_special(f.n, p);
      }
    } else if (f.kind == "u") {
      fam = u_family(f.n, p);
    } else if (f.kind == "su") {
      fam = su_family(f.n, p);
    } else if (f.kind == "sp") {
      fam = sp_family(f.n, p);
    } else {
      fam = Eigenfamily{*f.group, f.members, f.lambda, f.mu, Provenance::Custom, true};
      for (const auto& m : f.members) fam.dual_continuable = fam.dual_continuable && is_holomorphic(m);
    }
    if (f.power > 1) fam = power_family(fam, f.power).as_eigenfamily();
    return fam;
  } catch (const ValidationError& e) {
    throw ConfigError("family", e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError("family", e.what());
  }
}

inline json to_json(const RunConfig& c) {
  json j = {{"samples", c.samples}, {"seed", c.seed}, {"radius", c.radius}, {"tol", c.tol}, {"floor", c.floor}};
  if (c.group) j["group"] = group_to_json(*c.group);
  if (c.family) j["family"] = family_to_json(*c.family);
  if (c.morphism) j["morphism"] = {{"P", coeffs_to_json(c.morphism->P)}, {"Q", coeffs_to_json(c.morphism->Q)}};
  if (c.pair) j["pair"] = group_to_json(*c.pair);
  return j;
}

inline RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
  RunConfig c;
  const auto number = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw ConfigError(key, "expected a number");
    using T = std::decay_t<decltype(out)>;
    if constexpr (std::is_integral_v<T>) {
      if (!j[key].is_number_unsigned()) throw ConfigError(key, "expected a non-negative integer");
    }
    out = j[key].get<std::decay_t<decltype(out)>>();
  };
  number("samples", c.samples);
  number("seed", c.seed);
  number("radius", c.radius);
  number("tol", c.tol);
  number("floor", c.floor);
  if (j.contains("group")) c.group = group_from_json(j["group"], "group");
  if (j.contains("family")) c.family = family_from_json(j["family"]);
  if (j.contains("morphism")) {
    const auto& m = j["morphism"];
    if (!m.is_object() || !m.contains("P") || !m.contains("Q"))
      throw ConfigError("morphism", "needs coefficient lists 'P' and 'Q'");
    c.morphism = MorphismSpec{coeffs_from_json(m["P"], "morphism.P"), coeffs_from_json(m["Q"], "morphism.Q")};
  }
  if (j.contains("pair")) c.pair = group_from_json(j["pair"], "pair");
  validate(c);
  return c;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

}  // namespace lgh
