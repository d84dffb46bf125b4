#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgh/matrix.hpp"
#include "lgh/sampling.hpp"

namespace lgh {

struct Residual {
  std::string name;
  double value{0.0};
  double tol{0.0};

  bool passed() const noexcept { return value < tol; }  // NaN fails
};

// Outcome of one verification. `residuals` gate the pass flag; `diagnostics`
// are recorded for the reader only. Informational checks leave `pass` empty.
struct VerificationReport {
  std::string check;
  std::string group;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Residual> residuals;
  std::vector<Residual> diagnostics;
  std::size_t samples_used{0};
  std::size_t samples_discarded{0};
  double tol{0.0};
  std::optional<bool> pass;
  double wall_time_s{0.0};

  const Residual* find(const std::string& name) const {
    for (const auto& r : residuals)
      if (r.name == name) return &r;
    for (const auto& r : diagnostics)
      if (r.name == name) return &r;
    return nullptr;
  }

  double residual(const std::string& name) const {
    const Residual* r = find(name);
    return r ? r->value : std::nan("");
  }

  void add(std::string name, double value) { residuals.push_back({std::move(name), value, tol}); }
  void add(std::string name, double value, double own_tol) { residuals.push_back({std::move(name), value, own_tol}); }
  void add_diagnostic(std::string name, double value) { diagnostics.push_back({std::move(name), value, 0.0}); }

  void decide() {
    bool ok = true;
    for (const auto& r : residuals) ok = ok && r.passed();
    pass = ok;
  }

  bool passed() const noexcept { return pass.value_or(false); }
};

// NaN-propagating running maximum.
inline double max_nan(double acc, double v) {
  if (std::isnan(acc) || std::isnan(v)) return std::nan("");
  return v > acc ? v : acc;
}

// Evaluates `fn(x)` -> vector of per-slot residuals at every sample in parallel and
// reduces each slot by maximum in sample order.
template <typename Fn>
std::vector<double> max_over_samples(const std::vector<ComplexMatrix>& samples, std::size_t slots, Fn&& fn) {
  const auto per_sample = parallel_map(samples.size(), [&](std::size_t i) { return fn(samples[i]); });
  std::vector<double> acc(slots, 0.0);
  for (const auto& r : per_sample)
    for (std::size_t s = 0; s < slots && s < r.size(); ++s) acc[s] = max_nan(acc[s], r[s]);
  return acc;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json to_json(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }

inline nlohmann::json residuals_json(const std::vector<Residual>& rs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) {
    nlohmann::json e = {{"name", r.name}, {"value", std::isnan(r.value) ? nlohmann::json("nan") : nlohmann::json(r.value)}};
    if (r.tol > 0) e["tol"] = r.tol;
    j.push_back(std::move(e));
  }
  return j;
}

inline nlohmann::json to_json(const VerificationReport& r, bool include_wall_time = true) {
  nlohmann::json j = {{"check", r.check},
                      {"group", r.group},
                      {"parameters", r.parameters},
                      {"residuals", residuals_json(r.residuals)},
                      {"diagnostics", residuals_json(r.diagnostics)},
                      {"samples_used", r.samples_used},
                      {"samples_discarded", r.samples_discarded},
                      {"tol", r.tol}};
  j["pass"] = r.pass ? nlohmann::json(*r.pass) : nlohmann::json(nullptr);
  if (include_wall_time) j["wall_time_s"] = r.wall_time_s;
  return j;
}

}  // namespace lgh
