#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lgh/algebra.hpp"
#include "lgh/expr.hpp"
#include "lgh/jet.hpp"

namespace lgh {

// Curves x exp(sZ) through one point for every vector of a basis.
class Frame {
 public:
  Frame(const ComplexMatrix& x, const SignedBasis& basis) : base_(x) {
    curves_.reserve(basis.size());
    for (const auto& v : basis.vectors) curves_.emplace_back(x, v);
  }

  const ComplexMatrix& base() const noexcept { return base_; }
  std::span<const CurvePoint> curves() const noexcept { return curves_; }
  std::size_t size() const noexcept { return curves_.size(); }

 private:
  ComplexMatrix base_;
  std::vector<CurvePoint> curves_;
};

// Jets of one function along every curve of a frame.
inline std::vector<Jet2> frame_jets(const FunctionExpr& f, const Frame& frame, const EvalOptions& opts = {}) {
  std::vector<Jet2> out;
  out.reserve(frame.size());
  for (const auto& c : frame.curves()) out.push_back(eval_jet(f, c, opts));
  return out;
}

// tau = sum_Z sign(Z) Z^2(f).
inline Complex tau_from_jets(std::span<const Jet2> jets, const Frame& frame) {
  Complex s{};
  for (std::size_t k = 0; k < jets.size(); ++k) s += static_cast<double>(frame.curves()[k].direction().sign) * jets[k].f2;
  return s;
}

// kappa = sum_Z sign(Z) Z(f) Z(g), complex bilinear.
inline Complex kappa_from_jets(std::span<const Jet2> f, std::span<const Jet2> g, const Frame& frame) {
  Complex s{};
  for (std::size_t k = 0; k < f.size(); ++k)
    s += static_cast<double>(frame.curves()[k].direction().sign) * f[k].f1 * g[k].f1;
  return s;
}

inline Complex tau(const FunctionExpr& f, const ComplexMatrix& x, const SignedBasis& basis,
                   const EvalOptions& opts = {}) {
  const Frame frame(x, basis);
  return tau_from_jets(frame_jets(f, frame, opts), frame);
}

inline Complex kappa(const FunctionExpr& f, const FunctionExpr& g, const ComplexMatrix& x, const SignedBasis& basis,
                     const EvalOptions& opts = {}) {
  const Frame frame(x, basis);
  return kappa_from_jets(frame_jets(f, frame, opts), frame_jets(g, frame, opts), frame);
}

// Values, tau and the full kappa matrix of a list of functions at one point.
struct OperatorTable {
  std::vector<Complex> values;
  std::vector<Complex> tau;
  std::vector<std::vector<Complex>> kappa;
};

inline OperatorTable operator_table(std::span<const FunctionExpr> fs, const Frame& frame, const EvalOptions& opts = {}) {
  std::vector<std::vector<Jet2>> jets;
  jets.reserve(fs.size());
  for (const auto& f : fs) jets.push_back(frame_jets(f, frame, opts));
  OperatorTable t;
  const std::size_t m = fs.size();
  t.kappa.assign(m, std::vector<Complex>(m));
  for (std::size_t a = 0; a < m; ++a) {
    t.values.push_back(jets[a].empty() ? eval_point(fs[a], frame.base(), opts) : jets[a][0].f0);
    t.tau.push_back(tau_from_jets(jets[a], frame));
    for (std::size_t b = a; b < m; ++b) {
      t.kappa[a][b] = kappa_from_jets(jets[a], jets[b], frame);
      t.kappa[b][a] = t.kappa[a][b];
    }
  }
  return t;
}

}  // namespace lgh
