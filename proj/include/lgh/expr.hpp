#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lgh/errors.hpp"
#include "lgh/jet.hpp"
#include "lgh/matrix.hpp"

namespace lgh {

namespace detail {
struct ExprNode;
}

// Complex-valued function of the entries of a matrix, built as an immutable
// expression tree. Copies share structure.
class FunctionExpr {
 public:
  struct Const {
    Complex value;
  };
  // x_ij (0-based).
  struct Entry {
    std::size_t i, j;
  };
  // conj(x_ij). Real analytic but not holomorphic; it cannot be continued.
  struct ConjEntry {
    std::size_t i, j;
  };
  // trace(A x^t) = sum_ij A_ij x_ij.
  struct LinearTrace {
    ComplexMatrix coeffs;
  };
  struct Sum {
    std::vector<FunctionExpr> terms;
  };
  struct Product {
    std::vector<FunctionExpr> factors;
  };
  struct Power;
  struct Quotient;
  struct HomPoly;

  using Exponents = std::vector<unsigned>;
  using CoeffMap = std::map<Exponents, Complex>;

  FunctionExpr();  // the constant 0

  static FunctionExpr constant(Complex c);
  static FunctionExpr entry(std::size_t i, std::size_t j);
  static FunctionExpr conj_entry(std::size_t i, std::size_t j);
  static FunctionExpr linear_trace(ComplexMatrix a);
  static FunctionExpr sum(std::vector<FunctionExpr> terms);
  static FunctionExpr product(std::vector<FunctionExpr> factors);
  static FunctionExpr power(FunctionExpr base, unsigned k);
  static FunctionExpr quotient(FunctionExpr num, FunctionExpr den);
  // Homogeneous polynomial of degree `degree` in `args`. Every exponent vector must
  // have one entry per argument and total degree `degree`.
  static FunctionExpr hom_poly(CoeffMap coeffs, std::vector<FunctionExpr> args, unsigned degree);

  const detail::ExprNode& node() const noexcept { return *node_; }

  template <typename T>
  const T* as() const noexcept;

  friend FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b) { return sum({a, b}); }
  friend FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b) {
    return sum({a, product({constant(-1.0), b})});
  }
  friend FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b) { return product({a, b}); }
  friend FunctionExpr operator*(Complex c, const FunctionExpr& a) { return product({constant(c), a}); }
  friend FunctionExpr operator/(const FunctionExpr& a, const FunctionExpr& b) { return quotient(a, b); }

 private:
  explicit FunctionExpr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::ExprNode> node_;
};

struct FunctionExpr::Power {
  FunctionExpr base;
  unsigned k;
};

struct FunctionExpr::Quotient {
  FunctionExpr num;
  FunctionExpr den;
};

struct FunctionExpr::HomPoly {
  CoeffMap coeffs;
  std::vector<FunctionExpr> args;
  unsigned degree;
};

namespace detail {
struct ExprNode {
  std::variant<FunctionExpr::Const, FunctionExpr::Entry, FunctionExpr::ConjEntry, FunctionExpr::LinearTrace,
               FunctionExpr::Sum, FunctionExpr::Product, FunctionExpr::Power, FunctionExpr::Quotient,
               FunctionExpr::HomPoly>
      value;
};
}  // namespace detail

template <typename T>
const T* FunctionExpr::as() const noexcept {
  return std::get_if<T>(&node_->value);
}

inline FunctionExpr::FunctionExpr() : node_(std::make_shared<detail::ExprNode>(detail::ExprNode{Const{0.0}})) {}

inline FunctionExpr FunctionExpr::constant(Complex c) {
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{Const{c}}));
}
inline FunctionExpr FunctionExpr::entry(std::size_t i, std::size_t j) {
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{Entry{i, j}}));
}
inline FunctionExpr FunctionExpr::conj_entry(std::size_t i, std::size_t j) {
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{ConjEntry{i, j}}));
}
inline FunctionExpr FunctionExpr::linear_trace(ComplexMatrix a) {
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{LinearTrace{std::move(a)}}));
}
inline FunctionExpr FunctionExpr::sum(std::vector<FunctionExpr> terms) {
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{Sum{std::move(terms)}}));
}
inline FunctionExpr FunctionExpr::product(std::vector<FunctionExpr> factors) {
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{Product{std::move(factors)}}));
}
inline FunctionExpr FunctionExpr::power(FunctionExpr base, unsigned k) {
  if (k == 0) throw ArgumentError("FunctionExpr::power: exponent must be >= 1");
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{Power{std::move(base), k}}));
}
inline FunctionExpr FunctionExpr::quotient(FunctionExpr num, FunctionExpr den) {
  return FunctionExpr(std::make_shared<detail::ExprNode>(detail::ExprNode{Quotient{std::move(num), std::move(den)}}));
}
inline FunctionExpr FunctionExpr::hom_poly(CoeffMap coeffs, std::vector<FunctionExpr> args, unsigned degree) {
  for (const auto& [exps, c] : coeffs) {
    if (exps.size() != args.size())
      throw ValidationError("hom_poly: exponent vector length " + std::to_string(exps.size()) + " != argument count " +
                            std::to_string(args.size()));
    const unsigned total = std::accumulate(exps.begin(), exps.end(), 0u);
    if (total != degree)
      throw ValidationError("hom_poly: monomial of degree " + std::to_string(total) + " in a degree " +
                            std::to_string(degree) + " polynomial");
  }
  return FunctionExpr(std::make_shared<detail::ExprNode>(
      detail::ExprNode{HomPoly{std::move(coeffs), std::move(args), degree}}));
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

inline constexpr double kDefaultQuotientFloor = 1e-3;

struct EvalOptions {
  // A quotient is evaluable only where |den| > quotient_floor.
  double quotient_floor{kDefaultQuotientFloor};
};

namespace detail {

template <typename V>
V hom_poly_combine(const FunctionExpr::HomPoly& h, const std::vector<V>& args, V one) {
  // powers[a][e] = args[a]^e
  std::vector<std::vector<V>> powers(args.size());
  for (std::size_t a = 0; a < args.size(); ++a) {
    powers[a].reserve(h.degree + 1);
    powers[a].push_back(one);
    for (unsigned e = 1; e <= h.degree; ++e) powers[a].push_back(powers[a].back() * args[a]);
  }
  V acc = one;
  acc = Complex(0.0) * acc;
  for (const auto& [exps, c] : h.coeffs) {
    V term = one;
    for (std::size_t a = 0; a < exps.size(); ++a)
      if (exps[a] != 0) term = term * powers[a][exps[a]];
    acc = acc + c * term;
  }
  return acc;
}

inline std::string child_path(const char* kind, std::size_t index) {
  return std::string(kind) + "[" + std::to_string(index) + "]";
}

// Evaluates children through `eval`, prefixing the location of any DomainError.
template <typename F>
auto with_path(const std::string& step, F&& eval) -> decltype(eval()) {
  try {
    return eval();
  } catch (const DomainError& e) {
    throw DomainError("quotient denominator below domain floor", step + "/" + e.where());
  }
}

inline void check_entry(std::size_t i, std::size_t j, std::size_t dim) {
  if (i >= dim || j >= dim)
    throw ArgumentError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside a " +
                        std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
}

}  // namespace detail

inline Complex eval_point(const FunctionExpr& f, const ComplexMatrix& x, const EvalOptions& opts = {});

inline Jet2 eval_jet(const FunctionExpr& f, const CurvePoint& c, const EvalOptions& opts = {});

inline Complex eval_point(const FunctionExpr& f, const ComplexMatrix& x, const EvalOptions& opts) {
  using E = FunctionExpr;
  return std::visit(
      [&](const auto& n) -> Complex {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, E::Const>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, E::Entry>) {
          detail::check_entry(n.i, n.j, x.dim());
          return x(n.i, n.j);
        } else if constexpr (std::is_same_v<T, E::ConjEntry>) {
          detail::check_entry(n.i, n.j, x.dim());
          return std::conj(x(n.i, n.j));
        } else if constexpr (std::is_same_v<T, E::LinearTrace>) {
          if (n.coeffs.dim() != x.dim()) throw ArgumentError("linear_trace: coefficient matrix dimension mismatch");
          Complex s{};
          const auto a = n.coeffs.entries();
          const auto v = x.entries();
          for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * v[k];
          return s;
        } else if constexpr (std::is_same_v<T, E::Sum>) {
          Complex s{};
          for (std::size_t k = 0; k < n.terms.size(); ++k)
            s += detail::with_path(detail::child_path("sum", k), [&] { return eval_point(n.terms[k], x, opts); });
          return s;
        } else if constexpr (std::is_same_v<T, E::Product>) {
          Complex s = 1.0;
          for (std::size_t k = 0; k < n.factors.size(); ++k)
            s *= detail::with_path(detail::child_path("product", k), [&] { return eval_point(n.factors[k], x, opts); });
          return s;
        } else if constexpr (std::is_same_v<T, E::Power>) {
          const Complex b = detail::with_path("power", [&] { return eval_point(n.base, x, opts); });
          Complex s = 1.0;
          for (unsigned k = 0; k < n.k; ++k) s *= b;
          return s;
        } else if constexpr (std::is_same_v<T, E::Quotient>) {
          const Complex num = detail::with_path("quotient.num", [&] { return eval_point(n.num, x, opts); });
          const Complex den = detail::with_path("quotient.den", [&] { return eval_point(n.den, x, opts); });
          if (!(std::abs(den) > opts.quotient_floor))
            throw DomainError("quotient denominator below domain floor", "quotient");
          return num / den;
        } else {
          std::vector<Complex> args;
          args.reserve(n.args.size());
          for (std::size_t k = 0; k < n.args.size(); ++k)
            args.push_back(detail::with_path(detail::child_path("hom_poly.arg", k),
                                             [&] { return eval_point(n.args[k], x, opts); }));
          return detail::hom_poly_combine<Complex>(n, args, Complex(1.0));
        }
      },
      f.node().value);
}

inline Jet2 eval_jet(const FunctionExpr& f, const CurvePoint& c, const EvalOptions& opts) {
  using E = FunctionExpr;
  return std::visit(
      [&](const auto& n) -> Jet2 {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, E::Const>) {
          return Jet2::constant(n.value);
        } else if constexpr (std::is_same_v<T, E::Entry>) {
          detail::check_entry(n.i, n.j, c.dim());
          return entry_jet(c, n.i, n.j);
        } else if constexpr (std::is_same_v<T, E::ConjEntry>) {
          // Along a real curve, derivatives of conj(x_ij) are conjugated derivatives.
          detail::check_entry(n.i, n.j, c.dim());
          const Jet2 e = entry_jet(c, n.i, n.j);
          return {std::conj(e.f0), std::conj(e.f1), std::conj(e.f2)};
        } else if constexpr (std::is_same_v<T, E::LinearTrace>) {
          if (n.coeffs.dim() != c.dim()) throw ArgumentError("linear_trace: coefficient matrix dimension mismatch");
          Jet2 s;
          const auto a = n.coeffs.entries();
          const auto x0 = c.base().entries();
          const auto x1 = c.first().entries();
          const auto x2 = c.second().entries();
          for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] == Complex{}) continue;
            s.f0 += a[k] * x0[k];
            s.f1 += a[k] * x1[k];
            s.f2 += a[k] * x2[k];
          }
          return s;
        } else if constexpr (std::is_same_v<T, E::Sum>) {
          Jet2 s;
          for (std::size_t k = 0; k < n.terms.size(); ++k)
            s = s + detail::with_path(detail::child_path("sum", k), [&] { return eval_jet(n.terms[k], c, opts); });
          return s;
        } else if constexpr (std::is_same_v<T, E::Product>) {
          Jet2 s = Jet2::constant(1.0);
          for (std::size_t k = 0; k < n.factors.size(); ++k)
            s = s * detail::with_path(detail::child_path("product", k), [&] { return eval_jet(n.factors[k], c, opts); });
          return s;
        } else if constexpr (std::is_same_v<T, E::Power>) {
          return jet_pow(detail::with_path("power", [&] { return eval_jet(n.base, c, opts); }), n.k);
        } else if constexpr (std::is_same_v<T, E::Quotient>) {
          const Jet2 num = detail::with_path("quotient.num", [&] { return eval_jet(n.num, c, opts); });
          const Jet2 den = detail::with_path("quotient.den", [&] { return eval_jet(n.den, c, opts); });
          if (!(std::abs(den.f0) > opts.quotient_floor))
            throw DomainError("quotient denominator below domain floor", "quotient");
          return jet_div(num, den);
        } else {
          std::vector<Jet2> args;
          args.reserve(n.args.size());
          for (std::size_t k = 0; k < n.args.size(); ++k)
            args.push_back(detail::with_path(detail::child_path("hom_poly.arg", k),
                                             [&] { return eval_jet(n.args[k], c, opts); }));
          return detail::hom_poly_combine<Jet2>(n, args, Jet2::constant(1.0));
        }
      },
      f.node().value);
}

// True when the tree contains no conjugated entries.
inline bool is_holomorphic(const FunctionExpr& f) {
  using E = FunctionExpr;
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, E::ConjEntry>) {
          return false;
        } else if constexpr (std::is_same_v<T, E::Sum>) {
          return std::all_of(n.terms.begin(), n.terms.end(), [](const auto& t) { return is_holomorphic(t); });
        } else if constexpr (std::is_same_v<T, E::Product>) {
          return std::all_of(n.factors.begin(), n.factors.end(), [](const auto& t) { return is_holomorphic(t); });
        } else if constexpr (std::is_same_v<T, E::Power>) {
          return is_holomorphic(n.base);
        } else if constexpr (std::is_same_v<T, E::Quotient>) {
          return is_holomorphic(n.num) && is_holomorphic(n.den);
        } else if constexpr (std::is_same_v<T, E::HomPoly>) {
          return std::all_of(n.args.begin(), n.args.end(), [](const auto& t) { return is_holomorphic(t); });
        } else {
          return true;
        }
      },
      f.node().value);
}

// Returns (f(x), f(e^{i theta} x)). For a quotient of two homogeneous polynomials
// of equal degree in the entries the two values agree; a lone homogeneous
// polynomial of degree d picks up the factor e^{i d theta}.
inline std::pair<Complex, Complex> scale_action_check(const FunctionExpr& f, double theta, const ComplexMatrix& x,
                                                      const EvalOptions& opts = {}) {
  const Complex phase = std::polar(1.0, theta);
  return {eval_point(f, x, opts), eval_point(f, x * phase, opts)};
}

}  // namespace lgh
