#pragma once

#include <cstddef>
#include <string>

#include "lgh/algebra.hpp"
#include "lgh/errors.hpp"
#include "lgh/matrix.hpp"

namespace lgh {

// Value, first and second derivative at s = 0 of s -> phi(x exp(sZ)).
struct Jet2 {
  Complex f0{};
  Complex f1{};
  Complex f2{};

  static Jet2 constant(Complex c) { return {c, 0.0, 0.0}; }

  friend bool operator==(const Jet2&, const Jet2&) = default;
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f0 + b.f0, a.f1 + b.f1, a.f2 + b.f2}; }
inline Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f0 - b.f0, a.f1 - b.f1, a.f2 - b.f2}; }
inline Jet2 operator*(Complex s, const Jet2& a) { return {s * a.f0, s * a.f1, s * a.f2}; }

// Leibniz: (fg)'' = f''g + 2f'g' + fg''.
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f0 * b.f0, a.f1 * b.f0 + a.f0 * b.f1, a.f2 * b.f0 + 2.0 * a.f1 * b.f1 + a.f0 * b.f2};
}

inline Jet2 jet_add(const Jet2& a, const Jet2& b) { return a + b; }
inline Jet2 jet_scale(Complex s, const Jet2& a) { return s * a; }
inline Jet2 jet_mul(const Jet2& a, const Jet2& b) { return a * b; }

// Quotient rule:
//   (f/g)'  = (f'g - fg') / g^2
//   (f/g)'' = (g^2 f'' - 2g f'g' + 2f g'^2 - f g g'') / g^3
inline Jet2 jet_div(const Jet2& num, const Jet2& den) {
  const Complex g = den.f0;
  if (g == Complex{}) throw DomainError("jet_div: denominator vanishes", "jet_div");
  const Complex g2 = g * g;
  return {num.f0 / g, (num.f1 * g - num.f0 * den.f1) / g2,
          (g2 * num.f2 - 2.0 * g * num.f1 * den.f1 + 2.0 * num.f0 * den.f1 * den.f1 - num.f0 * g * den.f2) /
              (g2 * g)};
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return jet_div(a, b); }

// k-th power, k >= 0.
inline Jet2 jet_pow(const Jet2& a, unsigned k) {
  if (k == 0) return Jet2::constant(1.0);
  if (k == 1) return a;
  const double kd = k;
  Complex pm2 = 1.0;  // f0^(k-2)
  for (unsigned i = 0; i + 2 < k; ++i) pm2 *= a.f0;
  const Complex pm1 = pm2 * a.f0;
  return {pm1 * a.f0, kd * pm1 * a.f1, kd * (kd - 1.0) * pm2 * a.f1 * a.f1 + kd * pm1 * a.f2};
}

// A group element x together with a left-invariant direction (Z, sign). The
// products xZ and xZ^2 are formed once on construction.
class CurvePoint {
 public:
  CurvePoint(ComplexMatrix base, SignedBasisVector direction)
      : base_(std::move(base)), direction_(std::move(direction)) {
    if (base_.dim() != direction_.matrix.dim()) throw ArgumentError("CurvePoint: base and direction differ in dimension");
    first_ = base_ * direction_.matrix;
    second_ = first_ * direction_.matrix;
  }

  const ComplexMatrix& base() const noexcept { return base_; }
  const SignedBasisVector& direction() const noexcept { return direction_; }
  const ComplexMatrix& first() const noexcept { return first_; }    // xZ
  const ComplexMatrix& second() const noexcept { return second_; }  // xZ^2
  std::size_t dim() const noexcept { return base_.dim(); }

 private:
  ComplexMatrix base_;
  SignedBasisVector direction_;
  ComplexMatrix first_;
  ComplexMatrix second_;
};

// Jet of the coordinate function x_ij: (x_ij, (xZ)_ij, (xZ^2)_ij).
inline Jet2 entry_jet(const CurvePoint& c, std::size_t i, std::size_t j) {
  if (i >= c.dim() || j >= c.dim()) throw ArgumentError("entry_jet: index out of range");
  return {c.base()(i, j), c.first()(i, j), c.second()(i, j)};
}

}  // namespace lgh
