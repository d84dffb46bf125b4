#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "lgh/errors.hpp"

namespace lgh {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Dense square complex matrix, row-major. Indices are 0-based.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw ArgumentError("ComplexMatrix: rows must form a square array");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }

  // Bounds-checked access.
  const Complex& at(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw ArgumentError("ComplexMatrix::at: index out of range");
    return (*this)(i, j);
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) noexcept {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s); }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }
  friend ComplexMatrix operator/(ComplexMatrix a, Complex s) { return a *= (1.0 / s); }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  ComplexMatrix transpose() const {
    ComplexMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  ComplexMatrix conj() const {
    ComplexMatrix c(*this);
    for (auto& e : c.entries_) e = std::conj(e);
    return c;
  }

  ComplexMatrix adjoint() const { return conj().transpose(); }

  Complex trace() const noexcept {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
  }

  double frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
  }

  // Maximum absolute column sum.
  double norm1() const noexcept {
    double m = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) s += std::abs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  bool all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex& e) { return std::isfinite(e.real()) && std::isfinite(e.imag()); });
  }

 private:
  void check_same(const ComplexMatrix& o) const {
    if (o.dim_ != dim_) throw ArgumentError("ComplexMatrix: dimension mismatch");
  }

  std::size_t dim_{0};
  std::vector<Complex> entries_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

// Re trace(ZW): the split (semi-Riemannian) form on gl(n,C).
inline double split_form(const ComplexMatrix& z, const ComplexMatrix& w) {
  if (z.dim() != w.dim()) throw ArgumentError("split_form: dimension mismatch");
  const std::size_t n = z.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) s += (z(i, k) * w(k, i)).real();
  return s;
}

// Re trace(ZW*): the Euclidean form on gl(n,C).
inline double euclidean_form(const ComplexMatrix& z, const ComplexMatrix& w) {
  if (z.dim() != w.dim()) throw ArgumentError("euclidean_form: dimension mismatch");
  double s = 0.0;
  const auto ze = z.entries();
  const auto we = w.entries();
  for (std::size_t k = 0; k < ze.size(); ++k) s += (ze[k] * std::conj(we[k])).real();
  return s;
}

// Matrix exponential by scaling and squaring with a degree-13 Taylor kernel.
// The argument is scaled so that its 1-norm is at most 1/2, where the truncation
// error of the kernel is below 1e-16.
inline ComplexMatrix expm(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  const double norm = a.norm1();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = a * std::ldexp(1.0, -squarings);

  // Horner evaluation of sum_{k<=13} A^k / k!.
  constexpr int kDegree = 13;
  ComplexMatrix result = ComplexMatrix::identity(n);
  for (int k = kDegree; k >= 1; --k) {
    result = ComplexMatrix::identity(n) + (scaled * result) * (1.0 / k);
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

// Determinant by LU with partial pivoting.
inline Complex det(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix lu(a);
  Complex d = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(pivot, j), lu(col, j));
      d = -d;
    }
    d *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (std::size_t j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return d;
}

// 2n x 2n block matrix [[a, b], [c, d]] from n x n blocks.
inline ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                              const ComplexMatrix& d) {
  const std::size_t n = a.dim();
  if (b.dim() != n || c.dim() != n || d.dim() != n) throw ArgumentError("block2x2: dimension mismatch");
  ComplexMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, n + j) = b(i, j);
      m(n + i, j) = c(i, j);
      m(n + i, n + j) = d(i, j);
    }
  return m;
}

// Extracts the n x n block at (row_block, col_block) of a 2n x 2n matrix.
inline ComplexMatrix block_of(const ComplexMatrix& m, std::size_t row_block, std::size_t col_block) {
  if (m.dim() % 2 != 0) throw ArgumentError("block_of: odd dimension");
  const std::size_t n = m.dim() / 2;
  ComplexMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = m(row_block * n + i, col_block * n + j);
  return b;
}

}  // namespace lgh
