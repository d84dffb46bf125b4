#pragma once

// Independent reference computations for the tests: a plain Taylor exponential and
// central finite differences along x exp(sZ).

#include <complex>
#include <functional>

#include "lgh/matrix.hpp"

namespace oracle {

using lgh::Complex;
using lgh::ComplexMatrix;

// Unscaled Taylor series; adequate for ||a|| below about 1.
inline ComplexMatrix taylor_exp(const ComplexMatrix& a, int terms = 40) {
  ComplexMatrix sum = ComplexMatrix::identity(a.dim());
  ComplexMatrix term = sum;
  for (int k = 1; k < terms; ++k) {
    term = term * a * (1.0 / k);
    sum += term;
  }
  return sum;
}

inline constexpr double kStep = 1e-4;

inline ComplexMatrix curve(const ComplexMatrix& x, const ComplexMatrix& z, double s) { return x * taylor_exp(z * s); }

using Scalar = std::function<Complex(const ComplexMatrix&)>;

inline Complex first_derivative(const Scalar& f, const ComplexMatrix& x, const ComplexMatrix& z, double h = kStep) {
  return (f(curve(x, z, h)) - f(curve(x, z, -h))) / (2.0 * h);
}

inline Complex second_derivative(const Scalar& f, const ComplexMatrix& x, const ComplexMatrix& z, double h = kStep) {
  return (f(curve(x, z, h)) - 2.0 * f(x) + f(curve(x, z, -h))) / (h * h);
}

}  // namespace oracle
