#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "lgh/algebra.hpp"
#include "lgh/matrix.hpp"

namespace lgh {

// SplitMix64 (Steele, Lea, Flood 2014); the stream is specified in docs/rng.md.
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
// Doubles are formed as (next() >> 11) * 2^-53.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1).
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  // Uniform on the closed unit disc, by rejection.
  Complex unit_disc() noexcept {
    for (;;) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      if (re * re + im * im <= 1.0) return {re, im};
    }
  }

 private:
  std::uint64_t state_;
};

// Random element sum_k c_k Z_k with c_k uniform in [-radius, radius].
inline ComplexMatrix random_algebra_element(const SignedBasis& basis, double radius, SplitMix64& rng) {
  ComplexMatrix a(basis.matrix_dim());
  for (const auto& v : basis.vectors) a += v.matrix * rng.uniform(-radius, radius);
  return a;
}

// exp(A1) exp(A2) for two independent random algebra elements.
inline ComplexMatrix random_group_element(const SignedBasis& basis, double radius, SplitMix64& rng) {
  const ComplexMatrix a1 = random_algebra_element(basis, radius, rng);
  const ComplexMatrix a2 = random_algebra_element(basis, radius, rng);
  return expm(a1) * expm(a2);
}

inline std::vector<ComplexMatrix> sample_points(const SignedBasis& basis, std::size_t count, double radius,
                                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<ComplexMatrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_group_element(basis, radius, rng));
  return out;
}

// Default sampling radius for compact groups.
inline constexpr double kDefaultRadius = 0.5;

inline std::vector<ComplexMatrix> sample_group(const GroupId& group, std::size_t count, std::uint64_t seed,
                                               double radius = kDefaultRadius) {
  return sample_points(compact_basis(group), count, radius, seed);
}

// Deviation of x from the defining equations of a compact group.
inline double group_defect(const GroupId& group, const ComplexMatrix& x) {
  const std::size_t d = x.dim();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  switch (group.family) {
    case GroupFamily::SO: {
      double imag = 0.0;
      for (const auto& e : x.entries()) imag = std::max(imag, std::abs(e.imag()));
      return std::max({max_abs_diff(x * x.transpose(), id), imag, std::abs(det(x) - 1.0)});
    }
    case GroupFamily::U:
      return max_abs_diff(x * x.adjoint(), id);
    case GroupFamily::SU:
      return std::max(max_abs_diff(x * x.adjoint(), id), std::abs(det(x) - 1.0));
    case GroupFamily::Sp: {
      const ComplexMatrix j = symplectic_unit(group.n);
      return std::max(max_abs_diff(x * x.adjoint(), id), max_abs_diff(x * j * x.transpose(), j));
    }
    default:
      throw ArgumentError("group_defect: not a compact family: " + to_string(group));
  }
}

// Worker count: LGH_THREADS when set to a positive integer, otherwise the hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("LGH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Applies fn(i) for i in [0, count) on a pool of threads and returns the results in
// index order. Exceptions from workers are rethrown (the lowest index wins).
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> results(count);
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        try {
          results[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace lgh
