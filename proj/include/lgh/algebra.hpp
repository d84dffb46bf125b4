#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lgh/errors.hpp"
#include "lgh/group.hpp"
#include "lgh/matrix.hpp"

namespace lgh {

// ---------------------------------------------------------------------------
// Generator matrices. All indices are 0-based.
// ---------------------------------------------------------------------------

enum class GeneratorKind { E, D, X, Y };

namespace detail {
inline void check_index(std::size_t i, std::size_t n, const char* who) {
  if (i >= n) throw ArgumentError(std::string(who) + ": index out of range");
}
}  // namespace detail

// E_ij with (E_ij)_kl = delta_ik delta_jl.
inline ComplexMatrix unit_matrix(std::size_t i, std::size_t j, std::size_t n) {
  detail::check_index(i, n, "unit_matrix");
  detail::check_index(j, n, "unit_matrix");
  ComplexMatrix m(n);
  m(i, j) = 1.0;
  return m;
}

// D_t = E_tt.
inline ComplexMatrix diagonal_unit(std::size_t t, std::size_t n) { return unit_matrix(t, t, n); }

// X_rs = (E_rs + E_sr)/sqrt(2), r < s.
inline ComplexMatrix symmetric_unit(std::size_t r, std::size_t s, std::size_t n) {
  if (r >= s) throw ArgumentError("symmetric_unit: need r < s");
  return (unit_matrix(r, s, n) + unit_matrix(s, r, n)) * (1.0 / std::sqrt(2.0));
}

// Y_rs = (E_rs - E_sr)/sqrt(2), r < s.
inline ComplexMatrix skew_unit(std::size_t r, std::size_t s, std::size_t n) {
  if (r >= s) throw ArgumentError("skew_unit: need r < s");
  return (unit_matrix(r, s, n) - unit_matrix(s, r, n)) * (1.0 / std::sqrt(2.0));
}

// Dispatching form; for D only `i` is used.
inline ComplexMatrix generator(GeneratorKind kind, std::size_t i, std::size_t j, std::size_t n) {
  switch (kind) {
    case GeneratorKind::E: return unit_matrix(i, j, n);
    case GeneratorKind::D: return diagonal_unit(i, n);
    case GeneratorKind::X: return symmetric_unit(i, j, n);
    case GeneratorKind::Y: return skew_unit(i, j, n);
  }
  throw ArgumentError("generator: bad kind");
}

// I_pq = diag(-I_p, I_q).
inline ComplexMatrix indefinite_unit(std::size_t p, std::size_t q) {
  ComplexMatrix m = ComplexMatrix::identity(p + q);
  for (std::size_t i = 0; i < p; ++i) m(i, i) = -1.0;
  return m;
}

// J_n = [[0, I_n], [-I_n, 0]].
inline ComplexMatrix symplectic_unit(std::size_t n) {
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix zero(n);
  return block2x2(zero, id, -id, zero);
}

// q = [[z, w], [-conj(w), conj(z)]], the complex form of z + jw.
inline ComplexMatrix quaternion_embed(const ComplexMatrix& z, const ComplexMatrix& w) {
  if (z.dim() != w.dim()) throw ArgumentError("quaternion_embed: z and w differ in dimension");
  return block2x2(z, w, -w.conj(), z.conj());
}

// ---------------------------------------------------------------------------
// Signed orthonormal bases.
// ---------------------------------------------------------------------------

struct SignedBasisVector {
  ComplexMatrix matrix;
  int sign{1};  // +1 or -1
};

struct SignedBasis {
  GroupId group;
  std::vector<SignedBasisVector> vectors;
  // True when orthonormality is with respect to Re trace(ZW*); false for Re trace(ZW).
  bool riemannian{true};

  std::size_t size() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }
  std::size_t matrix_dim() const noexcept { return vectors.empty() ? group.matrix_dim() : vectors.front().matrix.dim(); }

  // Largest deviation from orthonormality under the form the basis is declared against,
  // including sign agreement for semi-Riemannian bases.
  double orthonormality_defect() const {
    double defect = 0.0;
    for (std::size_t a = 0; a < vectors.size(); ++a) {
      for (std::size_t b = a; b < vectors.size(); ++b) {
        const auto& za = vectors[a].matrix;
        const auto& zb = vectors[b].matrix;
        const double form = riemannian ? euclidean_form(za, zb) : split_form(za, zb);
        const double expected = (a == b) ? (riemannian ? 1.0 : static_cast<double>(vectors[a].sign)) : 0.0;
        defect = std::max(defect, std::abs(form - expected));
      }
      if (riemannian && vectors[a].sign != 1) defect = std::max(defect, 1.0);
    }
    return defect;
  }
};

inline std::size_t algebra_dim(const GroupId& g) {
  const std::size_t n = g.n;
  switch (g.family) {
    case GroupFamily::SO: return n * (n - 1) / 2;
    case GroupFamily::U: return n * n;
    case GroupFamily::SU: return n * n - 1;
    case GroupFamily::Sp: return n * (2 * n + 1);
    case GroupFamily::GLCSplit: return 2 * n * n;
    default: break;
  }
  throw ArgumentError("algebra_dim: not a compact or GL(n,C) family: " + to_string(g));
}

namespace detail {

inline void append_so(std::vector<SignedBasisVector>& out, std::size_t n, int sign = 1) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) out.push_back({skew_unit(r, s, n), sign});
}

inline void append_i_sym(std::vector<SignedBasisVector>& out, std::size_t n, int sign = 1) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) out.push_back({kI * symmetric_unit(r, s, n), sign});
}

inline std::vector<SignedBasisVector> sp_basis(std::size_t n) {
  const double h = 1.0 / std::sqrt(2.0);
  const ComplexMatrix zero(n);
  std::vector<SignedBasisVector> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) {
      const ComplexMatrix y = skew_unit(r, s, n);
      const ComplexMatrix ix = kI * symmetric_unit(r, s, n);
      out.push_back({block2x2(y, zero, zero, y) * h, 1});
      out.push_back({block2x2(ix, zero, zero, -ix) * h, 1});
    }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) {
      const ComplexMatrix x = symmetric_unit(r, s, n);
      const ComplexMatrix ix = kI * x;
      out.push_back({block2x2(zero, ix, ix, zero) * h, 1});
      out.push_back({block2x2(zero, x, -x, zero) * h, 1});
    }
  for (std::size_t t = 0; t < n; ++t) {
    const ComplexMatrix d = diagonal_unit(t, n);
    const ComplexMatrix id = kI * d;
    out.push_back({block2x2(id, zero, zero, -id) * h, 1});
    out.push_back({block2x2(zero, id, id, zero) * h, 1});
    out.push_back({block2x2(zero, d, -d, zero) * h, 1});
  }
  return out;
}

}  // namespace detail

// Orthonormal basis of the Lie algebra of a compact group under Re trace(ZW*).
//   so(n): {Y_rs};  u(n): {Y_rs, iX_rs, iD_t};
//   su(n): {Y_rs, iX_rs} and i(D_1+...+D_k - k D_{k+1})/sqrt(k(k+1)), k = 1..n-1;
//   sp(n): the three block families in 2n x 2n matrices.
inline SignedBasis compact_basis(const GroupId& group) {
  const std::size_t n = group.n;
  SignedBasis basis{group, {}, true};
  auto& v = basis.vectors;
  switch (group.family) {
    case GroupFamily::SO:
      detail::append_so(v, n);
      break;
    case GroupFamily::U:
      detail::append_so(v, n);
      detail::append_i_sym(v, n);
      for (std::size_t t = 0; t < n; ++t) v.push_back({kI * diagonal_unit(t, n), 1});
      break;
    case GroupFamily::SU:
      detail::append_so(v, n);
      detail::append_i_sym(v, n);
      for (std::size_t k = 1; k < n; ++k) {
        ComplexMatrix d(n);
        for (std::size_t t = 0; t < k; ++t) d(t, t) = 1.0;
        d(k, k) = -static_cast<double>(k);
        v.push_back({d * (kI / std::sqrt(static_cast<double>(k * (k + 1)))), 1});
      }
      break;
    case GroupFamily::Sp:
      v = detail::sp_basis(n);
      break;
    default:
      throw ArgumentError("compact_basis: unsupported family " + to_string(group));
  }
  return basis;
}

struct SplitBasis {
  SignedBasis plus;   // Hermitian part, sign +1
  SignedBasis minus;  // skew-Hermitian part, sign -1

  SignedBasis combined() const {
    SignedBasis all{plus.group, plus.vectors, false};
    all.vectors.insert(all.vectors.end(), minus.vectors.begin(), minus.vectors.end());
    return all;
  }
};

// gl(n,C) = W+ (Hermitian) + W- (skew-Hermitian), orthonormal for Re trace(ZW).
inline SplitBasis glc_split_basis(std::size_t n) {
  const GroupId g = GroupId::glc_split(n);
  SplitBasis out{{g, {}, false}, {g, {}, false}};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) out.plus.vectors.push_back({symmetric_unit(r, s, n), 1});
  for (std::size_t t = 0; t < n; ++t) out.plus.vectors.push_back({diagonal_unit(t, n), 1});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) out.plus.vectors.push_back({kI * skew_unit(r, s, n), 1});

  detail::append_so(out.minus.vectors, n, -1);
  detail::append_i_sym(out.minus.vectors, n, -1);
  for (std::size_t t = 0; t < n; ++t) out.minus.vectors.push_back({kI * diagonal_unit(t, n), -1});
  return out;
}

// ---------------------------------------------------------------------------
// The six generator identities.
// ---------------------------------------------------------------------------

struct IdentityResiduals {
  double sum_x_squared{0};     // sum X_rs^2 = (n-1)/2 I
  double sum_y_squared{0};     // sum Y_rs^2 = -(n-1)/2 I
  double sum_d_squared{0};     // sum D_t^2 = I
  double x_sandwich{0};        // sum X_rs E_jl X_rs^t = (E_lj + delta_lj (I - 2E_lj))/2
  double y_sandwich{0};        // sum Y_rs E_jl Y_rs^t = -(E_lj - delta_lj I)/2
  double d_sandwich{0};        // sum D_t E_jl D_t^t = delta_jl E_lj

  double max() const {
    return std::max({sum_x_squared, sum_y_squared, sum_d_squared, x_sandwich, y_sandwich, d_sandwich});
  }
};

inline IdentityResiduals verify_matrix_identities(std::size_t n) {
  if (n < 2) throw ArgumentError("verify_matrix_identities: need n >= 2");
  std::vector<ComplexMatrix> xs, ys, ds;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) {
      xs.push_back(symmetric_unit(r, s, n));
      ys.push_back(skew_unit(r, s, n));
    }
  for (std::size_t t = 0; t < n; ++t) ds.push_back(diagonal_unit(t, n));

  const ComplexMatrix id = ComplexMatrix::identity(n);
  const double half_nm1 = 0.5 * static_cast<double>(n - 1);
  const auto sum_sq = [&](const std::vector<ComplexMatrix>& ms) {
    ComplexMatrix acc(n);
    for (const auto& m : ms) acc += m * m;
    return acc;
  };
  const auto sandwich = [&](const std::vector<ComplexMatrix>& ms, const ComplexMatrix& e) {
    ComplexMatrix acc(n);
    for (const auto& m : ms) acc += m * e * m.transpose();
    return acc;
  };

  IdentityResiduals r;
  r.sum_x_squared = max_abs_diff(sum_sq(xs), id * half_nm1);
  r.sum_y_squared = max_abs_diff(sum_sq(ys), id * (-half_nm1));
  r.sum_d_squared = max_abs_diff(sum_sq(ds), id);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      const ComplexMatrix e_jl = unit_matrix(j, l, n);
      const ComplexMatrix e_lj = unit_matrix(l, j, n);
      const double delta = (j == l) ? 1.0 : 0.0;
      const ComplexMatrix x_expected = (e_lj + (id - e_lj * 2.0) * delta) * 0.5;
      const ComplexMatrix y_expected = (e_lj - id * delta) * (-0.5);
      const ComplexMatrix d_expected = e_lj * delta;
      r.x_sandwich = std::max(r.x_sandwich, max_abs_diff(sandwich(xs, e_jl), x_expected));
      r.y_sandwich = std::max(r.y_sandwich, max_abs_diff(sandwich(ys, e_jl), y_expected));
      r.d_sandwich = std::max(r.d_sandwich, max_abs_diff(sandwich(ds, e_jl), d_expected));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Orthonormalisation.
// ---------------------------------------------------------------------------

inline constexpr double kNullDirectionFloor = 1e-9;

// Orthonormalises `spanning` against the split form Re trace(ZW), pivoting at each
// step on the remaining vector with the largest |B(v,v)|. Each output vector has
// |B(Z,Z)| = 1 and carries the sign of B(Z,Z). Throws DegeneracyError when only
// null directions remain.
inline SignedBasis gram_schmidt_indefinite(std::vector<ComplexMatrix> spanning,
                                           std::optional<GroupId> group = std::nullopt) {
  SignedBasis out{group.value_or(GroupId::glc_split(spanning.empty() ? 1 : spanning.front().dim())), {}, false};
  std::vector<bool> used(spanning.size(), false);
  for (std::size_t step = 0; step < spanning.size(); ++step) {
    std::size_t best = spanning.size();
    double best_norm = -1.0;
    for (std::size_t k = 0; k < spanning.size(); ++k) {
      if (used[k]) continue;
      const double b = std::abs(split_form(spanning[k], spanning[k]));
      if (b > best_norm) {
        best_norm = b;
        best = k;
      }
    }
    if (best_norm < kNullDirectionFloor) {
      // All remaining vectors are null; a pair with a nonzero cross term gives B(u+v,u+v) = 2B(u,v).
      double cross = -1.0;
      std::size_t other = spanning.size();
      for (std::size_t k = 0; k < spanning.size(); ++k)
        for (std::size_t l = k + 1; l < spanning.size(); ++l) {
          if (used[k] || used[l]) continue;
          const double c = std::abs(split_form(spanning[k], spanning[l]));
          if (c > cross) {
            cross = c;
            best = k;
            other = l;
          }
        }
      if (cross >= kNullDirectionFloor) {
        const double s = split_form(spanning[best], spanning[other]) > 0 ? 1.0 : -1.0;
        spanning[best] += spanning[other] * s;
        best_norm = std::abs(split_form(spanning[best], spanning[best]));
      }
    }
    if (best_norm < kNullDirectionFloor)
      throw DegeneracyError("gram_schmidt_indefinite: null direction after orthogonalisation (|B(v,v)| = " +
                            std::to_string(best_norm) + ")");
    used[best] = true;
    ComplexMatrix v = spanning[best];
    // Second projection pass against everything accepted so far.
    for (const auto& u : out.vectors) v -= u.matrix * (u.sign * split_form(v, u.matrix));
    const double b = split_form(v, v);
    if (std::abs(b) < kNullDirectionFloor)
      throw DegeneracyError("gram_schmidt_indefinite: null direction after re-orthogonalisation");
    const int sign = b > 0 ? 1 : -1;
    v *= 1.0 / std::sqrt(std::abs(b));
    for (std::size_t k = 0; k < spanning.size(); ++k)
      if (!used[k]) spanning[k] -= v * (sign * split_form(spanning[k], v));
    out.vectors.push_back({std::move(v), sign});
  }
  return out;
}

// Extracts a real-linearly independent spanning set (Euclidean-orthonormal) from
// `vectors`, dropping those whose residual norm falls below `tol`.
inline std::vector<ComplexMatrix> independent_span(const std::vector<ComplexMatrix>& vectors, double tol = 1e-10) {
  std::vector<ComplexMatrix> out;
  for (const auto& vec : vectors) {
    ComplexMatrix v = vec;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : out) v -= u * euclidean_form(v, u);
    const double norm = std::sqrt(std::max(0.0, euclidean_form(v, v)));
    if (norm > tol) out.push_back(v * (1.0 / norm));
  }
  return out;
}

}  // namespace lgh
