#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lgh/algebra.hpp"
#include "lgh/errors.hpp"
#include "lgh/expr.hpp"
#include "lgh/group.hpp"
#include "lgh/operators.hpp"
#include "lgh/report.hpp"

namespace lgh {

using ComplexVector = std::vector<Complex>;

// Which construction produced a family.
enum class Provenance {
  MaximalIsotropic,  // trace(p^t a x^t), a in a maximal isotropic subspace (SO(n))
  IsotropicVector,   // trace(p^t a x^t), p isotropic; relies on x x^t = I
  Unitary,           // trace(p^t a z^t) on U(n)
  SpecialUnitary,    // the unitary family on SU(n)
  Quaternionic,      // trace(p^t a z^t + p^t b w^t) on Sp(n)
  Power,             // all k-fold products of another family
  Orthogonal,        // lambda = mu = 0
  Custom,
};

inline std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::MaximalIsotropic: return "maximal_isotropic";
    case Provenance::IsotropicVector: return "isotropic_vector";
    case Provenance::Unitary: return "unitary";
    case Provenance::SpecialUnitary: return "special_unitary";
    case Provenance::Quaternionic: return "quaternionic";
    case Provenance::Power: return "power";
    case Provenance::Orthogonal: return "orthogonal";
    case Provenance::Custom: return "custom";
  }
  return "?";
}

// Functions with tau(phi) = lambda phi and kappa(phi, psi) = mu phi psi.
struct Eigenfamily {
  GroupId group;
  std::vector<FunctionExpr> members;
  Complex lambda{};
  Complex mu{};
  Provenance provenance{Provenance::Custom};
  // False when the construction uses x x^t = I, which the dual real forms do not share.
  bool dual_continuable{true};
};

struct EigenConstants {
  Complex lambda;
  Complex mu;
};

// (lambda, mu) for the coordinate-linear families:
//   SO(n): (-(n-1)/2, -1/2)   U(n): (-n, -1)   SU(n): (-(n^2-1)/n, -(n-1)/n)   Sp(n): (-(2n+1)/2, -1/2)
// The SU(n) pair removes the i I / sqrt(n) direction from the u(n) sums.
inline EigenConstants eigen_constants(const GroupId& g) {
  const double n = static_cast<double>(g.n);
  switch (g.family) {
    case GroupFamily::SO: return {-(n - 1.0) / 2.0, -0.5};
    case GroupFamily::U: return {-n, -1.0};
    case GroupFamily::SU: return {-(n * n - 1.0) / n, -(n - 1.0) / n};
    case GroupFamily::Sp: return {-(2.0 * n + 1.0) / 2.0, -0.5};
    default: break;
  }
  throw ArgumentError("eigen_constants: no constants for " + to_string(g));
}

// Complex bilinear (a, b) = sum a_k b_k, no conjugation.
inline Complex bilinear(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw ArgumentError("bilinear: length mismatch");
  Complex s{};
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline bool is_zero(const ComplexVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& c) { return c == Complex{}; });
}

// (p^t a)_ij = p_i a_j.
inline ComplexMatrix outer(const ComplexVector& p, const ComplexVector& a) {
  if (p.size() != a.size()) throw ArgumentError("outer: length mismatch");
  ComplexMatrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = p[i] * a[j];
  return m;
}

inline ComplexVector unit_vector(std::size_t i, std::size_t n) {
  ComplexVector e(n);
  e.at(i) = 1.0;
  return e;
}

inline constexpr double kIsotropyTol = 1e-12;

// span{e_{2k} + i e_{2k+1}} for k < n/2 (0-based).
inline std::vector<ComplexVector> maximal_isotropic_basis(std::size_t n) {
  std::vector<ComplexVector> v;
  for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
    ComplexVector a(n);
    a[2 * k] = 1.0;
    a[2 * k + 1] = kI;
    v.push_back(std::move(a));
  }
  return v;
}

// p(z, w) = (1 + zw, i(1 - zw), i(z + w), z - w), isotropic for every (z, w).
inline ComplexVector so4_deformation(Complex z, Complex w) {
  return {1.0 + z * w, kI * (1.0 - z * w), kI * (z + w), z - w};
}

// Coordinate functions. On Sp(n), z_ij = g_{i,j} and w_ij = g_{i,n+j} of the 2n x 2n embedding.
struct CoordinateRole {
  enum class Tag { FullEntry, SpZ, SpW };
  Tag tag{Tag::FullEntry};
  std::size_t i{0};
  std::size_t j{0};

  FunctionExpr expr(std::size_t n) const {
    if (i >= n || j >= n) throw ArgumentError("CoordinateRole: index out of range");
    return FunctionExpr::entry(i, tag == Tag::SpW ? n + j : j);
  }
};

namespace detail {
inline void require_nonzero(const ComplexVector& p, std::size_t n, const char* who) {
  if (p.size() != n) throw ArgumentError(std::string(who) + ": p must have length " + std::to_string(n));
  if (is_zero(p)) throw ValidationError(std::string(who) + ": p must be non-zero");
}

inline std::vector<FunctionExpr> column_members(const ComplexVector& p) {
  std::vector<FunctionExpr> members;
  for (std::size_t j = 0; j < p.size(); ++j) members.push_back(FunctionExpr::linear_trace(outer(p, unit_vector(j, p.size()))));
  return members;
}

inline std::string format_vec(const ComplexVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(v[k].real()) + (v[k].imag() < 0 ? "" : "+") + std::to_string(v[k].imag()) + "i";
  }
  return s + ")";
}
}  // namespace detail

// {trace(p^t a x^t) : a in V} on SO(n) with V isotropic.
inline Eigenfamily so_family_V(std::size_t n, const ComplexVector& p, const std::vector<ComplexVector>& V) {
  detail::require_nonzero(p, n, "so_family_V");
  if (V.empty()) throw ValidationError("so_family_V: V must be non-empty");
  for (std::size_t a = 0; a < V.size(); ++a) {
    if (V[a].size() != n) throw ArgumentError("so_family_V: vectors of V must have length n");
    for (std::size_t b = a; b < V.size(); ++b) {
      const Complex ab = bilinear(V[a], V[b]);
      if (std::abs(ab) > kIsotropyTol)
        throw ValidationError("so_family_V: V is not isotropic: (a,b) = " + std::to_string(std::abs(ab)) + " for a=" +
                              detail::format_vec(V[a]) + ", b=" + detail::format_vec(V[b]));
    }
  }
  const GroupId g = GroupId::so(n);
  const auto c = eigen_constants(g);
  Eigenfamily fam{g, {}, c.lambda, c.mu, Provenance::MaximalIsotropic, true};
  for (const auto& a : V) fam.members.push_back(FunctionExpr::linear_trace(outer(p, a)));
  return fam;
}

// {trace(p^t a x^t) : a in C^n} on SO(n) with p isotropic, generated by a = e_1..e_n.
inline Eigenfamily so_family_special(std::size_t n, const ComplexVector& p) {
  detail::require_nonzero(p, n, "so_family_special");
  const Complex pp = bilinear(p, p);
  if (std::abs(pp) > kIsotropyTol)
    throw ValidationError("so_family_special: p is not isotropic: (p,p) = " + std::to_string(std::abs(pp)));
  const GroupId g = GroupId::so(n);
  const auto c = eigen_constants(g);
  return {g, detail::column_members(p), c.lambda, c.mu, Provenance::IsotropicVector, false};
}

// {trace(p^t a z^t) : a in C^n} on U(n), generated by a = e_1..e_n.
inline Eigenfamily u_family(std::size_t n, const ComplexVector& p) {
  detail::require_nonzero(p, n, "u_family");
  const GroupId g = GroupId::u(n);
  const auto c = eigen_constants(g);
  return {g, detail::column_members(p), c.lambda, c.mu, Provenance::Unitary, true};
}

// The unitary family restricted to SU(n).
inline Eigenfamily su_family(std::size_t n, const ComplexVector& p) {
  Eigenfamily fam = u_family(n, p);
  fam.group = GroupId::su(n);
  const auto c = eigen_constants(fam.group);
  fam.lambda = c.lambda;
  fam.mu = c.mu;
  fam.provenance = Provenance::SpecialUnitary;
  return fam;
}

// {trace(p^t a z^t + p^t b w^t)} on Sp(n), generated by (a, b) in {(e_i, 0)} and {(0, e_i)}.
inline Eigenfamily sp_family(std::size_t n, const ComplexVector& p) {
  detail::require_nonzero(p, n, "sp_family");
  const GroupId g = GroupId::sp(n);
  const auto c = eigen_constants(g);
  Eigenfamily fam{g, {}, c.lambda, c.mu, Provenance::Quaternionic, true};
  for (std::size_t block = 0; block < 2; ++block)
    for (std::size_t i = 0; i < n; ++i) {
      ComplexMatrix a(2 * n);
      for (std::size_t k = 0; k < n; ++k) a(k, block * n + i) = p[k];
      fam.members.push_back(FunctionExpr::linear_trace(std::move(a)));
    }
  return fam;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

inline constexpr double kDefaultTol = 1e-8;

// Max over samples and ordered pairs (phi, psi), phi == psi included, of
// |tau(phi) - lambda phi| and |kappa(phi, psi) - mu phi psi|.
inline VerificationReport verify_eigenfamily(const Eigenfamily& fam, const SignedBasis& basis,
                                             const std::vector<ComplexMatrix>& samples, double tol = kDefaultTol,
                                             const EvalOptions& opts = {}) {
  Stopwatch clock;
  VerificationReport rep;
  rep.check = "eigenfamily";
  rep.group = to_string(fam.group);
  rep.tol = tol;
  rep.parameters = {{"provenance", provenance_name(fam.provenance)},
                    {"members", fam.members.size()},
                    {"lambda", to_json(fam.lambda)},
                    {"mu", to_json(fam.mu)}};
  const auto res = max_over_samples(samples, 3, [&](const ComplexMatrix& x) {
    const Frame frame(x, basis);
    const OperatorTable t = operator_table(fam.members, frame, opts);
    double tau_res = 0.0, kappa_res = 0.0, magnitude = 0.0;
    for (std::size_t a = 0; a < t.values.size(); ++a) {
      tau_res = max_nan(tau_res, std::abs(t.tau[a] - fam.lambda * t.values[a]));
      magnitude = std::max(magnitude, std::abs(t.values[a]));
      for (std::size_t b = 0; b < t.values.size(); ++b)
        kappa_res = max_nan(kappa_res, std::abs(t.kappa[a][b] - fam.mu * t.values[a] * t.values[b]));
    }
    return std::vector<double>{tau_res, kappa_res, magnitude};
  });
  rep.add("tau", res[0]);
  rep.add("kappa", res[1]);
  rep.add_diagnostic("max_member_magnitude", res[2]);
  rep.samples_used = samples.size();
  rep.decide();
  rep.wall_time_s = clock.seconds();
  return rep;
}

// Checks the coordinate-function formulas for tau and kappa on SO(n), U(n) or Sp(n)
// for every index combination:
//   SO(n): tau(x_ij) = -(n-1)/2 x_ij
//          kappa(x_ij, x_kl) = -1/2 (x_il x_kj - delta_jl sum_t x_it x_kt)
//          kappa(x_ij, x_kl) = 1/2 (delta_ik delta_jl - x_il x_kj)        (uses x x^t = I)
//   U(n):  tau(z_ij) = -n z_ij,  kappa(z_ij, z_kl) = -z_il z_kj
//   Sp(n): tau(z_ij) = -(2n+1)/2 z_ij,  tau(w_ij) = -(2n+1)/2 w_ij
//          kappa(z_ij, z_kl) = -1/2 z_il z_kj,  kappa(w_ij, w_kl) = -1/2 w_il w_kj
//          kappa(z_ij, w_kl) = -1/2 (w_il z_kj - delta_jl sum_t (z_it w_kt - w_it z_kt))
// On Sp(n) the block identity z w^t - w z^t = 0 is also recorded, with tolerance min(tol, 1e-10).
inline VerificationReport verify_coordinate_lemmas(const GroupId& group, const std::vector<ComplexMatrix>& samples,
                                                   double tol = kDefaultTol) {
  Stopwatch clock;
  VerificationReport rep;
  rep.check = "coordinate_lemma";
  rep.group = to_string(group);
  rep.tol = tol;
  const SignedBasis basis = compact_basis(group);
  const std::size_t n = group.n;
  const double nd = static_cast<double>(n);
  const auto delta = [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; };

  // kappa(x_ij, x_kl) over the frame = sum_Z (xZ)_ij (xZ)_kl.
  const auto kappa_entries = [](const Frame& f, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    Complex s{};
    for (const auto& c : f.curves()) s += static_cast<double>(c.direction().sign) * c.first()(i, j) * c.first()(k, l);
    return s;
  };
  const auto tau_entry = [](const Frame& f, std::size_t i, std::size_t j) {
    Complex s{};
    for (const auto& c : f.curves()) s += static_cast<double>(c.direction().sign) * c.second()(i, j);
    return s;
  };

  switch (group.family) {
    case GroupFamily::SO: {
      const auto r = max_over_samples(samples, 4, [&](const ComplexMatrix& x) {
        const Frame f(x, basis);
        double t = 0, kg = 0, ks = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            t = max_nan(t, std::abs(tau_entry(f, i, j) + 0.5 * (nd - 1.0) * x(i, j)));
            for (std::size_t k = 0; k < n; ++k)
              for (std::size_t l = 0; l < n; ++l) {
                const Complex kap = kappa_entries(f, i, j, k, l);
                Complex row{};
                for (std::size_t s = 0; s < n; ++s) row += x(i, s) * x(k, s);
                const Complex general = -0.5 * (x(i, l) * x(k, j) - delta(j, l) * row);
                const Complex simplified = 0.5 * (delta(i, k) * delta(j, l) - x(i, l) * x(k, j));
                kg = max_nan(kg, std::abs(kap - general));
                ks = max_nan(ks, std::abs(kap - simplified));
              }
          }
        return std::vector<double>{t, kg, ks, group_defect(group, x)};
      });
      rep.add("tau", r[0]);
      rep.add("kappa_general", r[1]);
      rep.add("kappa_simplified", r[2]);
      rep.add_diagnostic("group_defect", r[3]);
      break;
    }
    case GroupFamily::U: {
      const auto r = max_over_samples(samples, 3, [&](const ComplexMatrix& x) {
        const Frame f(x, basis);
        double t = 0, k2 = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            t = max_nan(t, std::abs(tau_entry(f, i, j) + nd * x(i, j)));
            for (std::size_t k = 0; k < n; ++k)
              for (std::size_t l = 0; l < n; ++l)
                k2 = max_nan(k2, std::abs(kappa_entries(f, i, j, k, l) + x(i, l) * x(k, j)));
          }
        return std::vector<double>{t, k2, group_defect(group, x)};
      });
      rep.add("tau", r[0]);
      rep.add("kappa", r[1]);
      rep.add_diagnostic("group_defect", r[2]);
      break;
    }
    case GroupFamily::Sp: {
      const double lam = -(2.0 * nd + 1.0) / 2.0;
      const auto r = max_over_samples(samples, 7, [&](const ComplexMatrix& g) {
        const Frame f(g, basis);
        const auto z = [&](std::size_t i, std::size_t j) { return g(i, j); };
        const auto w = [&](std::size_t i, std::size_t j) { return g(i, n + j); };
        double tz = 0, tw = 0, kzz = 0, kww = 0, kzw = 0, sym = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            tz = max_nan(tz, std::abs(tau_entry(f, i, j) - lam * z(i, j)));
            tw = max_nan(tw, std::abs(tau_entry(f, i, n + j) - lam * w(i, j)));
            for (std::size_t k = 0; k < n; ++k) {
              Complex antisym{};
              for (std::size_t t = 0; t < n; ++t) antisym += z(i, t) * w(k, t) - w(i, t) * z(k, t);
              if (j == 0) sym = max_nan(sym, std::abs(antisym));
              for (std::size_t l = 0; l < n; ++l) {
                kzz = max_nan(kzz, std::abs(kappa_entries(f, i, j, k, l) + 0.5 * z(i, l) * z(k, j)));
                kww = max_nan(kww, std::abs(kappa_entries(f, i, n + j, k, n + l) + 0.5 * w(i, l) * w(k, j)));
                const Complex expected = -0.5 * (w(i, l) * z(k, j) - delta(j, l) * antisym);
                kzw = max_nan(kzw, std::abs(kappa_entries(f, i, j, k, n + l) - expected));
              }
            }
          }
        return std::vector<double>{tz, tw, kzz, kww, kzw, sym, group_defect(group, g)};
      });
      rep.add("tau_z", r[0]);
      rep.add("tau_w", r[1]);
      rep.add("kappa_zz", r[2]);
      rep.add("kappa_ww", r[3]);
      rep.add("kappa_zw", r[4]);
      rep.add("zw_symmetry", r[5], std::min(tol, 1e-10));
      rep.add_diagnostic("group_defect", r[6]);
      break;
    }
    default:
      throw ArgumentError("verify_coordinate_lemmas: supported groups are SO(n), U(n), Sp(n); got " + to_string(group));
  }
  rep.samples_used = samples.size();
  rep.decide();
  rep.wall_time_s = clock.seconds();
  return rep;
}

// Minor condition for A = p^t a, B = p^t b: max |a_ij b_kl - a_kj b_il| and |A B^t|.
struct MinorResiduals {
  double minors{0};
  double product{0};
};

inline MinorResiduals minor_condition(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  MinorResiduals r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          r.minors = std::max(r.minors, std::abs(a(i, j) * b(k, l) - a(k, j) * b(i, l)));
  r.product = (a * b.transpose()).max_abs();
  return r;
}

}  // namespace lgh
