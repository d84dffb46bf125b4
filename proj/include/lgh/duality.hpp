#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lgh/algebra.hpp"
#include "lgh/errors.hpp"
#include "lgh/expr.hpp"
#include "lgh/families.hpp"
#include "lgh/group.hpp"
#include "lgh/matrix.hpp"
#include "lgh/report.hpp"
#include "lgh/sampling.hpp"

namespace lgh {

// Inverse by Gauss-Jordan elimination with partial pivoting.
inline ComplexMatrix inverse(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix m(a);
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == Complex{}) throw DomainError("inverse: singular matrix", "inverse");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(pivot, j), m(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const Complex d = 1.0 / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= d;
      inv(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == Complex{}) continue;
      const Complex f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Involutive automorphism of a compact Lie algebra u inside u(N).
struct Involution {
  enum class Kind {
    Identity,    // Z
    Conjugate,   // conj(Z)
    Twisted,     // M conj(Z) M^-1
    Inner,       // M Z M^-1
  };
  Kind kind{Kind::Identity};
  ComplexMatrix m;
  ComplexMatrix m_inv;

  static Involution identity() { return {Kind::Identity, {}, {}}; }
  static Involution conjugate() { return {Kind::Conjugate, {}, {}}; }
  static Involution twisted(ComplexMatrix m) {
    ComplexMatrix inv = inverse(m);
    return {Kind::Twisted, std::move(m), std::move(inv)};
  }
  static Involution inner(ComplexMatrix m) {
    ComplexMatrix inv = inverse(m);
    return {Kind::Inner, std::move(m), std::move(inv)};
  }

  ComplexMatrix operator()(const ComplexMatrix& z) const {
    switch (kind) {
      case Kind::Identity: return z;
      case Kind::Conjugate: return z.conj();
      case Kind::Twisted: return m * z.conj() * m_inv;
      case Kind::Inner: return m * z * m_inv;
    }
    return z;
  }

  // Conjugation of the complexified group fixing the dual real form:
  // sigma(x) = Theta((x^*)^-1), Theta the group-level complex-linear extension.
  ComplexMatrix real_form_conjugation(const ComplexMatrix& x) const {
    switch (kind) {
      case Kind::Identity: return inverse(x.adjoint());
      case Kind::Conjugate: return x.conj();
      case Kind::Twisted: return m * x.conj() * m_inv;
      case Kind::Inner: return m * inverse(x.adjoint()) * m_inv;
    }
    return x;
  }

  std::string_view name() const {
    switch (kind) {
      case Kind::Identity: return "identity";
      case Kind::Conjugate: return "conjugate";
      case Kind::Twisted: return "twisted_conjugate";
      case Kind::Inner: return "inner";
    }
    return "?";
  }
};

struct DualPairInvariants {
  double involution{0};      // max ||theta(theta(Z)) - Z||
  double automorphism{0};    // max ||theta[Z,W] - [theta Z, theta W]||
  double bracket_kk{0};      // component of [k,k] outside k
  double bracket_kp{0};      // component of [k,p] outside p
  double bracket_pp{0};      // component of [p,p] outside k
  double sign{0};            // max |Re trace(ZW) - sign delta_ZW| over k and p
  std::size_t dim_k{0};
  std::size_t dim_p{0};
  std::size_t dim_compact{0};
};

// A compact group U and its non-compact dual G realised as the aligned real form
// exp(k + i m) in the complex matrices of U, where u = k + m is the eigenspace
// split of the involution.
struct DualPair {
  GroupId compact;
  GroupId noncompact;
  std::size_t ambient_dim{0};
  Involution involution;
  SignedBasis k_basis;  // theta-fixed part, sign -1
  SignedBasis p_basis;  // i * (theta-anti-fixed part), sign +1
  DualPairInvariants invariants;

  // k_basis followed by p_basis: the signed frame of the non-compact metric Re trace(ZW).
  SignedBasis frame() const {
    SignedBasis all{noncompact, k_basis.vectors, false};
    all.vectors.insert(all.vectors.end(), p_basis.vectors.begin(), p_basis.vectors.end());
    return all;
  }
};

inline constexpr double kInvolutionTol = 1e-12;
inline constexpr double kAutomorphismTol = 1e-10;
inline constexpr double kBracketTol = 1e-9;
inline constexpr double kSignTol = 1e-10;

namespace detail {

// Component of m outside the span of a signed orthonormal basis (max-abs norm).
inline double outside_span(const ComplexMatrix& m, const SignedBasis& basis) {
  ComplexMatrix r = m;
  for (const auto& v : basis.vectors) r -= v.matrix * (v.sign * split_form(m, v.matrix));
  return r.max_abs();
}

inline double bracket_residual(const SignedBasis& a, const SignedBasis& b, const SignedBasis& target) {
  double worst = 0.0;
  for (const auto& u : a.vectors)
    for (const auto& v : b.vectors) worst = std::max(worst, outside_span(commutator(u.matrix, v.matrix), target));
  return worst;
}

inline double sign_residual(const SignedBasis& basis, int expected_sign) {
  double worst = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis.vectors[a].sign != expected_sign) worst = std::max(worst, 2.0);
    for (std::size_t b = a; b < basis.size(); ++b) {
      const double f = split_form(basis.vectors[a].matrix, basis.vectors[b].matrix);
      worst = std::max(worst, std::abs(f - (a == b ? expected_sign : 0)));
    }
  }
  return worst;
}

}  // namespace detail

// Builds the dual pair for `compact` and `theta`, checks its invariants and throws
// ConstructionError when one fails.
inline DualPair make_dual_pair(const GroupId& compact, const GroupId& noncompact, Involution theta) {
  const SignedBasis u = compact_basis(compact);
  std::vector<ComplexMatrix> fixed, anti;
  DualPairInvariants inv;
  for (const auto& v : u.vectors) {
    const ComplexMatrix t = theta(v.matrix);
    inv.involution = std::max(inv.involution, max_abs_diff(theta(t), v.matrix));
    fixed.push_back((v.matrix + t) * 0.5);
    anti.push_back((v.matrix - t) * (0.5 * kI));
  }
  for (const auto& a : u.vectors)
    for (const auto& b : u.vectors)
      inv.automorphism = std::max(inv.automorphism, max_abs_diff(theta(commutator(a.matrix, b.matrix)),
                                                                 commutator(theta(a.matrix), theta(b.matrix))));

  DualPair pair{compact, noncompact, u.matrix_dim(), std::move(theta), {}, {}, {}};
  pair.k_basis = gram_schmidt_indefinite(independent_span(fixed), noncompact);
  pair.p_basis = gram_schmidt_indefinite(independent_span(anti), noncompact);
  inv.bracket_kk = detail::bracket_residual(pair.k_basis, pair.k_basis, pair.k_basis);
  inv.bracket_kp = detail::bracket_residual(pair.k_basis, pair.p_basis, pair.p_basis);
  inv.bracket_pp = detail::bracket_residual(pair.p_basis, pair.p_basis, pair.k_basis);
  inv.sign = std::max(detail::sign_residual(pair.k_basis, -1), detail::sign_residual(pair.p_basis, +1));
  inv.dim_k = pair.k_basis.size();
  inv.dim_p = pair.p_basis.size();
  inv.dim_compact = u.size();
  pair.invariants = inv;

  const auto fail = [&](const std::string& what, double value) {
    throw ConstructionError("dual pair " + to_string(noncompact) + ": " + what + " residual " + std::to_string(value));
  };
  if (!(inv.involution < kInvolutionTol)) fail("involution", inv.involution);
  if (!(inv.automorphism < kAutomorphismTol)) fail("automorphism", inv.automorphism);
  if (!(inv.bracket_kk < kBracketTol)) fail("[k,k] closure", inv.bracket_kk);
  if (!(inv.bracket_kp < kBracketTol)) fail("[k,p] closure", inv.bracket_kp);
  if (!(inv.bracket_pp < kBracketTol)) fail("[p,p] closure", inv.bracket_pp);
  if (!(inv.sign < kSignTol)) fail("sign", inv.sign);
  if (inv.dim_k + inv.dim_p != inv.dim_compact)
    fail("dimension", static_cast<double>(inv.dim_k + inv.dim_p) - static_cast<double>(inv.dim_compact));
  return pair;
}

// Compact partner of each non-compact group:
//   SL(n,R) ~ SU(n)        theta = conj
//   SU*(2n) ~ SU(2n)       theta = J conj(.) J^-1
//   Sp(n,R) ~ Sp(n)        theta = conj
//   SO*(2n) ~ SO(2n)       theta = J . J^-1
//   SO(p,q) ~ SO(p+q)      theta = I_pq . I_pq
//   SU(p,q) ~ SU(p+q)      theta = I_pq . I_pq
//   Sp(p,q) ~ Sp(p+q)      theta = K . K, K = diag(I_pq, I_pq)
inline DualPair dual_pair(const GroupId& g) {
  switch (g.family) {
    case GroupFamily::SLR:
      if (g.n < 2) throw ArgumentError("dual_pair: SL(n,R) needs n >= 2");
      return make_dual_pair(GroupId::su(g.n), g, Involution::conjugate());
    case GroupFamily::SUstar:
      return make_dual_pair(GroupId::su(2 * g.n), g, Involution::twisted(symplectic_unit(g.n)));
    case GroupFamily::SpR:
      return make_dual_pair(GroupId::sp(g.n), g, Involution::conjugate());
    case GroupFamily::SOstar:
      return make_dual_pair(GroupId::so(2 * g.n), g, Involution::inner(symplectic_unit(g.n)));
    case GroupFamily::SOpq:
      return make_dual_pair(GroupId::so(g.p + g.q), g, Involution::inner(indefinite_unit(g.p, g.q)));
    case GroupFamily::SUpq:
      return make_dual_pair(GroupId::su(g.p + g.q), g, Involution::inner(indefinite_unit(g.p, g.q)));
    case GroupFamily::Sppq: {
      const ComplexMatrix ipq = indefinite_unit(g.p, g.q);
      const ComplexMatrix zero(g.p + g.q);
      return make_dual_pair(GroupId::sp(g.p + g.q), g, Involution::inner(block2x2(ipq, zero, zero, ipq)));
    }
    default:
      throw ArgumentError("dual_pair: not a non-compact dual family: " + to_string(g));
  }
}

// Degenerate pair with the identity involution: k is all of u and p is empty.
inline DualPair identity_pair(const GroupId& compact) {
  return make_dual_pair(compact, compact, Involution::identity());
}

// Holomorphic continuation of an entry-polynomial or rational function is the
// same expression evaluated on complex matrices. Conjugated entries cannot be continued.
inline FunctionExpr continue_function(const FunctionExpr& f) {
  if (!is_holomorphic(f)) throw UnsupportedError("continue_function: expression contains a non-holomorphic node");
  return f;
}

// exp(A1) exp(A2) with A_m random in span(k + p), coefficients uniform in [-radius, radius].
inline std::vector<ComplexMatrix> sample_noncompact(const DualPair& pair, std::size_t count, double radius,
                                                    std::uint64_t seed) {
  if (radius < 0.0) throw ArgumentError("sample_noncompact: radius must be non-negative");
  return sample_points(pair.frame(), count, radius, seed);
}

// Deviation of x from the aligned non-compact group: the defining equations of the
// complexified compact group together with the real-form condition sigma(x) = x.
inline double noncompact_defect(const DualPair& pair, const ComplexMatrix& x) {
  const std::size_t d = x.dim();
  double complex_defect = 0.0;
  switch (pair.compact.family) {
    case GroupFamily::SO:
      complex_defect = std::max(max_abs_diff(x * x.transpose(), ComplexMatrix::identity(d)), std::abs(det(x) - 1.0));
      break;
    case GroupFamily::SU:
      complex_defect = std::abs(det(x) - 1.0);
      break;
    case GroupFamily::Sp: {
      const ComplexMatrix j = symplectic_unit(pair.compact.n);
      complex_defect = max_abs_diff(x * j * x.transpose(), j);
      break;
    }
    default:
      break;
  }
  return std::max(complex_defect, max_abs_diff(pair.involution.real_form_conjugation(x), x));
}

namespace detail {
inline void check_dual_family(const DualPair& pair, const Eigenfamily& fam) {
  if (!(fam.group == pair.compact))
    throw PreconditionError("dual family lives on " + to_string(fam.group) + " but the pair's compact group is " +
                            to_string(pair.compact));
  for (const auto& m : fam.members) continue_function(m);
}

inline Eigenfamily negated(const Eigenfamily& fam, const GroupId& g) {
  Eigenfamily out = fam;
  out.group = g;
  out.lambda = -fam.lambda;
  out.mu = -fam.mu;
  return out;
}
}  // namespace detail

// Evaluates the continued family on non-compact samples with the signed frame
// (tau = -sum_k Y^2 + sum_p X^2) and checks the eigen-equations with (-lambda, -mu).
inline VerificationReport verify_dual_eigenfamily(const DualPair& pair, const Eigenfamily& fam,
                                                  const std::vector<ComplexMatrix>& samples, double tol = kDefaultTol) {
  detail::check_dual_family(pair, fam);
  if (!fam.dual_continuable)
    throw PreconditionError("verify_dual_eigenfamily: family construction uses x x^t = I and is not dual-continuable");
  VerificationReport rep = verify_eigenfamily(detail::negated(fam, pair.noncompact), pair.frame(), samples, tol);
  rep.check = "dual_eigenfamily";
  rep.parameters["compact"] = to_string(pair.compact);
  rep.parameters["involution"] = pair.involution.name();
  double defect = 0.0;
  for (const auto& x : samples) defect = max_nan(defect, noncompact_defect(pair, x));
  rep.add_diagnostic("group_defect", defect);
  return rep;
}

// Dual residuals of a family that is not dual-continuable, reported without a verdict.
inline VerificationReport probe_noncontinuable(const DualPair& pair, const Eigenfamily& fam,
                                               const std::vector<ComplexMatrix>& samples) {
  detail::check_dual_family(pair, fam);
  VerificationReport rep;
  rep.check = "dual_probe";
  rep.group = to_string(pair.noncompact);
  rep.parameters = {{"compact", to_string(pair.compact)}, {"provenance", provenance_name(fam.provenance)}};
  rep.samples_used = samples.size();
  if (samples.empty()) return rep;
  const VerificationReport inner = verify_eigenfamily(detail::negated(fam, pair.noncompact), pair.frame(), samples,
                                                      kDefaultTol);
  for (const auto& r : inner.residuals) rep.add_diagnostic(r.name, r.value);
  rep.wall_time_s = inner.wall_time_s;
  return rep;
}

}  // namespace lgh
