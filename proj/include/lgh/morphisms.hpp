#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "lgh/errors.hpp"
#include "lgh/expr.hpp"
#include "lgh/families.hpp"
#include "lgh/operators.hpp"
#include "lgh/report.hpp"
#include "lgh/sampling.hpp"

namespace lgh {

using CoeffMap = FunctionExpr::CoeffMap;
using Exponents = FunctionExpr::Exponents;

// All exponent vectors of length `vars` and total degree `degree`, in lexicographic order.
inline std::vector<Exponents> monomials(std::size_t vars, unsigned degree) {
  std::vector<Exponents> out;
  if (vars == 0) return out;
  Exponents cur(vars, 0);
  const std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == vars) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

inline unsigned degree_of(const CoeffMap& c) {
  if (c.empty()) throw ValidationError("polynomial has no terms");
  const unsigned d = std::accumulate(c.begin()->first.begin(), c.begin()->first.end(), 0u);
  for (const auto& [e, v] : c)
    if (std::accumulate(e.begin(), e.end(), 0u) != d) throw ValidationError("polynomial is not homogeneous");
  return d;
}

// Homogeneous polynomial with every monomial of the given degree: coefficients drawn
// uniformly on the complex unit disc, then scaled to unit 2-norm.
inline CoeffMap random_hom_poly(std::size_t vars, unsigned degree, SplitMix64& rng) {
  CoeffMap c;
  double norm2 = 0.0;
  for (auto& e : monomials(vars, degree)) {
    const Complex v = rng.unit_disc();
    norm2 += std::norm(v);
    c.emplace(std::move(e), v);
  }
  if (norm2 > 0.0)
    for (auto& [e, v] : c) v /= std::sqrt(norm2);
  return c;
}

// ---------------------------------------------------------------------------
// Power families
// ---------------------------------------------------------------------------

struct PowerFamily {
  Eigenfamily base;
  unsigned k{1};
  std::vector<FunctionExpr> members;
  Complex lambda_k{};  // k lambda + k(k-1) mu
  Complex mu_k{};      // k^2 mu

  Eigenfamily as_eigenfamily() const {
    return {base.group, members, lambda_k, mu_k, Provenance::Power, base.dual_continuable};
  }
};

inline PowerFamily power_family(const Eigenfamily& fam, unsigned k) {
  if (k == 0) throw ArgumentError("power_family: k must be >= 1");
  PowerFamily pf{fam, k, {}, {}, {}};
  const double kd = k;
  pf.lambda_k = kd * fam.lambda + kd * (kd - 1.0) * fam.mu;
  pf.mu_k = kd * kd * fam.mu;
  if (k == 1) {
    pf.members = fam.members;
    return pf;
  }
  for (auto& e : monomials(fam.members.size(), k)) {
    CoeffMap c;
    c.emplace(std::move(e), 1.0);
    pf.members.push_back(FunctionExpr::hom_poly(std::move(c), fam.members, k));
  }
  return pf;
}

// ---------------------------------------------------------------------------
// Rational harmonic morphisms P/Q
// ---------------------------------------------------------------------------

struct RationalMorphism {
  FunctionExpr numerator;
  FunctionExpr denominator;
  CoeffMap p_coeffs;
  CoeffMap q_coeffs;
  unsigned degree{1};
  Eigenfamily family;
  double floor{kDefaultQuotientFloor};

  FunctionExpr expr() const { return FunctionExpr::quotient(numerator, denominator); }
  EvalOptions eval_options() const { return EvalOptions{floor}; }
};

inline constexpr double kProportionalityTol = 1e-12;

// True when the two coefficient vectors are linearly dependent over C.
inline bool proportional(const CoeffMap& p, const CoeffMap& q) {
  std::vector<std::pair<Complex, Complex>> pairs;
  double scale = 0.0;
  for (const auto& [e, v] : p) {
    const auto it = q.find(e);
    pairs.emplace_back(v, it == q.end() ? Complex{} : it->second);
  }
  for (const auto& [e, v] : q)
    if (!p.count(e)) pairs.emplace_back(Complex{}, v);
  for (const auto& [a, b] : pairs) scale = std::max({scale, std::abs(a), std::abs(b)});
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i; j < pairs.size(); ++j)
      if (std::abs(pairs[i].first * pairs[j].second - pairs[j].first * pairs[i].second) > kProportionalityTol * scale * scale)
        return false;
  return true;
}

// P/Q with P, Q homogeneous of equal degree in the members of `fam`. The quotient is
// evaluable where |Q(phi(x))| > floor.
inline RationalMorphism quotient_morphism(const Eigenfamily& fam, const CoeffMap& p, const CoeffMap& q,
                                          double floor = kDefaultQuotientFloor) {
  const unsigned dp = degree_of(p);
  const unsigned dq = degree_of(q);
  if (dp != dq) throw ValidationError("quotient_morphism: P has degree " + std::to_string(dp) + ", Q has degree " + std::to_string(dq));
  if (dp == 0) throw ValidationError("quotient_morphism: degree must be >= 1");
  if (proportional(p, q)) throw ValidationError("quotient_morphism: P and Q are linearly dependent");
  return {FunctionExpr::hom_poly(p, fam.members, dp), FunctionExpr::hom_poly(q, fam.members, dq), p, q, dp, fam, floor};
}

// (aP + bQ)/(cP + dQ): the post-composition of P/Q with a Moebius map.
inline RationalMorphism mobius(const RationalMorphism& m, Complex a, Complex b, Complex c, Complex d) {
  if (std::abs(a * d - b * c) == 0.0) throw ValidationError("mobius: ad - bc must be non-zero");
  const auto combine = [&](Complex x, Complex y) {
    CoeffMap out;
    for (const auto& [e, v] : m.p_coeffs) out[e] += x * v;
    for (const auto& [e, v] : m.q_coeffs) out[e] += y * v;
    return out;
  };
  return quotient_morphism(m.family, combine(a, b), combine(c, d), m.floor);
}

// Draws up to max_factor * count candidates and keeps the first `count` accepted by `in_domain`.
template <typename Pred>
std::vector<ComplexMatrix> sample_domain(const SignedBasis& basis, std::size_t count, double radius, std::uint64_t seed,
                                         Pred&& in_domain, std::size_t max_factor = 10,
                                         std::size_t* drawn = nullptr) {
  SplitMix64 rng(seed);
  std::vector<ComplexMatrix> out;
  std::size_t tries = 0;
  while (out.size() < count && tries < max_factor * count) {
    ComplexMatrix x = random_group_element(basis, radius, rng);
    ++tries;
    if (in_domain(x)) out.push_back(std::move(x));
  }
  if (drawn) *drawn = tries;
  return out;
}

inline bool in_quotient_domain(const RationalMorphism& m, const ComplexMatrix& x) {
  return std::abs(eval_point(m.denominator, x)) > m.floor;
}

// |tau(P/Q)| and |kappa(P/Q, P/Q)| over the samples where |Q| > floor.
inline VerificationReport verify_harmonic_morphism(const RationalMorphism& m, const SignedBasis& basis,
                                                   const std::vector<ComplexMatrix>& samples, double tol = kDefaultTol) {
  Stopwatch clock;
  VerificationReport rep;
  rep.check = "harmonic_morphism";
  rep.group = to_string(m.family.group);
  rep.tol = tol;
  rep.parameters = {{"degree", m.degree}, {"family_size", m.family.members.size()}, {"floor", m.floor}};

  std::vector<ComplexMatrix> usable;
  for (const auto& x : samples)
    if (in_quotient_domain(m, x)) usable.push_back(x);
  rep.samples_used = usable.size();
  rep.samples_discarded = samples.size() - usable.size();
  if (usable.empty()) throw InconclusiveError("verify_harmonic_morphism: no sample satisfies |Q| > floor");

  const FunctionExpr phi = m.expr();
  const EvalOptions opts = m.eval_options();
  const auto r = max_over_samples(usable, 3, [&](const ComplexMatrix& x) {
    const Frame frame(x, basis);
    const auto jets = frame_jets(phi, frame, opts);
    return std::vector<double>{std::abs(tau_from_jets(jets, frame)), std::abs(kappa_from_jets(jets, jets, frame)),
                               std::abs(eval_point(m.denominator, x))};
  });
  rep.add("tau", r[0]);
  rep.add("kappa", r[1]);
  rep.add_diagnostic("max_abs_denominator", r[2]);
  rep.decide();
  rep.wall_time_s = clock.seconds();
  return rep;
}

// Quotient condition Q^2 kappa(P,P) = PQ kappa(P,Q) = P^2 kappa(Q,Q), together with
// tau(P) = lambda_d P and tau(Q) = lambda_d Q where lambda_d is the power-family
// constant for the degree of each polynomial.
inline VerificationReport verify_quotient_condition(const Eigenfamily& fam, const CoeffMap& p, const CoeffMap& q,
                                                    const SignedBasis& basis, const std::vector<ComplexMatrix>& samples,
                                                    double tol = kDefaultTol) {
  Stopwatch clock;
  const unsigned dp = degree_of(p);
  const unsigned dq = degree_of(q);
  const FunctionExpr pe = FunctionExpr::hom_poly(p, fam.members, dp);
  const FunctionExpr qe = FunctionExpr::hom_poly(q, fam.members, dq);
  const Complex lp = power_family(fam, dp).lambda_k;
  const Complex lq = power_family(fam, dq).lambda_k;

  VerificationReport rep;
  rep.check = "quotient_condition";
  rep.group = to_string(fam.group);
  rep.tol = tol;
  rep.parameters = {{"degree_p", dp}, {"degree_q", dq}};
  const auto r = max_over_samples(samples, 4, [&](const ComplexMatrix& x) {
    const Frame frame(x, basis);
    const auto jp = frame_jets(pe, frame);
    const auto jq = frame_jets(qe, frame);
    const Complex pv = jp.empty() ? eval_point(pe, x) : jp[0].f0;
    const Complex qv = jq.empty() ? eval_point(qe, x) : jq[0].f0;
    const Complex a = qv * qv * kappa_from_jets(jp, jp, frame);
    const Complex b = pv * qv * kappa_from_jets(jp, jq, frame);
    const Complex c = pv * pv * kappa_from_jets(jq, jq, frame);
    return std::vector<double>{std::abs(a - b), std::abs(b - c), std::abs(tau_from_jets(jp, frame) - lp * pv),
                               std::abs(tau_from_jets(jq, frame) - lq * qv)};
  });
  rep.add("q2_kpp_minus_pq_kpq", r[0]);
  rep.add("pq_kpq_minus_p2_kqq", r[1]);
  rep.add("tau_p", r[2]);
  rep.add("tau_q", r[3]);
  rep.samples_used = samples.size();
  rep.decide();
  rep.wall_time_s = clock.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Orthogonal harmonic families and holomorphic composition
// ---------------------------------------------------------------------------

// A general polynomial h(u_1, ..., u_m): exponent vectors of any total degree.
using Polynomial = CoeffMap;

// Orthogonal harmonic family: an eigenfamily with lambda = mu = 0.
inline Eigenfamily orthogonal_family(const GroupId& group, std::vector<FunctionExpr> members) {
  return {group, std::move(members), 0.0, 0.0, Provenance::Orthogonal, true};
}

// {P_a / Q} for the rows of `numerators`, all over one denominator: an orthogonal
// harmonic family built from a single eigenfamily.
inline Eigenfamily common_denominator_family(const Eigenfamily& fam, const std::vector<CoeffMap>& numerators,
                                             const CoeffMap& denominator, double floor = kDefaultQuotientFloor) {
  std::vector<FunctionExpr> members;
  for (const auto& p : numerators) members.push_back(quotient_morphism(fam, p, denominator, floor).expr());
  return orthogonal_family(fam.group, std::move(members));
}

// h(phi_1, ..., phi_m). The family is verified first (tau = 0, kappa = 0 on the
// samples); failure raises PreconditionError.
inline FunctionExpr compose_orthogonal(const Eigenfamily& family, const Polynomial& h, const SignedBasis& basis,
                                       const std::vector<ComplexMatrix>& samples, double tol = kDefaultTol,
                                       const EvalOptions& opts = {}) {
  if (family.lambda != Complex{} || family.mu != Complex{})
    throw PreconditionError("compose_orthogonal: family must have lambda = mu = 0");
  for (const auto& [e, c] : h)
    if (e.size() != family.members.size())
      throw ArgumentError("compose_orthogonal: exponent vectors must have one entry per family member");
  const VerificationReport rep = verify_eigenfamily(family, basis, samples, tol, opts);
  if (!rep.passed())
    throw PreconditionError("compose_orthogonal: family is not orthogonal harmonic on the samples (tau residual " +
                            std::to_string(rep.residual("tau")) + ", kappa residual " +
                            std::to_string(rep.residual("kappa")) + ")");
  std::map<unsigned, CoeffMap> by_degree;
  for (const auto& [e, c] : h) by_degree[std::accumulate(e.begin(), e.end(), 0u)].emplace(e, c);
  std::vector<FunctionExpr> terms;
  for (auto& [d, coeffs] : by_degree) {
    if (d == 0) {
      terms.push_back(FunctionExpr::constant(coeffs.begin()->second));
    } else {
      terms.push_back(FunctionExpr::hom_poly(std::move(coeffs), family.members, d));
    }
  }
  if (terms.size() == 1) return terms.front();
  return FunctionExpr::sum(std::move(terms));
}

}  // namespace lgh
