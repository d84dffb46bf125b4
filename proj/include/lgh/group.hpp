#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lgh/errors.hpp"

namespace lgh {

enum class GroupFamily {
  SO,        // SO(n)
  U,         // U(n)
  SU,        // SU(n)
  Sp,        // Sp(n), realised in 2n x 2n complex matrices
  GLCSplit,  // GL(n,C) with the split metric Re trace(ZW)
  SLR,       // SL(n,R), dual of SU(n)
  SUstar,    // SU*(2n), dual of SU(2n)
  SpR,       // Sp(n,R), dual of Sp(n)
  SOstar,    // SO*(2n), dual of SO(2n)
  SOpq,      // SO(p,q), dual of SO(p+q)
  SUpq,      // SU(p,q), dual of SU(p+q)
  Sppq,      // Sp(p,q), dual of Sp(p+q)
};

// A classical group together with its size parameters. For SUstar and SOstar
// the stored `n` is the half-size (SU*(2n) stores n). Indefinite families use (p, q)
// and store n = p + q.
struct GroupId {
  GroupFamily family{GroupFamily::SO};
  std::size_t n{0};
  std::size_t p{0};
  std::size_t q{0};

  static GroupId so(std::size_t n) { return make(GroupFamily::SO, n); }
  static GroupId u(std::size_t n) { return make(GroupFamily::U, n); }
  static GroupId su(std::size_t n) { return make(GroupFamily::SU, n); }
  static GroupId sp(std::size_t n) { return make(GroupFamily::Sp, n); }
  static GroupId glc_split(std::size_t n) { return make(GroupFamily::GLCSplit, n); }
  static GroupId slr(std::size_t n) { return make(GroupFamily::SLR, n); }
  // SU*(size) and SO*(size) take the full matrix size, which must be even.
  static GroupId su_star(std::size_t size) { return make(GroupFamily::SUstar, half(size)); }
  static GroupId sp_r(std::size_t n) { return make(GroupFamily::SpR, n); }
  static GroupId so_star(std::size_t size) { return make(GroupFamily::SOstar, half(size)); }
  static GroupId so_pq(std::size_t p, std::size_t q) { return make_pq(GroupFamily::SOpq, p, q); }
  static GroupId su_pq(std::size_t p, std::size_t q) { return make_pq(GroupFamily::SUpq, p, q); }
  static GroupId sp_pq(std::size_t p, std::size_t q) { return make_pq(GroupFamily::Sppq, p, q); }

  bool indefinite() const noexcept {
    return family == GroupFamily::SOpq || family == GroupFamily::SUpq || family == GroupFamily::Sppq;
  }

  bool compact() const noexcept {
    return family == GroupFamily::SO || family == GroupFamily::U || family == GroupFamily::SU ||
           family == GroupFamily::Sp;
  }

  // Side length of the complex matrices the group lives in.
  std::size_t matrix_dim() const noexcept {
    switch (family) {
      case GroupFamily::Sp:
      case GroupFamily::SpR:
      case GroupFamily::SUstar:
      case GroupFamily::SOstar:
        return 2 * n;
      case GroupFamily::Sppq:
        return 2 * (p + q);
      case GroupFamily::SOpq:
      case GroupFamily::SUpq:
        return p + q;
      default:
        return n;
    }
  }

  friend bool operator==(const GroupId&, const GroupId&) = default;

 private:
  static GroupId make(GroupFamily f, std::size_t n) {
    if (n == 0) throw ArgumentError("GroupId: size parameter must be positive");
    return GroupId{f, n, 0, 0};
  }
  static std::size_t half(std::size_t size) {
    if (size == 0 || size % 2 != 0) throw ArgumentError("GroupId: SU*/SO* need an even positive size");
    return size / 2;
  }
  static GroupId make_pq(GroupFamily f, std::size_t p, std::size_t q) {
    if (p == 0 || q == 0) throw ArgumentError("GroupId: signature (p,q) must be positive");
    return GroupId{f, p + q, p, q};
  }
};

inline std::string_view family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::SO: return "so";
    case GroupFamily::U: return "u";
    case GroupFamily::SU: return "su";
    case GroupFamily::Sp: return "sp";
    case GroupFamily::GLCSplit: return "glc_split";
    case GroupFamily::SLR: return "sl_r";
    case GroupFamily::SUstar: return "su_star";
    case GroupFamily::SpR: return "sp_r";
    case GroupFamily::SOstar: return "so_star";
    case GroupFamily::SOpq: return "so_pq";
    case GroupFamily::SUpq: return "su_pq";
    case GroupFamily::Sppq: return "sp_pq";
  }
  return "?";
}

inline GroupFamily parse_family(std::string_view s) {
  for (auto f : {GroupFamily::SO, GroupFamily::U, GroupFamily::SU, GroupFamily::Sp, GroupFamily::GLCSplit,
                 GroupFamily::SLR, GroupFamily::SUstar, GroupFamily::SpR, GroupFamily::SOstar, GroupFamily::SOpq,
                 GroupFamily::SUpq, GroupFamily::Sppq})
    if (family_name(f) == s) return f;
  throw ArgumentError("unknown group family '" + std::string(s) + "'");
}

inline GroupId make_group(GroupFamily f, std::size_t n, std::size_t p = 0, std::size_t q = 0) {
  switch (f) {
    case GroupFamily::SOpq: return GroupId::so_pq(p, q);
    case GroupFamily::SUpq: return GroupId::su_pq(p, q);
    case GroupFamily::Sppq: return GroupId::sp_pq(p, q);
    case GroupFamily::SO: return GroupId::so(n);
    case GroupFamily::U: return GroupId::u(n);
    case GroupFamily::SU: return GroupId::su(n);
    case GroupFamily::Sp: return GroupId::sp(n);
    case GroupFamily::GLCSplit: return GroupId::glc_split(n);
    case GroupFamily::SLR: return GroupId::slr(n);
    case GroupFamily::SUstar: return GroupId::su_star(n);  // full size
    case GroupFamily::SpR: return GroupId::sp_r(n);
    case GroupFamily::SOstar: return GroupId::so_star(n);  // full size
  }
  throw ArgumentError("make_group: bad family");
}

// Human-readable label, e.g. "SO(4)", "SU(1,2)", "SU*(4)".
inline std::string to_string(const GroupId& g) {
  const auto num = [](std::size_t v) { return std::to_string(v); };
  switch (g.family) {
    case GroupFamily::SO: return "SO(" + num(g.n) + ")";
    case GroupFamily::U: return "U(" + num(g.n) + ")";
    case GroupFamily::SU: return "SU(" + num(g.n) + ")";
    case GroupFamily::Sp: return "Sp(" + num(g.n) + ")";
    case GroupFamily::GLCSplit: return "GL(" + num(g.n) + ",C)";
    case GroupFamily::SLR: return "SL(" + num(g.n) + ",R)";
    case GroupFamily::SUstar: return "SU*(" + num(2 * g.n) + ")";
    case GroupFamily::SpR: return "Sp(" + num(g.n) + ",R)";
    case GroupFamily::SOstar: return "SO*(" + num(2 * g.n) + ")";
    case GroupFamily::SOpq: return "SO(" + num(g.p) + "," + num(g.q) + ")";
    case GroupFamily::SUpq: return "SU(" + num(g.p) + "," + num(g.q) + ")";
    case GroupFamily::Sppq: return "Sp(" + num(g.p) + "," + num(g.q) + ")";
  }
  return "?";
}

}  // namespace lgh
