#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "zp/bipoly.hpp"
#include "zp/error.hpp"
#include "zp/principalize.hpp"
#include "zp/zeta.hpp"

namespace zp::family {

/// (x^b y, x^a + y^(b+1)).
inline std::vector<BiPoly> build(long a, long b) {
  if (b < 0 || a <= b)
    throw Error(ErrorKind::parameter_order, "need a > b >= 0, got a = " + std::to_string(a) + ", b = " + std::to_string(b));
  const int ai = static_cast<int>(a), bi = static_cast<int>(b);
  return {BiPoly::monomial(Rational(1), bi, 1), BiPoly::monomial(Rational(1), ai, 0) + BiPoly::monomial(Rational(1), 0, bi + 1)};
}

/// (N, nu) of the chain E_1, ..., E_(a-b), in blow-up order.
inline std::vector<std::pair<long, long>> expected_chain(long a, long b) {
  if (b < 0 || a <= b) throw Error(ErrorKind::parameter_order, "need a > b >= 0");
  std::vector<std::pair<long, long>> out;
  for (long i = 1; i <= a - b; ++i) out.emplace_back(b + i, i + 1);
  return out;
}

/// Whether the diagram is exactly the predicted chain: no strict branches,
/// E_i(b+i, i+1) joined in a path.
inline bool matches_chain(const IntersectionDiagram& d, long a, long b) {
  const auto chain = expected_chain(a, b);
  if (d.origin_case || d.vertices.size() != chain.size()) return false;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& v = d.vertices[i];
    if (v.kind != DivisorKind::exceptional || v.N != chain[i].first || v.nu != chain[i].second) return false;
  }
  std::vector<std::pair<int, int>> path;
  for (int i = 0; i + 1 < static_cast<int>(chain.size()); ++i) path.emplace_back(i, i + 1);
  return d.edges == path;
}

/// Membership in Q intersected with [-1, 0) union {-1 - 1/i : i >= 1}.
inline bool admissible(const Rational& s0) {
  if (s0 >= Rational(-1) && s0 < Rational(0)) return true;
  const Rational t = Rational(-1) - s0;  // 1/i
  return t > Rational(0) && t.num() == 1;
}

/// Family parameters with a pole at s0: write -s0 = p/q in lowest terms,
/// take the least k with p k > 1, then a = q k and b = q k - p k + 1.
inline std::pair<long, long> realize_pole(const Rational& s0) {
  if (!admissible(s0)) throw Error(ErrorKind::out_of_range, s0.str() + " is out of range");
  const Rational r = -s0;
  const long p = r.num().get_si(), q = r.den().get_si();
  long k = 1;
  while (p * k <= 1) ++k;
  const long a = q * k, b = q * k - p * k + 1;
  if (b < 0 || a <= b) throw Error(ErrorKind::invariant_violation, "no family member for " + s0.str());
  return {a, b};
}

struct Realization {
  long a = 0, b = 0;
  bool verified = false;
};

/// realize_pole checked against the zeta function of the principalization.
inline Realization realize_and_verify(const Rational& s0, int max_steps = kDefaultMaxBlowups) {
  auto [a, b] = realize_pole(s0);
  const auto res = principalize(build(a, b), max_steps);
  const auto poles = poles_of(local_zeta(res.diagram));
  const bool hit = std::any_of(poles.begin(), poles.end(), [&](const Pole& p) { return p.location == s0; });
  return {a, b, hit};
}

}  // namespace zp::family
