#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "zp/diagram.hpp"
#include "zp/error.hpp"
#include "zp/zeta.hpp"

namespace zp {

struct ConditionHit {
  int condition = 0;  // 1..5
  int vertex = 0;
};

struct Verdict {
  Rational s0;
  bool is_pole = false;
  std::vector<ConditionHit> reasons;
};

/// Decides whether s0 is a pole from the diagram alone, collecting every
/// vertex attaining s0 that satisfies one of the five local conditions.
inline Verdict classify(const IntersectionDiagram& d, const Rational& s0, bool allow_non_minimal = false) {
  if (!d.minimal && !allow_non_minimal)
    throw Error(ErrorKind::not_minimal, "the criterion applies to the minimal principalization only");
  Verdict out{s0, false, {}};
  bool attained = false;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    if (Rational(-d.at(v).nu, d.at(v).N) != s0) continue;
    attained = true;
    if (!d.is_exceptional(v)) {
      out.reasons.push_back({1, v});
      continue;
    }
    const auto row = alpha_row(d, v);
    int cond = 0;
    if (row.empty()) cond = 2;
    else if (row.size() == 1 && row[0].second != Rational(-1)) cond = 3;
    else if (row.size() == 2 && !(row[0].second + row[1].second).is_zero()) cond = 4;
    else if (row.size() >= 3) cond = 5;
    if (cond) out.reasons.push_back({cond, v});
  }
  if (!attained) throw Error(ErrorKind::not_a_candidate, s0.str() + " is not a candidate pole");
  out.is_pole = !out.reasons.empty();
  return out;
}

/// All candidates that the criterion declares poles, ascending.
inline std::vector<Rational> poles_by_criterion(const IntersectionDiagram& d, bool allow_non_minimal = false) {
  std::vector<Rational> out;
  for (auto& s0 : candidate_poles(d))
    if (classify(d, s0, allow_non_minimal).is_pole) out.push_back(s0);
  return out;
}

struct CrossCheck {
  std::vector<Rational> by_criterion;
  std::vector<Rational> by_zeta;
  bool match() const { return by_criterion == by_zeta; }
  std::string dump() const {
    std::string s = "criterion {";
    for (std::size_t i = 0; i < by_criterion.size(); ++i) s += (i ? ", " : "") + by_criterion[i].str();
    s += "} zeta {";
    for (std::size_t i = 0; i < by_zeta.size(); ++i) s += (i ? ", " : "") + by_zeta[i].str();
    return s + "}";
  }
};

inline CrossCheck cross_check(const IntersectionDiagram& d) {
  CrossCheck c;
  c.by_criterion = poles_by_criterion(d);
  for (auto& p : poles_of(local_zeta(d))) c.by_zeta.push_back(p.location);
  return c;
}

}  // namespace zp
