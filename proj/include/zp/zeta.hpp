#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zp/diagram.hpp"
#include "zp/error.hpp"
#include "zp/ratfunc.hpp"

namespace zp {

/// The term list of the zeta function: one term per exceptional curve
/// with its Euler characteristic, one per intersection point.
inline std::vector<ZetaTerm> zeta_terms(const IntersectionDiagram& d) {
  std::vector<ZetaTerm> terms;
  const int n = static_cast<int>(d.vertices.size());
  if (n == 0) throw Error(ErrorKind::malformed_diagram, "empty diagram");
  for (auto [a, b] : d.edges)
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw Error(ErrorKind::malformed_diagram, "bad edge");
  if (d.origin_case) {
    if (n > 2 || d.edges.size() != static_cast<std::size_t>(n - 1) ||
        std::any_of(d.vertices.begin(), d.vertices.end(), [](auto& v) { return v.kind != DivisorKind::strict_branch; }))
      throw Error(ErrorKind::malformed_diagram, "origin case needs one branch or two crossing branches");
    ZetaTerm t{Rational(1), {}};
    for (auto& v : d.vertices) t.factors.emplace_back(v.nu, v.N);
    terms.push_back(t);
    return terms;
  }
  for (int v = 0; v < n; ++v) {
    if (!d.is_exceptional(v)) continue;
    const int chi = 2 - d.degree(v);
    if (chi != 0) terms.push_back({Rational(chi), {{d.at(v).nu, d.at(v).N}}});
  }
  for (auto [a, b] : d.edges) terms.push_back({Rational(1), {{d.at(a).nu, d.at(a).N}, {d.at(b).nu, d.at(b).N}}});
  return terms;
}

inline RationalFunctionS local_zeta(const IntersectionDiagram& d) { return rf_sum_of_terms(zeta_terms(d)); }

/// Candidate poles -nu/N, ascending and distinct.
inline std::vector<Rational> candidate_poles(const IntersectionDiagram& d) {
  std::set<Rational> s;
  for (auto& v : d.vertices) s.insert(Rational(-v.nu, v.N));
  return {s.begin(), s.end()};
}

/// Contribution of vertex v to the residue at s0 = -nu_v/N_v, assuming a
/// pole of order at most one there.
inline Rational residue_contribution(const IntersectionDiagram& d, int v, const Rational& s0) {
  if (v < 0 || v >= static_cast<int>(d.vertices.size())) throw Error(ErrorKind::invalid_argument, "no such vertex");
  if (Rational(-d.at(v).nu, d.at(v).N) != s0)
    throw Error(ErrorKind::not_a_candidate, d.at(v).name() + " does not attain " + s0.str());
  const auto row = alpha_row(d, v);
  Rational sum(0);
  for (auto& [w, a] : row) {
    if (a.is_zero())
      throw Error(ErrorKind::order_two_candidate, s0.str() + " is shared by adjacent " + d.at(v).name() + " and " + d.at(w).name());
    sum += a.inverse();
  }
  const Rational N(d.at(v).N);
  if (d.is_exceptional(v)) return (Rational(2 - static_cast<long>(row.size())) + sum) / N;
  const Rational base = (d.origin_case && row.empty()) ? Rational(1) : Rational(0);
  return (base + sum) / N;
}

struct Contribution {
  int vertex;
  Rational value;
};

struct CandidateReport {
  Rational s0;
  bool order_two = false;  // two adjacent vertices attain it
  std::vector<Contribution> contributions;
  Rational total;
};

struct ZetaReport {
  std::vector<ZetaTerm> terms;
  RationalFunctionS zeta;
  std::vector<Rational> candidates;
  std::vector<Pole> poles;
  std::vector<CandidateReport> per_candidate;
};

inline ZetaReport pole_report(const IntersectionDiagram& d) {
  ZetaReport r;
  r.terms = zeta_terms(d);
  r.zeta = rf_sum_of_terms(r.terms);
  r.candidates = candidate_poles(d);
  r.poles = poles_of(r.zeta);
  for (auto& s0 : r.candidates) {
    CandidateReport c{s0, false, {}, Rational(0)};
    for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
      if (Rational(-d.at(v).nu, d.at(v).N) != s0) continue;
      for (int w : d.neighbors(v))
        if (d.ratio(w) == d.ratio(v)) c.order_two = true;
    }
    if (!c.order_two) {
      for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
        if (Rational(-d.at(v).nu, d.at(v).N) != s0) continue;
        Rational val = residue_contribution(d, v, s0);
        c.total += val;
        c.contributions.push_back({v, val});
      }
    }
    r.per_candidate.push_back(std::move(c));
  }
  return r;
}

inline nlohmann::ordered_json zeta_report_json(const ZetaReport& r) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json z;
  z["num"] = nlohmann::ordered_json::array();
  for (auto& c : r.zeta.numerator().coeffs()) z["num"].push_back(c.str());
  z["den"] = nlohmann::ordered_json::array();
  for (auto& f : r.zeta.denominator()) z["den"].push_back({f.nu, f.N, f.mult});
  z["text"] = r.zeta.str();
  j["zeta"] = z;
  j["candidates"] = nlohmann::ordered_json::array();
  for (auto& c : r.candidates) j["candidates"].push_back(c.str());
  j["poles"] = nlohmann::ordered_json::array();
  for (auto& p : r.poles) {
    nlohmann::ordered_json o;
    o["s"] = p.location.str();
    o["order"] = p.order;
    o["leading"] = p.leading.str();
    j["poles"].push_back(o);
  }
  return j;
}

}  // namespace zp
