#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "zp/blowup.hpp"
#include "zp/diagram.hpp"
#include "zp/error.hpp"

namespace zp {

inline constexpr int kDefaultMaxBlowups = 512;

struct BadPoint {
  PointRecord point;
  std::string chart_name;
  std::string reason;
};

/// Every point over the origin where the total transform is not yet a
/// normal crossings monomial, ordered by chart path then coordinates.
inline std::vector<BadPoint> find_bad_points(const ChartState& st) {
  std::vector<BadPoint> out;
  if (st.events.empty()) {
    const PointRecord o{0, Rational(0), Rational(0)};
    if (auto why = st.point_defect(o); !why.empty()) out.push_back({o, st.root().name(), why});
    return out;
  }
  for (int e = 0; e < static_cast<int>(st.events.size()); ++e) {
    const BlowupEvent& ev = st.events[static_cast<std::size_t>(e)];
    const CurveScan& sc = st.scan(e);
    const auto kids = st.children_on_line(e);
    if (sc.irrational.degree() > 0)
      throw Error(ErrorKind::center_not_rational,
                  "E" + std::to_string(e + 1) + " has bad points at the roots of " + sc.irrational.str("t") +
                      " (t is the coordinate on E" + std::to_string(e + 1) + " in chart " +
                      st.charts[static_cast<std::size_t>(ev.chart1)].name() + ")");
    for (auto& t : sc.bad_line) {
      if (std::find(kids.begin(), kids.end(), t) != kids.end()) continue;
      const PointRecord p{ev.chart1, Rational(0), t};
      out.push_back({p, st.charts[static_cast<std::size_t>(ev.chart1)].name(), st.point_defect(p)});
    }
    if (sc.bad_infinity && !st.child_at_infinity(e)) {
      const PointRecord p{ev.chart2, Rational(0), Rational(0)};
      out.push_back({p, st.charts[static_cast<std::size_t>(ev.chart2)].name(), st.point_defect(p)});
    }
  }
  std::sort(out.begin(), out.end(), [&](const BadPoint& a, const BadPoint& b) {
    const auto& pa = st.charts[static_cast<std::size_t>(a.point.chart)].path;
    const auto& pb = st.charts[static_cast<std::size_t>(b.point.chart)].path;
    if (pa != pb) return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    if (a.point.u != b.point.u) return a.point.u < b.point.u;
    return a.point.v < b.point.v;
  });
  return out;
}

/// Builds the dual graph of the current state. Strict branches are the
/// analytic branches of the squarefree parts of h, found as simple zeros
/// of their strict transforms on each exceptional curve.
inline IntersectionDiagram build_diagram(const ChartState& st) {
  IntersectionDiagram d;
  d.minimal = std::all_of(st.events.begin(), st.events.end(), [](const BlowupEvent& e) { return e.was_bad; });
  int sid = 0;
  if (st.events.empty()) {
    d.origin_case = true;
    for (auto& f : st.root().strict) {
      const auto m = f.equation.order().value_or(0);
      for (int i = 0; i < m; ++i) d.vertices.push_back({++sid, DivisorKind::strict_branch, f.exponent, 1, 0});
    }
    if (d.vertices.size() == 2) d.edges.emplace_back(0, 1);
    if (d.vertices.empty() || d.vertices.size() > 2)
      throw Error(ErrorKind::invariant_violation, "origin case with " + std::to_string(d.vertices.size()) + " branches");
    return d;
  }
  d.vertices = st.exceptional;
  for (auto [a, b] : st.edges) d.edges.emplace_back(a, b);
  for (int e = 0; e < static_cast<int>(st.events.size()); ++e) {
    const BlowupEvent& ev = st.events[static_cast<std::size_t>(e)];
    const auto kids = st.children_on_line(e);
    for (auto& f : st.charts[static_cast<std::size_t>(ev.chart1)].strict) {
      UniPoly r = f.equation.restrict_x0();
      for (auto& t : kids) r = r.without_root(t);
      for (int i = 0, n = distinct_root_count(r); i < n; ++i) {
        d.vertices.push_back({++sid, DivisorKind::strict_branch, f.exponent, 1, 0});
        d.edges.emplace_back(ev.divisor, static_cast<int>(d.vertices.size()) - 1);
      }
    }
    if (st.child_at_infinity(e)) continue;
    for (auto& f : st.charts[static_cast<std::size_t>(ev.chart2)].strict) {
      if (!f.equation.constant_term().is_zero()) continue;
      d.vertices.push_back({++sid, DivisorKind::strict_branch, f.exponent, 1, 0});
      d.edges.emplace_back(ev.divisor, static_cast<int>(d.vertices.size()) - 1);
    }
  }
  d.canonicalize();
  return d;
}

struct PrincipalizationResult {
  ChartState state;
  IntersectionDiagram diagram;
  int step_count = 0;
  const std::vector<BlowupEvent>& log() const { return state.events; }
};

/// Blows up the first bad point until none remain.
inline void complete(ChartState& st, int max_steps = kDefaultMaxBlowups) {
  while (true) {
    auto bad = find_bad_points(st);
    if (bad.empty()) return;
    if (static_cast<int>(st.events.size()) >= max_steps)
      throw Error(ErrorKind::step_budget_exceeded,
                  "still " + std::to_string(bad.size()) + " bad points after " + std::to_string(max_steps) + " blow-ups");
    blow_up(st, bad.front().point);
  }
}

inline PrincipalizationResult finish(ChartState st) {
  PrincipalizationResult r;
  r.diagram = build_diagram(st);
  r.step_count = static_cast<int>(st.events.size());
  r.state = std::move(st);
  return r;
}

inline PrincipalizationResult principalize(const std::vector<BiPoly>& gens, int max_steps = kDefaultMaxBlowups) {
  if (max_steps < 1) throw Error(ErrorKind::invalid_argument, "max_steps must be positive");
  ChartState st = initial_state(gens);
  complete(st, max_steps);
  return finish(std::move(st));
}

/// Variant that works through bad points from the back of the list;
/// used to test that the order of centers does not matter.
inline PrincipalizationResult principalize_reverse(const std::vector<BiPoly>& gens, int max_steps = kDefaultMaxBlowups) {
  ChartState st = initial_state(gens);
  while (true) {
    auto bad = find_bad_points(st);
    if (bad.empty()) break;
    if (static_cast<int>(st.events.size()) >= max_steps) throw Error(ErrorKind::step_budget_exceeded, "budget exhausted");
    blow_up(st, bad.back().point);
  }
  return finish(std::move(st));
}

/// Steps whose center was not bad when blown up.
inline ValidationReport verify_minimality(const ChartState& st) {
  ValidationReport rep{"minimality", {}};
  for (auto& e : st.events)
    if (!e.was_bad)
      rep.failures.push_back("step " + std::to_string(e.step) + " blew up a point that was already normal crossings");
  return rep;
}

/// Points of a completed principalization where one more blow-up keeps the
/// total transform normal crossings: double points of the exceptional
/// locus first, then a few good points on exceptional curves.
inline std::vector<PointRecord> allowed_extra_centers(const ChartState& st, std::size_t limit = 8) {
  std::vector<PointRecord> out;
  for (int e = 0; e < static_cast<int>(st.events.size()) && out.size() < limit; ++e) {
    const BlowupEvent& ev = st.events[static_cast<std::size_t>(e)];
    const Chart& c1 = st.charts[static_cast<std::size_t>(ev.chart1)];
    const Chart& c2 = st.charts[static_cast<std::size_t>(ev.chart2)];
    const PointRecord o1{ev.chart1, Rational(0), Rational(0)}, o2{ev.chart2, Rational(0), Rational(0)};
    if (c1.axis[1] >= 0 && !st.is_blown_up(o1) && st.point_defect(o1).empty()) out.push_back(o1);
    if (c2.axis[0] >= 0 && !st.is_blown_up(o2) && st.point_defect(o2).empty()) out.push_back(o2);
  }
  for (int e = 0; e < static_cast<int>(st.events.size()) && out.size() < limit; ++e) {
    const BlowupEvent& ev = st.events[static_cast<std::size_t>(e)];
    for (long t = 1; t <= 16; ++t) {
      const PointRecord p{ev.chart1, Rational(0), Rational(t)};
      if (!st.is_blown_up(p) && st.point_defect(p).empty()) {
        out.push_back(p);
        break;
      }
    }
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

}  // namespace zp
