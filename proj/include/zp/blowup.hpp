#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zp/bipoly.hpp"
#include "zp/error.hpp"
#include "zp/parse.hpp"
#include "zp/unipoly.hpp"

namespace zp {

enum class DivisorKind { exceptional, strict_branch };

inline std::string_view kind_str(DivisorKind k) {
  return k == DivisorKind::exceptional ? "exceptional" : "strict";
}

/// One component of the support of the total transform with its numerical
/// data (N, nu).
struct DivisorRecord {
  int id = 0;  // 1-based within its kind
  DivisorKind kind = DivisorKind::exceptional;
  long N = 0;
  long nu = 0;
  int birth_step = 0;  // 0 for strict branches

  std::string name() const { return (kind == DivisorKind::exceptional ? "E" : "S") + std::to_string(id); }
  friend bool operator==(const DivisorRecord&, const DivisorRecord&) = default;
};

/// Projective map w -> (a w + b) / (c w + d) from a chart-local parameter on
/// an exceptional curve to its birth parameter. nullopt is the point at
/// infinity, i.e. the origin of the second birth chart.
struct Mobius {
  Rational a{1}, b{0}, c{0}, d{1};

  static Mobius identity() { return {}; }
  static Mobius inversion() { return {Rational(0), Rational(1), Rational(1), Rational(0)}; }

  /// this o (w -> w + shift)
  Mobius after_shift(const Rational& shift) const { return {a, a * shift + b, c, c * shift + d}; }

  std::optional<Rational> apply(const Rational& w) const {
    Rational den = c * w + d;
    if (den.is_zero()) return std::nullopt;
    return (a * w + b) / den;
  }
  friend bool operator==(const Mobius&, const Mobius&) = default;
};

/// Step from a parent chart: blow up at (cu, cv) and take chart `choice`
/// (1: (u, u v), 2: (u v, v)) after translating the center to the origin.
struct PathStep {
  int choice = 1;
  Rational cu, cv;
  friend auto operator<=>(const PathStep& l, const PathStep& r) {
    if (auto c = l.choice <=> r.choice; c != 0) return c;
    if (auto c = l.cu <=> r.cu; c != 0) return c;
    return l.cv <=> r.cv;
  }
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

inline std::string path_name(const std::vector<PathStep>& path) {
  if (path.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(path[i].choice);
    if (!path[i].cu.is_zero() || !path[i].cv.is_zero()) s += "@(" + path[i].cu.str() + "," + path[i].cv.str() + ")";
  }
  return s;
}

/// Local equation of a visible component and its exponent in the total
/// transform.
struct ComponentFactor {
  int label = 0;  // exceptional divisor index, or squarefree multiplicity k for strict parts
  BiPoly equation;
  long exponent = 0;
};

/// An affine chart (u, v) of some intermediate surface. local_gens factor
/// exactly as prod exceptional^N * prod strict^k * residual.
struct Chart {
  int id = 0;
  int parent = -1;  // parent chart, -1 for the root
  int event = -1;   // blow-up event that produced it
  std::vector<PathStep> path;
  BiPoly x_of, y_of;  // base coordinates in terms of (u, v)
  std::vector<BiPoly> local_gens;
  std::vector<ComponentFactor> exceptional;
  std::vector<ComponentFactor> strict;
  std::vector<BiPoly> residual;
  /// Exceptional divisor on {u = 0} (index 0) and {v = 0} (index 1), or -1.
  std::array<int, 2> axis{-1, -1};
  /// Map from the axis parameter (v on {u=0}, u on {v=0}) to the birth parameter.
  std::array<Mobius, 2> axis_param{};

  std::string name() const { return path_name(path); }
};

/// A point in a chart, by rational coordinates.
struct PointRecord {
  int chart = 0;
  Rational u, v;
  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

/// One point blow-up.
struct BlowupEvent {
  int step = 0;  // 1-based
  PointRecord center;
  std::vector<int> through;  // exceptional divisors through the center
  int divisor = 0;           // index of the created exceptional divisor
  int chart1 = 0, chart2 = 0;
  long N = 0, nu = 0;
  int residual_order = 0;  // min multiplicity of the weak transforms at the center
  bool was_bad = true;     // center failed the normal crossings test when blown up
};

/// What an exceptional curve looks like from its birth charts: rational bad
/// points on the affine line of chart 1, an irrational locator if any, and
/// whether the chart-2 origin is bad.
struct CurveScan {
  std::vector<Rational> bad_line;
  UniPoly irrational;  // constant when every bad point is rational
  bool bad_infinity = false;
};

class ChartState {
 public:
  std::vector<BiPoly> generators;
  BiPoly h;  // gcd of the generators
  std::vector<SquarefreeFactor> h_parts;
  std::vector<BiPoly> f_prime;  // generators / h
  std::vector<DivisorRecord> strict_records;  // h parts through the origin
  std::vector<Chart> charts;
  std::vector<BlowupEvent> events;
  std::vector<DivisorRecord> exceptional;
  std::set<std::pair<int, int>> edges;  // exceptional index pairs, first < second

  const Chart& root() const { return charts.front(); }

  bool is_blown_up(const PointRecord& p) const {
    return std::any_of(events.begin(), events.end(), [&](const BlowupEvent& e) { return e.center == p; });
  }

  /// Birth parameters of children on the line of event e's chart 1.
  std::vector<Rational> children_on_line(int e) const {
    std::vector<Rational> out;
    const int c1 = events[static_cast<std::size_t>(e)].chart1;
    for (auto& ev : events)
      if (ev.center.chart == c1) out.push_back(ev.center.v);
    return out;
  }
  bool child_at_infinity(int e) const {
    return is_blown_up(PointRecord{events[static_cast<std::size_t>(e)].chart2, Rational(0), Rational(0)});
  }

  /// Product of the strict transforms of the squarefree parts of h.
  static BiPoly strict_product(const Chart& c) {
    BiPoly s(1);
    for (auto& f : c.strict) s *= f.equation;
    return s;
  }

  const CurveScan& scan(int e) const {
    if (scans_.size() < events.size()) scans_.resize(events.size());
    auto& slot = scans_[static_cast<std::size_t>(e)];
    if (!slot) slot = compute_scan(e);
    return *slot;
  }

  /// The event whose chart 1 or chart 2 is `chart`, with the chart number.
  std::pair<int, int> owner(int chart) const {
    const int ev = charts[static_cast<std::size_t>(chart)].event;
    if (ev < 0) return {-1, 0};
    return {ev, events[static_cast<std::size_t>(ev)].chart1 == chart ? 1 : 2};
  }

  /// Why the point is not simple normal crossings with a unit residual, or
  /// an empty string if it is fine.
  std::string point_defect(const PointRecord& p) const {
    const Chart& c = charts[static_cast<std::size_t>(p.chart)];
    std::vector<int> through;
    if (p.u.is_zero() && c.axis[0] >= 0) through.push_back(c.axis[0]);
    if (p.v.is_zero() && c.axis[1] >= 0) through.push_back(c.axis[1]);
    bool residual_unit = false;
    for (auto& r : c.residual)
      if (!r.is_zero() && !r.eval(p.u, p.v).is_zero()) residual_unit = true;
    if (!residual_unit) return "weak transform of the residual ideal vanishes";
    const BiPoly s = strict_product(c).translated(p.u, p.v);
    const int m = s.order().value_or(0);
    if (m == 0) return {};
    if (c.id == 0) {
      if (m == 1) return {};
      if (m == 2) {
        const BiPoly q = s.homogeneous_part(2);
        const Rational A = q.coeff(2, 0), B = q.coeff(1, 1), C = q.coeff(0, 2);
        if (!(B * B - Rational(4) * A * C).is_zero()) return {};
        return "strict transform has a double point with a single tangent";
      }
      return "strict transform has multiplicity " + std::to_string(m);
    }
    if (m >= 2) return "strict transform is singular or has several branches here";
    if (through.size() >= 2) return "strict transform passes through a double point of the exceptional locus";
    if (through.empty()) return {};
    const UniPoly along = (p.u.is_zero() && c.axis[0] >= 0) ? s.restrict_x0() : s.restrict_y0();
    if (along.root_multiplicity(Rational(0)) != 1) return "strict transform is tangent to the exceptional curve";
    return {};
  }

 private:
  CurveScan compute_scan(int e) const {
    const BlowupEvent& ev = events[static_cast<std::size_t>(e)];
    const Chart& c1 = charts[static_cast<std::size_t>(ev.chart1)];
    CurveScan out;
    UniPoly a;
    for (auto& r : c1.residual) a = gcd(a, r.restrict_x0());
    const UniPoly s = strict_product(c1).restrict_x0();
    UniPoly bad = squarefree_part(a.is_zero() ? UniPoly(1) : a);
    if (s.degree() > 0) bad = squarefree_part(bad * gcd(s, s.derivative()));
    std::vector<Rational> roots = bad.is_constant() ? std::vector<Rational>{} : rational_roots(bad);
    UniPoly rest = bad;
    for (auto& t : roots) rest = rest.without_root(t);
    out.irrational = rest.monic();
    if (c1.axis[1] >= 0 && s.degree() >= 0 && s.eval(Rational(0)).is_zero()) roots.push_back(Rational(0));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    out.bad_line = std::move(roots);
    out.bad_infinity = !point_defect(PointRecord{ev.chart2, Rational(0), Rational(0)}).empty();
    return out;
  }

  mutable std::vector<std::optional<CurveScan>> scans_;
};

/// Root chart for the ideal: extracts h = gcd, splits it into squarefree
/// parts and records the parts through the origin as strict components.
inline ChartState initial_state(const std::vector<BiPoly>& gens) {
  if (gens.empty() || std::all_of(gens.begin(), gens.end(), [](const BiPoly& g) { return g.is_zero(); }))
    throw Error(ErrorKind::all_zero, "the ideal has no nonzero generator");
  for (auto& g : gens) {
    if (!g.constant_term().is_zero())
      throw Error(ErrorKind::support_misses_origin, "generator " + g.str() + " does not vanish at the origin");
  }
  ChartState st;
  st.generators = gens;
  st.h = gcd_bi(gens);
  st.h_parts = squarefree_decomposition(st.h);
  BiPoly hh(1);
  for (auto& part : st.h_parts) hh *= part.part.pow(part.multiplicity);
  for (auto& g : gens) st.f_prime.push_back(g / hh);

  Chart root;
  root.x_of = BiPoly::x();
  root.y_of = BiPoly::y();
  root.local_gens = gens;
  root.residual = st.f_prime;
  int sid = 0;
  for (auto& part : st.h_parts) {
    root.strict.push_back({part.multiplicity, part.part, part.multiplicity});
    if (part.part.constant_term().is_zero())
      st.strict_records.push_back({++sid, DivisorKind::strict_branch, part.multiplicity, 1, 0});
  }
  st.charts.push_back(std::move(root));
  return st;
}

namespace detail {

inline BiPoly strict_transform(const BiPoly& translated, int choice, const BiPoly& X, const BiPoly& Y, int m) {
  BiPoly sub = translated.substitute(X, Y);
  return choice == 1 ? sub.shifted_down(m, 0) : sub.shifted_down(0, m);
}

/// Moves a center to the chart that owns it, or throws.
inline PointRecord canonical_center(const ChartState& st, PointRecord p) {
  if (p.chart < 0 || p.chart >= static_cast<int>(st.charts.size()))
    throw Error(ErrorKind::invalid_center, "no chart with id " + std::to_string(p.chart));
  const Chart& c = st.charts[static_cast<std::size_t>(p.chart)];
  auto where = "(" + p.u.str() + "," + p.v.str() + ") in chart " + c.name();
  if (c.id == 0) {
    if (!p.u.is_zero() || !p.v.is_zero()) throw Error(ErrorKind::center_not_over_origin, where);
    return p;
  }
  auto [ev, which] = st.owner(p.chart);
  const BlowupEvent& e = st.events[static_cast<std::size_t>(ev)];
  if (which == 1) {
    if (p.u.is_zero()) return p;
    if (p.v.is_zero() && c.axis[1] >= 0)
      throw Error(ErrorKind::invalid_center, where + " lies on E" + std::to_string(c.axis[1] + 1) +
                                                 " away from the chart's own curve; address it in its own chart");
    throw Error(ErrorKind::center_not_over_origin, where);
  }
  if (p.u.is_zero() && p.v.is_zero()) return p;
  if (p.v.is_zero()) return PointRecord{e.chart1, Rational(0), p.u.inverse()};
  if (p.u.is_zero() && c.axis[0] >= 0)
    throw Error(ErrorKind::invalid_center, where + " lies on E" + std::to_string(c.axis[0] + 1) +
                                               " away from the chart's own curve; address it in its own chart");
  throw Error(ErrorKind::center_not_over_origin, where);
}

}  // namespace detail

/// Blows up one point in place and returns the new event index. The center
/// may be any point of the exceptional locus (or the base origin), given in
/// the chart that owns it; chart-2 points off the origin are redirected.
inline int blow_up(ChartState& st, PointRecord center) {
  center = detail::canonical_center(st, center);
  if (st.events.empty() && center.chart != 0)
    throw Error(ErrorKind::center_not_over_origin, "first blow-up must be at the base origin");
  if (st.is_blown_up(center))
    throw Error(ErrorKind::invalid_center, "(" + center.u.str() + "," + center.v.str() + ") in chart " +
                                               st.charts[static_cast<std::size_t>(center.chart)].name() +
                                               " was already blown up");
  const Chart parent = st.charts[static_cast<std::size_t>(center.chart)];
  const Rational& p = center.u;
  const Rational& q = center.v;

  BlowupEvent ev;
  ev.step = static_cast<int>(st.events.size()) + 1;
  ev.center = center;
  ev.was_bad = !st.point_defect(center).empty();
  if (p.is_zero() && parent.axis[0] >= 0) ev.through.push_back(parent.axis[0]);
  if (q.is_zero() && parent.axis[1] >= 0) ev.through.push_back(parent.axis[1]);
  ev.divisor = static_cast<int>(st.exceptional.size());

  // Translate everything so the center is the origin.
  auto tr = [&](const BiPoly& f) { return f.translated(p, q); };
  std::vector<BiPoly> t_exc, t_strict, t_res, t_gens;
  std::vector<int> m_exc, m_strict, m_res;
  long N = 0;
  for (auto& f : parent.exceptional) {
    t_exc.push_back(tr(f.equation));
    m_exc.push_back(t_exc.back().order().value_or(0));
    N += f.exponent * m_exc.back();
  }
  for (auto& f : parent.strict) {
    t_strict.push_back(tr(f.equation));
    m_strict.push_back(t_strict.back().order().value_or(0));
    N += f.exponent * m_strict.back();
  }
  int res_min = -1;
  for (auto& r : parent.residual) {
    t_res.push_back(tr(r));
    const auto m = t_res.back().order();
    m_res.push_back(m.value_or(0));
    if (m) res_min = res_min < 0 ? *m : std::min(res_min, *m);
  }
  if (res_min < 0) res_min = 0;
  N += res_min;
  long N_direct = -1;
  for (auto& g : parent.local_gens) {
    t_gens.push_back(tr(g));
    if (auto m = t_gens.back().order()) N_direct = N_direct < 0 ? *m : std::min<long>(N_direct, *m);
  }
  if (N != N_direct)
    throw Error(ErrorKind::invariant_violation,
                "N additivity failed: " + std::to_string(N) + " vs " + std::to_string(N_direct));
  long nu = 2;
  for (int d : ev.through) nu += st.exceptional[static_cast<std::size_t>(d)].nu - 1;
  ev.N = N;
  ev.nu = nu;
  ev.residual_order = res_min;
  const BiPoly tx = tr(parent.x_of), ty = tr(parent.y_of);

  for (int choice = 1; choice <= 2; ++choice) {
    const BiPoly X = choice == 1 ? BiPoly::x() : BiPoly::x() * BiPoly::y();
    const BiPoly Y = choice == 1 ? BiPoly::x() * BiPoly::y() : BiPoly::y();
    Chart c;
    c.id = static_cast<int>(st.charts.size());
    c.parent = parent.id;
    c.event = static_cast<int>(st.events.size());
    c.path = parent.path;
    c.path.push_back({choice, p, q});
    c.x_of = tx.substitute(X, Y);
    c.y_of = ty.substitute(X, Y);
    for (auto& g : t_gens) c.local_gens.push_back(g.substitute(X, Y));
    for (std::size_t i = 0; i < t_exc.size(); ++i) {
      BiPoly eq = detail::strict_transform(t_exc[i], choice, X, Y, m_exc[i]);
      if (eq == BiPoly(1)) continue;
      c.exceptional.push_back({parent.exceptional[i].label, std::move(eq), parent.exceptional[i].exponent});
    }
    for (std::size_t i = 0; i < t_strict.size(); ++i) {
      BiPoly eq = detail::strict_transform(t_strict[i], choice, X, Y, m_strict[i]);
      if (eq == BiPoly(1)) continue;
      c.strict.push_back({parent.strict[i].label, std::move(eq), parent.strict[i].exponent});
    }
    for (auto& r : t_res) c.residual.push_back(r.is_zero() ? r : detail::strict_transform(r, choice, X, Y, res_min));
    c.exceptional.push_back({ev.divisor, choice == 1 ? BiPoly::x() : BiPoly::y(), N});
    if (choice == 1) {
      c.axis = {ev.divisor, q.is_zero() ? parent.axis[1] : -1};
      c.axis_param = {Mobius::identity(), parent.axis_param[1].after_shift(p)};
      ev.chart1 = c.id;
    } else {
      c.axis = {p.is_zero() ? parent.axis[0] : -1, ev.divisor};
      c.axis_param = {parent.axis_param[0].after_shift(q), Mobius::inversion()};
      ev.chart2 = c.id;
    }
    st.charts.push_back(std::move(c));
  }

  st.exceptional.push_back({ev.divisor + 1, DivisorKind::exceptional, N, nu, ev.step});
  for (int d : ev.through) st.edges.insert({std::min(d, ev.divisor), std::max(d, ev.divisor)});
  if (ev.through.size() == 2)
    st.edges.erase({std::min(ev.through[0], ev.through[1]), std::max(ev.through[0], ev.through[1])});
  st.events.push_back(std::move(ev));
  return static_cast<int>(st.events.size()) - 1;
}

/// Value-returning form.
inline ChartState blown_up(ChartState st, const PointRecord& center) {
  blow_up(st, center);
  return st;
}

/// Exponent of the axis equation in the pullback of g to the given chart.
inline int order_along_axis(const ChartState& st, const BiPoly& g, int chart, int axis) {
  if (g.is_zero()) throw Error(ErrorKind::invalid_argument, "order of the zero polynomial");
  const Chart& c = st.charts[static_cast<std::size_t>(chart)];
  const BiPoly pulled = g.substitute(c.x_of, c.y_of);
  return axis == 0 ? pulled.x_order() : pulled.y_order();
}

/// Exponent of exceptional divisor d (0-based) in the pullback of g,
/// read off in d's first birth chart.
inline int divisor_order_of(const ChartState& st, const BiPoly& g, int d) {
  if (d < 0 || d >= static_cast<int>(st.exceptional.size()))
    throw Error(ErrorKind::invalid_argument, "no exceptional divisor E" + std::to_string(d + 1));
  return order_along_axis(st, g, st.events[static_cast<std::size_t>(d)].chart1, 0);
}

/// Every (chart, axis) in which exceptional divisor d is a coordinate axis.
inline std::vector<std::pair<int, int>> charts_seeing(const ChartState& st, int d) {
  std::vector<std::pair<int, int>> out;
  for (auto& c : st.charts)
    for (int a = 0; a < 2; ++a)
      if (c.axis[static_cast<std::size_t>(a)] == d) out.emplace_back(c.id, a);
  return out;
}

/// Checks local_gens = prod(exceptional^N) * prod(strict^k) * residual in
/// every chart, plus the base-coordinate pullback. Returns an error message
/// or an empty string.
inline std::string check_factorization(const ChartState& st) {
  for (auto& c : st.charts) {
    BiPoly mono(1);
    for (auto& f : c.exceptional) mono *= f.equation.pow(static_cast<int>(f.exponent));
    for (auto& f : c.strict) mono *= f.equation.pow(static_cast<int>(f.exponent));
    for (std::size_t i = 0; i < c.local_gens.size(); ++i) {
      if (mono * c.residual[i] != c.local_gens[i])
        return "chart " + c.name() + ": generator " + std::to_string(i + 1) + " does not factor";
      if (st.generators[i].substitute(c.x_of, c.y_of) != c.local_gens[i])
        return "chart " + c.name() + ": generator " + std::to_string(i + 1) + " is not the pullback";
    }
    for (auto& r : c.residual) {
      if (r.is_zero()) continue;
      if (c.axis[0] >= 0 && r.x_order() > 0 && std::all_of(c.residual.begin(), c.residual.end(), [](const BiPoly& z) {
            return z.is_zero() || z.x_order() > 0;
          }))
        return "chart " + c.name() + ": residual has a common exceptional factor";
    }
  }
  return {};
}

/// Exponent of the exceptional axis in the Jacobian determinant of the
/// chart map; equals nu - 1.
inline int jacobian_order(const ChartState& st, int d) {
  const Chart& c = st.charts[static_cast<std::size_t>(st.events[static_cast<std::size_t>(d)].chart1)];
  BiPoly jac = c.x_of.dx() * c.y_of.dy() - c.x_of.dy() * c.y_of.dx();
  return jac.x_order();
}

/// Restriction of sum coeffs_i * residual_i to an exceptional divisor in one chart.
struct Restriction {
  int chart = 0;
  std::string chart_name;
  int axis = 0;  // 0: d = {u = 0}, parameter v; 1: d = {v = 0}, parameter u
  bool leaf = false;
  UniPoly poly;
  Mobius to_birth;
};

inline bool is_leaf(const ChartState& st, int chart) {
  return std::none_of(st.events.begin(), st.events.end(), [&](const BlowupEvent& e) { return e.center.chart == chart; });
}

}  // namespace zp
