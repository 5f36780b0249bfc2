#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zp/blowup.hpp"
#include "zp/diagram.hpp"
#include "zp/error.hpp"
#include "zp/principalize.hpp"

namespace zp {

inline constexpr int kLambdaRetries = 16;

/// Attempt 0 is all ones; later attempts draw nonzero integers in [-9, 9]
/// from a generator seeded by (seed, attempt).
inline std::vector<Rational> sample_lambda(int l, std::uint64_t seed, int attempt) {
  if (l < 1) throw Error(ErrorKind::invalid_argument, "need at least one generator");
  std::vector<Rational> lam(static_cast<std::size_t>(l), Rational(1));
  if (attempt == 0) return lam;
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt));
  do {
    for (auto& x : lam) {
      long v = 0;
      while (v == 0) v = static_cast<long>(rng() % 19) - 9;
      x = Rational(v);
    }
  } while (std::all_of(lam.begin(), lam.end(), [](const Rational& r) { return r.is_one(); }));
  return lam;
}

inline BiPoly combine(const std::vector<BiPoly>& polys, const std::vector<Rational>& lambda) {
  if (polys.size() != lambda.size()) throw Error(ErrorKind::invalid_argument, "lambda has the wrong length");
  BiPoly g;
  for (std::size_t i = 0; i < polys.size(); ++i) g += polys[i].scaled(lambda[i]);
  return g;
}

struct MinPropertyRow {
  std::string divisor;
  long generic_order = 0;
  long min_order = 0;
  bool pass() const { return generic_order == min_order; }
};

namespace detail {

inline long power_dividing(BiPoly g, const BiPoly& p) {
  long k = 0;
  while (!g.is_zero()) {
    auto q = divide_exact(g, p);
    if (!q) break;
    g = std::move(*q);
    ++k;
  }
  return k;
}

inline void require_nonzero(const std::vector<Rational>& lambda) {
  for (auto& x : lambda)
    if (x.is_zero()) throw Error(ErrorKind::degenerate_lambda, "lambda has a zero coefficient");
}

}  // namespace detail

/// Order of the generic member along each divisor against the minimum over
/// the generators. Strict components are compared through the power of
/// their squarefree part dividing each polynomial.
inline std::vector<MinPropertyRow> verify_min_property(const ChartState& st, const std::vector<Rational>& lambda) {
  detail::require_nonzero(lambda);
  const BiPoly g = combine(st.generators, lambda);
  if (g.is_zero()) throw Error(ErrorKind::degenerate_lambda, "generic member vanishes identically");
  std::vector<MinPropertyRow> rows;
  for (int d = 0; d < static_cast<int>(st.exceptional.size()); ++d) {
    MinPropertyRow r{st.exceptional[static_cast<std::size_t>(d)].name(), divisor_order_of(st, g, d), -1};
    for (auto& f : st.generators) {
      if (f.is_zero()) continue;
      const long o = divisor_order_of(st, f, d);
      r.min_order = r.min_order < 0 ? o : std::min(r.min_order, o);
    }
    rows.push_back(r);
  }
  int sid = 0;
  for (auto& part : st.h_parts) {
    if (!part.part.constant_term().is_zero()) continue;
    MinPropertyRow r{"h-part " + std::to_string(++sid), detail::power_dividing(g, part.part), -1};
    for (auto& f : st.generators) {
      if (f.is_zero()) continue;
      const long o = detail::power_dividing(f, part.part);
      r.min_order = r.min_order < 0 ? o : std::min(r.min_order, o);
    }
    rows.push_back(r);
  }
  return rows;
}

/// Restriction of sum coeffs_i * residual_i to exceptional divisor d in
/// every chart where d is a coordinate axis.
inline std::vector<Restriction> restrict_residual_to(const ChartState& st, int d, const std::vector<Rational>& coeffs) {
  if (d < 0 || d >= static_cast<int>(st.exceptional.size()))
    throw Error(ErrorKind::invalid_argument, "no exceptional divisor E" + std::to_string(d + 1));
  if (!find_bad_points(st).empty())
    throw Error(ErrorKind::residual_not_unit, "principalization is not complete");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); }))
    throw Error(ErrorKind::degenerate_lambda, "all coefficients are zero");
  std::vector<Restriction> out;
  for (auto [chart, axis] : charts_seeing(st, d)) {
    const Chart& c = st.charts[static_cast<std::size_t>(chart)];
    const BiPoly comb = combine(c.residual, coeffs);
    Restriction r;
    r.chart = chart;
    r.chart_name = c.name();
    r.axis = axis;
    r.leaf = is_leaf(st, chart);
    r.poly = axis == 0 ? comb.restrict_x0() : comb.restrict_y0();
    r.to_birth = c.axis_param[static_cast<std::size_t>(axis)];
    out.push_back(std::move(r));
  }
  return out;
}

/// Number of points where the strict transform of the generic member of
/// the residual ideal meets exceptional divisor d. Throws DegenerateLambda
/// when lambda is visibly special (zero through a diagram point, tangency).
inline int count_n(const ChartState& st, const std::vector<Rational>& lambda, int d) {
  detail::require_nonzero(lambda);
  const BlowupEvent& ev = st.events[static_cast<std::size_t>(d)];
  const Chart& c1 = st.charts[static_cast<std::size_t>(ev.chart1)];
  auto degenerate = [&](const std::string& why) {
    return Error(ErrorKind::degenerate_lambda, "E" + std::to_string(d + 1) + ": " + why);
  };
  UniPoly r = combine(c1.residual, lambda).restrict_x0();
  if (r.is_zero()) throw degenerate("combination vanishes on the curve");
  UniPoly base;
  for (auto& g : c1.residual) base = gcd(base, g.restrict_x0());
  for (auto& t : st.children_on_line(d)) {
    if (!base.is_zero() && base.eval(t).is_zero()) r = r.without_root(t);
    else if (r.eval(t).is_zero()) throw degenerate("passes through a blown-up point that is not a base point");
  }
  if (c1.axis[1] >= 0 && r.eval(Rational(0)).is_zero()) throw degenerate("passes through a double point");
  const UniPoly s = ChartState::strict_product(c1).restrict_x0();
  if (s.degree() > 0 && gcd(r, s).degree() > 0) throw degenerate("meets a strict branch on the curve");
  if (!is_squarefree(r)) throw degenerate("tangent to the curve");
  int n = r.degree();
  const PointRecord o2{ev.chart2, Rational(0), Rational(0)};
  if (!st.is_blown_up(o2)) {
    const Chart& c2 = st.charts[static_cast<std::size_t>(ev.chart2)];
    const BiPoly r2 = combine(c2.residual, lambda);
    if (r2.constant_term().is_zero()) {
      if (c2.axis[0] >= 0) throw degenerate("passes through a double point");
      if (ChartState::strict_product(c2).constant_term().is_zero()) throw degenerate("meets a strict branch");
      const UniPoly along = r2.restrict_y0();
      if (along.is_zero() || along.root_multiplicity(Rational(0)) != 1) throw degenerate("tangent to the curve");
      ++n;
    }
  }
  return n;
}

struct RelationRow {
  std::string divisor;
  long N = 0, nu = 0;
  int m = 0, n = 0;
  Rational alpha_sum;
  Rational count_rhs;    // m - 2 + nu n / N
  Rational form_lhs;   // sum alpha + n (1 - nu/N)
  Rational form_rhs;   // m + n - 2
  bool pass() const { return alpha_sum == count_rhs && form_lhs == form_rhs; }
};

struct GenericCheckReport {
  std::vector<Rational> lambda;
  int retries = 0;
  std::vector<MinPropertyRow> min_rows;
  std::vector<RelationRow> relations;
  bool pass() const {
    return std::all_of(min_rows.begin(), min_rows.end(), [](auto& r) { return r.pass(); }) &&
           std::all_of(relations.begin(), relations.end(), [](auto& r) { return r.pass(); });
  }
};

/// Both forms of the alpha relation for every exceptional curve, with n
/// counted for the given lambda.
inline std::vector<RelationRow> verify_relations(const ChartState& st, const IntersectionDiagram& d,
                                                 const std::vector<Rational>& lambda) {
  std::vector<RelationRow> rows;
  for (int e = 0; e < static_cast<int>(st.exceptional.size()); ++e) {
    const int v = d.index_of(st.exceptional[static_cast<std::size_t>(e)].name());
    if (v < 0) throw Error(ErrorKind::invariant_violation, "diagram lacks " + st.exceptional[static_cast<std::size_t>(e)].name());
    RelationRow r;
    r.divisor = d.at(v).name();
    r.N = d.at(v).N;
    r.nu = d.at(v).nu;
    r.m = d.degree(v);
    r.n = count_n(st, lambda, e);
    for (auto& [w, a] : alpha_row(d, v)) r.alpha_sum += a;
    const Rational ratio(r.nu, r.N);
    r.count_rhs = Rational(r.m - 2) + ratio * Rational(r.n);
    r.form_lhs = r.alpha_sum + Rational(r.n) * (Rational(1) - ratio);
    r.form_rhs = Rational(r.m + r.n - 2);
    rows.push_back(r);
  }
  return rows;
}

/// Samples lambda until it certifies as generic and runs every check.
inline GenericCheckReport generic_check(const PrincipalizationResult& res, std::uint64_t seed) {
  const int l = static_cast<int>(res.state.generators.size());
  std::string last;
  for (int attempt = 0; attempt < kLambdaRetries; ++attempt) {
    GenericCheckReport rep;
    rep.lambda = sample_lambda(l, seed, attempt);
    rep.retries = attempt;
    try {
      rep.min_rows = verify_min_property(res.state, rep.lambda);
      if (!std::all_of(rep.min_rows.begin(), rep.min_rows.end(), [](auto& r) { return r.pass(); })) {
        last = "minimum property fails";
        continue;
      }
      rep.relations = verify_relations(res.state, res.diagram, rep.lambda);
      return rep;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::degenerate_lambda) throw;
      last = e.what();
    }
  }
  throw Error(ErrorKind::retries_exhausted, "no generic lambda in " + std::to_string(kLambdaRetries) + " attempts: " + last);
}

}  // namespace zp
