#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zp/rational.hpp"
#include "zp/unipoly.hpp"

namespace zp {

/// Exponent pair (x-degree, y-degree).
struct Monomial {
  int a = 0;
  int b = 0;
  int degree() const { return a + b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y: total degree first, then x-degree.
inline bool grlex_less(const Monomial& m, const Monomial& n) {
  if (m.degree() != n.degree()) return m.degree() < n.degree();
  return m.a < n.a;
}

/// Sparse bivariate polynomial over the rationals. No zero coefficients are
/// stored and each exponent pair appears once.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  BiPoly() = default;
  BiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) t_.emplace(Monomial{0, 0}, c);
  }
  BiPoly(int c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly monomial(const Rational& c, int a, int b) {
    BiPoly p;
    if (!c.is_zero()) p.t_.emplace(Monomial{a, b}, c);
    return p;
  }
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  /// Lifts a univariate polynomial into x (var = 0) or y (var = 1).
  static BiPoly from_uni(const UniPoly& p, int var) {
    BiPoly r;
    for (int d = 0; d <= p.degree(); ++d) {
      const Rational c = p.coeff(d);
      if (!c.is_zero()) r.t_.emplace(var == 0 ? Monomial{d, 0} : Monomial{0, d}, c);
    }
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{0, 0}); }
  std::size_t size() const { return t_.size(); }

  Rational coeff(int a, int b) const {
    auto it = t_.find(Monomial{a, b});
    return it == t_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coeff(0, 0); }

  /// -1 for zero.
  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
  }
  int degree_x() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m.a);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m.b);
    return d;
  }
  /// Lowest total degree among the terms; nullopt for zero.
  std::optional<int> order() const {
    if (is_zero()) return std::nullopt;
    int d = t_.begin()->first.degree();
    for (auto& [m, c] : t_) d = std::min(d, m.degree());
    return d;
  }
  /// Largest k with x^k dividing; 0 for zero.
  int x_order() const {
    if (is_zero()) return 0;
    int k = t_.begin()->first.a;
    for (auto& [m, c] : t_) k = std::min(k, m.a);
    return k;
  }
  int y_order() const {
    if (is_zero()) return 0;
    int k = t_.begin()->first.b;
    for (auto& [m, c] : t_) k = std::min(k, m.b);
    return k;
  }
  /// Divides by x^i y^j; the caller guarantees divisibility.
  BiPoly shifted_down(int i, int j) const {
    BiPoly r;
    for (auto& [m, c] : t_) {
      if (m.a < i || m.b < j) throw Error(ErrorKind::invariant_violation, "monomial division not exact");
      r.t_.emplace(Monomial{m.a - i, m.b - j}, c);
    }
    return r;
  }
  BiPoly shifted_up(int i, int j) const {
    BiPoly r;
    for (auto& [m, c] : t_) r.t_.emplace(Monomial{m.a + i, m.b + j}, c);
    return r;
  }

  /// Leading term in graded lexicographic order.
  std::pair<Monomial, Rational> leading_term() const {
    if (is_zero()) throw Error(ErrorKind::invalid_argument, "leading term of zero");
    auto best = t_.begin();
    for (auto it = t_.begin(); it != t_.end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return *best;
  }
  /// Scaled so the graded-lex leading coefficient is 1.
  BiPoly normalized() const {
    if (is_zero()) return {};
    return scaled(leading_term().second.inverse());
  }
  /// Homogeneous component of the given total degree.
  BiPoly homogeneous_part(int d) const {
    BiPoly r;
    for (auto& [m, c] : t_)
      if (m.degree() == d) r.t_.emplace(m, c);
    return r;
  }

  BiPoly scaled(const Rational& k) const {
    if (k.is_zero()) return {};
    BiPoly r = *this;
    for (auto& [m, c] : r.t_) c *= k;
    return r;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) { return a.scaled(Rational(-1)); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (auto& [m, c] : a.t_)
      for (auto& [n, d] : b.t_) r.add_term(Monomial{m.a + n.a, m.b + n.b}, c * d);
    return r;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  BiPoly pow(int e) const {
    BiPoly r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  Rational eval(const Rational& xv, const Rational& yv) const {
    Rational acc(0);
    for (auto& [m, c] : t_) acc += c * zp::pow(xv, static_cast<unsigned long>(m.a)) * zp::pow(yv, static_cast<unsigned long>(m.b));
    return acc;
  }

  /// p(X, Y) for polynomials X, Y.
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const {
    std::vector<BiPoly> xp{BiPoly(1)}, yp{BiPoly(1)};
    auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
      return cache[static_cast<std::size_t>(e)];
    };
    BiPoly r;
    for (auto& [m, c] : t_) r += (power(xp, X, m.a) * power(yp, Y, m.b)).scaled(c);
    return r;
  }
  /// p(x + p, y + q).
  BiPoly translated(const Rational& px, const Rational& py) const {
    if (px.is_zero() && py.is_zero()) return *this;
    return substitute(x() + BiPoly(px), y() + BiPoly(py));
  }

  /// p(0, y) as a polynomial in y.
  UniPoly restrict_x0() const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_y() + 1)));
    for (auto& [m, v] : t_)
      if (m.a == 0) c[static_cast<std::size_t>(m.b)] = v;
    return UniPoly(std::move(c));
  }
  /// p(x, 0) as a polynomial in x.
  UniPoly restrict_y0() const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_x() + 1)));
    for (auto& [m, v] : t_)
      if (m.b == 0) c[static_cast<std::size_t>(m.a)] = v;
    return UniPoly(std::move(c));
  }

  BiPoly dx() const {
    BiPoly r;
    for (auto& [m, c] : t_)
      if (m.a > 0) r.add_term(Monomial{m.a - 1, m.b}, c * Rational(m.a));
    return r;
  }
  BiPoly dy() const {
    BiPoly r;
    for (auto& [m, c] : t_)
      if (m.b > 0) r.add_term(Monomial{m.a, m.b - 1}, c * Rational(m.b));
    return r;
  }

  /// Coefficients as a polynomial in y over Q[x], index = y-degree.
  std::vector<UniPoly> y_coeffs() const {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(std::max(0, degree_y() + 1)));
    for (auto& [m, c] : t_) {
      auto& row = rows[static_cast<std::size_t>(m.b)];
      if (static_cast<int>(row.size()) <= m.a) row.resize(static_cast<std::size_t>(m.a) + 1);
      row[static_cast<std::size_t>(m.a)] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
  }
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& cs) {
    BiPoly r;
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i <= cs[j].degree(); ++i) {
        Rational c = cs[j].coeff(i);
        if (!c.is_zero()) r.t_.emplace(Monomial{i, static_cast<int>(j)}, c);
      }
    return r;
  }

  /// Terms in descending graded-lex order, e.g. "x^7 + x*y^4".
  std::string str(const std::string& xn = "x", const std::string& yn = "y") const {
    if (is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](auto& l, auto& r) { return grlex_less(r.first, l.first); });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v) {
      const bool neg = c.sign() < 0;
      const Rational a = c.abs();
      if (first) { if (neg) os << "-"; }
      else os << (neg ? " - " : " + ");
      first = false;
      std::vector<std::string> factors;
      if (!a.is_one() || m.degree() == 0) factors.push_back(a.str());
      auto var = [&](const std::string& n, int e) {
        if (e == 1) factors.push_back(n);
        else if (e > 1) factors.push_back(n + "^" + std::to_string(e));
      };
      var(xn, m.a);
      var(yn, m.b);
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  Terms t_;
};

/// Lowest total degree of the Taylor expansion at (px, py); nullopt encodes
/// the infinite multiplicity of the zero polynomial.
inline std::optional<int> mult_at_point(const BiPoly& p, const Rational& px, const Rational& py) {
  if (p.is_zero()) return std::nullopt;
  return p.translated(px, py).order();
}

namespace detail {

/// Content of p viewed in Q[x][y]: monic gcd of its y-coefficients.
inline UniPoly y_content(const std::vector<UniPoly>& cs) {
  UniPoly g;
  for (auto& c : cs) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

inline std::vector<UniPoly> y_trim(std::vector<UniPoly> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

inline std::vector<UniPoly> y_primitive(const std::vector<UniPoly>& cs) {
  UniPoly c = y_content(cs);
  if (c.is_zero()) return {};
  std::vector<UniPoly> out;
  out.reserve(cs.size());
  for (auto& a : cs) out.push_back(a / c);
  return out;
}

/// Pseudo-remainder of a by b in Q[x][y].
inline std::vector<UniPoly> y_prem(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UniPoly& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int da = static_cast<int>(a.size()) - 1;
    const UniPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(da - db + j)] -= la * b[static_cast<std::size_t>(j)];
    a = y_trim(std::move(a));
  }
  return a;
}

}  // namespace detail

/// Exact quotient p / d, or nullopt when d does not divide p.
inline std::optional<BiPoly> divide_exact(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::invalid_argument, "division by the zero polynomial");
  if (p.is_zero()) return BiPoly();
  auto a = p.y_coeffs();
  const auto b = d.y_coeffs();
  const int db = static_cast<int>(b.size()) - 1;
  std::vector<UniPoly> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    if (da < db) return std::nullopt;
    auto [qc, r] = a.back().divmod(b.back());
    if (!r.is_zero()) return std::nullopt;
    q[static_cast<std::size_t>(da - db)] = qc;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(da - db + j)] -= qc * b[static_cast<std::size_t>(j)];
    a = detail::y_trim(std::move(a));
  }
  return BiPoly::from_y_coeffs(q);
}

/// Divides and throws if the division is not exact.
inline BiPoly operator/(const BiPoly& p, const BiPoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw Error(ErrorKind::invariant_violation, "inexact polynomial division");
  return *q;
}

/// Greatest common divisor by content/primitive-part recursion over Q[x][y],
/// normalized to graded-lex leading coefficient 1. gcd(0, 0) = 0.
inline BiPoly gcd_bi(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  auto pc = p.y_coeffs();
  auto qc = q.y_coeffs();
  UniPoly c = gcd(detail::y_content(pc), detail::y_content(qc));
  auto a = detail::y_primitive(pc);
  auto b = detail::y_primitive(qc);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto r = detail::y_prem(a, b);
    a = std::move(b);
    b = r.empty() ? r : detail::y_primitive(r);
  }
  auto g = detail::y_primitive(a);
  for (auto& coef : g) coef = coef * c;
  return BiPoly::from_y_coeffs(g).normalized();
}

inline BiPoly gcd_bi(const std::vector<BiPoly>& ps) {
  BiPoly g;
  for (auto& p : ps) g = gcd_bi(g, p);
  return g;
}

/// One squarefree piece: `part` is squarefree and appears to power `multiplicity`.
struct SquarefreeFactor {
  int multiplicity = 0;
  BiPoly part;
};

namespace detail {

inline std::vector<std::pair<int, UniPoly>> yun_uni(const UniPoly& f) {
  std::vector<std::pair<int, UniPoly>> out;
  if (f.degree() <= 0) return out;
  UniPoly a = gcd(f, f.derivative());
  UniPoly b = f / a;
  UniPoly c = f.derivative() / a;
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly g = gcd(b, d);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    if (g.degree() > 0) out.emplace_back(i, g.monic());
  }
  return out;
}

/// Yun's algorithm in y for a polynomial primitive in y.
inline std::vector<std::pair<int, BiPoly>> yun_primitive(const BiPoly& f) {
  std::vector<std::pair<int, BiPoly>> out;
  if (f.degree_y() <= 0) return out;
  BiPoly a = gcd_bi(f, f.dy());
  BiPoly b = f / a;
  BiPoly c = f.dy() / a;
  BiPoly d = c - b.dy();
  for (int i = 1; b.degree_y() > 0; ++i) {
    BiPoly g = gcd_bi(b, d);
    b = b / g;
    c = d / g;
    d = c - b.dy();
    if (!g.is_constant()) out.emplace_back(i, g);
  }
  return out;
}

}  // namespace detail

/// p = unit * prod part_k^k with parts squarefree and pairwise coprime,
/// ascending by multiplicity. Constants yield an empty list.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const BiPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "squarefree decomposition of zero");
  auto cs = p.y_coeffs();
  UniPoly cont = detail::y_content(cs);
  BiPoly prim = BiPoly::from_y_coeffs(detail::y_primitive(cs));
  std::map<int, BiPoly> by_mult;
  for (auto& [k, u] : detail::yun_uni(cont)) {
    auto& slot = by_mult[k];
    slot = slot.is_zero() ? BiPoly::from_uni(u, 0) : slot * BiPoly::from_uni(u, 0);
  }
  for (auto& [k, g] : detail::yun_primitive(prim)) {
    auto& slot = by_mult[k];
    slot = slot.is_zero() ? g : slot * g;
  }
  std::vector<SquarefreeFactor> out;
  for (auto& [k, part] : by_mult) out.push_back({k, part.normalized()});
  return out;
}

}  // namespace zp
