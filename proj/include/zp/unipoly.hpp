#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zp/rational.hpp"

namespace zp {

/// Dense univariate polynomial over the rationals, coefficients indexed by
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(constant);
  }
  UniPoly(int constant) : UniPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  /// The monomial coeff * t^degree.
  static UniPoly monomial(const Rational& coeff, int degree) {
    if (coeff.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return UniPoly(std::move(c));
  }
  /// t - root.
  static UniPoly linear_root(const Rational& root) { return UniPoly({-root, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int d) const {
    return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(d)] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) { return UniPoly() - a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly scaled(const Rational& k) const {
    if (k.is_zero()) return {};
    UniPoly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
  }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::invalid_argument, "polynomial division by zero");
    if (degree() < d.degree()) return {UniPoly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
    const Rational inv_lead = d.leading().inverse();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
      const auto top = static_cast<std::size_t>(k) + d.c_.size() - 1;
      Rational q = rem[top] * inv_lead;
      quo[static_cast<std::size_t>(k)] = q;
      if (q.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * d.c_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  UniPoly monic() const { return is_zero() ? UniPoly() : scaled(leading().inverse()); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

  /// p(a*t + b).
  UniPoly compose_affine(const Rational& a, const Rational& b) const {
    UniPoly lin({b, a});
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly(*it);
    return acc;
  }

  /// t^deg * p(1/t) for the given formal degree (>= degree()).
  UniPoly reversed(int formal_degree) const {
    std::vector<Rational> r(static_cast<std::size_t>(formal_degree) + 1);
    for (int i = 0; i <= degree(); ++i)
      r[static_cast<std::size_t>(formal_degree - i)] = c_[static_cast<std::size_t>(i)];
    return UniPoly(std::move(r));
  }

  /// Multiplicity of t as a root; 0 if p(t) != 0. Zero polynomial is an error.
  int root_multiplicity(const Rational& t) const {
    if (is_zero()) throw Error(ErrorKind::invalid_argument, "root multiplicity of the zero polynomial");
    int m = 0;
    UniPoly p = *this;
    const UniPoly lin = linear_root(t);
    while (true) {
      auto [q, r] = p.divmod(lin);
      if (!r.is_zero()) break;
      ++m;
      p = std::move(q);
    }
    return m;
  }

  /// Removes every factor (t - root).
  UniPoly without_root(const Rational& root) const {
    if (is_zero()) return {};
    UniPoly p = *this;
    const UniPoly lin = linear_root(root);
    while (true) {
      auto [q, r] = p.divmod(lin);
      if (!r.is_zero()) return p;
      p = std::move(q);
    }
  }

  /// "c_n*t^n + ... " in the given variable, descending degree.
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      Rational c = c_[static_cast<std::size_t>(d)];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational a = c.abs();
      if (first) { if (neg) os << "-"; }
      else os << (neg ? " - " : " + ");
      first = false;
      if (d == 0) { os << a; continue; }
      if (!a.is_one()) os << a << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), monic.
inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) return {};
  if (p.is_constant()) return UniPoly(1);
  UniPoly g = gcd(p, p.derivative());
  return (p / g).monic();
}

/// Number of distinct complex roots, computed as deg(p / gcd(p, p')).
inline int distinct_root_count(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "distinct_root_count of the zero polynomial");
  return squarefree_part(p).degree();
}

inline bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).is_constant();
}

namespace detail {

/// Positive divisors of |n| (n != 0) by trial division. Desk-scale inputs
/// only; coefficients here stay small.
inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> factors;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{Integer(1)};
  for (auto& [p, e] : factors) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Integer coefficients with content 1 and the same roots.
inline std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
  Integer l = 1;
  for (auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<Integer> z;
  Integer g = 0;
  for (auto& c : p.coeffs()) {
    Integer v = c.num() * (l / c.den());
    z.push_back(v);
    g = gcd(g, v);
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

}  // namespace detail

/// All distinct rational roots, ascending, via the rational root test.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return roots;
  // Peel off the root 0 first so the constant term is nonzero.
  if (q.coeff(0).is_zero()) {
    roots.emplace_back(0);
    q = q.without_root(Rational(0));
  }
  if (q.degree() >= 1) {
    auto z = detail::primitive_integer_coeffs(q);
    auto ps = detail::divisors(z.front());
    auto qs = detail::divisors(z.back());
    for (auto& num : ps) {
      for (auto& den : qs) {
        for (int sgn : {1, -1}) {
          Rational cand(Integer(num * sgn), den);
          if (cand.den() != den) continue;  // non-reduced duplicate
          if (q.eval(cand).is_zero()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace zp
