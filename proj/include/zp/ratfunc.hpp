#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zp/rational.hpp"
#include "zp/unipoly.hpp"

namespace zp {

/// The linear form nu + N*s with gcd(nu, N) = 1, raised to `mult`.
struct LinearFactor {
  long nu = 1;
  long N = 1;
  int mult = 1;

  /// The root -nu/N.
  Rational root() const { return Rational(-nu, N); }
  UniPoly poly() const { return UniPoly({Rational(nu), Rational(N)}); }
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// Canonical factor order: nu/N ascending, then N ascending.
inline bool factor_less(const LinearFactor& a, const LinearFactor& b) {
  const Rational ra(a.nu, a.N), rb(b.nu, b.N);
  if (ra != rb) return ra < rb;
  return a.N < b.N;
}

/// One summand coefficient * prod 1/(nu_i + N_i s); factors with N = 0 are
/// plain constants nu.
struct ZetaTerm {
  Rational coefficient;
  std::vector<std::pair<long, long>> factors;  // (nu, N)
};

/// Reduced rational function in s whose denominator is a product of linear
/// forms nu + N s. The numerator carries every scalar.
class RationalFunctionS {
 public:
  RationalFunctionS() = default;
  RationalFunctionS(UniPoly num, std::vector<LinearFactor> den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const UniPoly& numerator() const { return num_; }
  const std::vector<LinearFactor>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  UniPoly expanded_denominator() const {
    UniPoly d(1);
    for (auto& f : den_)
      for (int k = 0; k < f.mult; ++k) d *= f.poly();
    return d;
  }

  /// Throws at a root of the denominator.
  Rational eval(const Rational& s) const {
    Rational d(1);
    for (auto& f : den_) d *= zp::pow(Rational(f.nu) + Rational(f.N) * s, static_cast<unsigned long>(f.mult));
    if (d.is_zero()) throw Error(ErrorKind::invalid_argument, "evaluation at a pole " + s.str());
    return num_.eval(s) / d;
  }

  friend bool operator==(const RationalFunctionS& a, const RationalFunctionS& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// e.g. "(5s^2+16s+8)/((2+5s)(4+7s)(1+s))".
  std::string str() const {
    std::string n = numerator_str();
    if (den_.empty()) return n;
    const bool compound_num = num_.degree() >= 1 && count_terms() > 1;
    std::string num_part = compound_num ? "(" + n + ")" : n;
    std::string den_part;
    for (auto& f : den_) {
      den_part += "(" + factor_str(f) + ")";
      if (f.mult > 1) den_part += "^" + std::to_string(f.mult);
    }
    const bool single = den_.size() == 1;
    return num_part + "/" + (single ? den_part : "(" + den_part + ")");
  }

  static std::string factor_str(const LinearFactor& f) {
    return std::to_string(f.nu) + "+" + (f.N == 1 ? std::string() : std::to_string(f.N)) + "s";
  }

 private:
  int count_terms() const {
    int n = 0;
    for (auto& c : num_.coeffs()) n += c.is_zero() ? 0 : 1;
    return n;
  }

  std::string numerator_str() const {
    if (num_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = num_.degree(); d >= 0; --d) {
      const Rational c = num_.coeff(d);
      if (c.is_zero()) continue;
      const Rational a = c.abs();
      if (c.sign() < 0) os << "-";
      else if (!first) os << "+";
      first = false;
      if (d == 0) {
        os << a;
        continue;
      }
      if (!a.is_one()) os << (a.is_integer() ? a.str() : "(" + a.str() + ")");
      os << "s";
      if (d > 1) os << "^" << d;
    }
    return os.str();
  }

  void reduce() {
    std::map<std::pair<long, long>, int> merged;
    for (auto f : den_) {
      if (f.N <= 0 || f.nu <= 0 || f.mult < 0)
        throw Error(ErrorKind::invalid_argument, "denominator factors need positive nu and N");
      const long g = std::gcd(f.nu, f.N);
      if (g != 1) {
        num_ = num_.scaled(Rational(1, static_cast<long>(1)) / zp::pow(Rational(g), static_cast<unsigned long>(f.mult)));
        f.nu /= g;
        f.N /= g;
      }
      merged[{f.nu, f.N}] += f.mult;
    }
    den_.clear();
    if (num_.is_zero()) return;
    for (auto [key, mult] : merged) {
      LinearFactor f{key.first, key.second, mult};
      while (f.mult > 0 && num_.eval(f.root()).is_zero()) {
        num_ = num_ / f.poly();
        --f.mult;
      }
      if (f.mult > 0) den_.push_back(f);
    }
    std::sort(den_.begin(), den_.end(), factor_less);
  }

  UniPoly num_;
  std::vector<LinearFactor> den_;
};

/// Exact sum of the terms over the least common denominator, reduced.
inline RationalFunctionS rf_sum_of_terms(const std::vector<ZetaTerm>& terms) {
  struct Prepared {
    Rational c;
    std::map<std::pair<long, long>, int> den;
  };
  std::vector<Prepared> prepared;
  std::map<std::pair<long, long>, int> lcm;
  for (auto& t : terms) {
    Prepared p{t.coefficient, {}};
    for (auto [nu, N] : t.factors) {
      if (nu < 1 || N < 0) throw Error(ErrorKind::invalid_argument, "term factor needs nu >= 1 and N >= 0");
      if (N == 0) {
        p.c /= Rational(nu);
        continue;
      }
      const long g = std::gcd(nu, N);
      p.c /= Rational(g);
      ++p.den[{nu / g, N / g}];
    }
    for (auto& [k, m] : p.den) lcm[k] = std::max(lcm[k], m);
    prepared.push_back(std::move(p));
  }
  UniPoly num;
  for (auto& p : prepared) {
    UniPoly part(p.c);
    for (auto& [k, m] : lcm) {
      const int missing = m - (p.den.count(k) ? p.den.at(k) : 0);
      const UniPoly lin({Rational(k.first), Rational(k.second)});
      for (int i = 0; i < missing; ++i) part *= lin;
    }
    num += part;
  }
  std::vector<LinearFactor> den;
  for (auto& [k, m] : lcm) den.push_back({k.first, k.second, m});
  return RationalFunctionS(std::move(num), std::move(den));
}

struct Pole {
  Rational location;
  int order = 1;
  /// Residue for simple poles, coefficient of (s - s0)^(-order) otherwise.
  Rational leading;
};

/// One entry per root of the reduced denominator, ascending by location.
inline std::vector<Pole> poles_of(const RationalFunctionS& rf) {
  std::vector<Pole> out;
  const auto& den = rf.denominator();
  for (std::size_t i = 0; i < den.size(); ++i) {
    const Rational s0 = den[i].root();
    Rational d = zp::pow(Rational(den[i].N), static_cast<unsigned long>(den[i].mult));
    for (std::size_t j = 0; j < den.size(); ++j) {
      if (j == i) continue;
      d *= zp::pow(Rational(den[j].nu) + Rational(den[j].N) * s0, static_cast<unsigned long>(den[j].mult));
    }
    out.push_back({s0, den[i].mult, rf.numerator().eval(s0) / d});
  }
  std::sort(out.begin(), out.end(), [](const Pole& a, const Pole& b) { return a.location < b.location; });
  return out;
}

}  // namespace zp
