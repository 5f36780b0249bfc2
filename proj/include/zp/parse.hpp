#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "zp/bipoly.hpp"
#include "zp/error.hpp"

namespace zp {

/// Inputs above this total degree are refused.
inline constexpr int kDegreeCap = 64;

namespace detail {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := ('+' | '-') unary | power
// power  := atom ('^' integer)?
// atom   := integer ('/' integer)? | variable | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, std::pair<std::string, std::string> vars)
      : s_(text), vars_(std::move(vars)) {}

  BiPoly run() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError(ErrorKind::parse, pos_, "empty polynomial");
    BiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(ErrorKind::parse, pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  static void check_degree(int d, std::size_t at) {
    if (d > kDegreeCap)
      throw ParseError(ErrorKind::degree_cap, at,
                       "total degree " + std::to_string(d) + " exceeds the cap of " + std::to_string(kDegreeCap));
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }
  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (!accept('*')) return acc;
      BiPoly rhs = unary();
      if (!acc.is_zero() && !rhs.is_zero()) check_degree(acc.total_degree() + rhs.total_degree(), at);
      acc *= rhs;
    }
  }
  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  BiPoly power() {
    BiPoly base = atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    if (!at_digit()) fail("exponent must be a nonnegative integer literal");
    const std::string digits = digits_run();
    if (digits.size() > 4 || std::stoi(digits) > kDegreeCap) check_degree(kDegreeCap + 1, at);
    const int e = std::stoi(digits);
    if (!base.is_zero()) check_degree(base.total_degree() * e, at);
    return base.pow(e);
  }
  std::string digits_run() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  BiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string num = digits_run();
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        throw ParseError(ErrorKind::non_rational_literal, start, "non-rational literal");
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (!at_digit()) throw ParseError(ErrorKind::non_rational_literal, pos_, "rational literal needs an integer denominator");
        std::string den = digits_run();
        if (Integer(den) == 0) throw ParseError(ErrorKind::non_rational_literal, start, "zero denominator");
        if (pos_ < s_.size() && s_[pos_] == '.') throw ParseError(ErrorKind::non_rational_literal, start, "non-rational literal");
        return BiPoly(Rational(Integer(num), Integer(den)));
      }
      skip_ws();
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
        fail("implicit multiplication is not allowed; write '*'");
      return BiPoly(Rational(Integer(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == vars_.first) return BiPoly::x();
      if (name == vars_.second) return BiPoly::y();
      throw ParseError(ErrorKind::unknown_variable, start, "unknown variable '" + name + "'");
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '.') throw ParseError(ErrorKind::non_rational_literal, pos_, "non-rational literal");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::pair<std::string, std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an ASCII polynomial: integers, `a/b` rational literals, the two
/// named variables, `+ - * ^` and parentheses. Multiplication is explicit.
inline BiPoly parse_poly(std::string_view text, std::pair<std::string, std::string> vars = {"x", "y"}) {
  return detail::PolyParser(text, std::move(vars)).run();
}

/// Inverse of parse_poly for the same variable names.
inline std::string print_poly(const BiPoly& p, const std::pair<std::string, std::string>& vars = {"x", "y"}) {
  return p.str(vars.first, vars.second);
}

}  // namespace zp
