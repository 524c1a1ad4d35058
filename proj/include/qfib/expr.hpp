#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "qfib/mpoly.hpp"

namespace qfib {

// Fold a rational constant denominator into the numerator.
inline RFrac simplify(const RFrac& f) {
  if (!f.den.is_constant()) return f;
  Radical d = f.den.constant_term();
  if (!d.is_rational()) return f;
  return RFrac(f.num * RPoly(Radical(1 / d.rational())));
}

namespace detail {

// Recursive descent over
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('+'|'-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | variable | 'sqrt(' expr ')' | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  RFrac parse() {
    RFrac e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("expression parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RFrac expr() {
    RFrac e = term();
    while (true) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }
  RFrac term() {
    RFrac e = unary();
    while (true) {
      if (eat('*')) {
        e = e * unary();
      } else if (eat('/')) {
        RFrac d = unary();
        if (d.num.is_zero()) fail("division by zero");
        e = simplify(e / d);
      } else {
        return e;
      }
    }
  }
  RFrac unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RFrac power() {
    RFrac base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer");
    if (pos_ - start > 4) fail("exponent too large");
    auto e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    return {base.num.pow(e), base.den.pow(e)};
  }
  RFrac atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RFrac(RPoly(Radical(Rational(Integer(std::string(s_.substr(start, pos_ - start)))))));
    }
    if (c == '(') {
      ++pos_;
      RFrac e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (s_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      RFrac e = expr();
      if (!eat(')')) fail("missing ')' after sqrt");
      e = simplify(e);
      if (!e.den.is_constant() || !e.num.is_constant() || !e.num.constant_term().is_rational())
        fail("sqrt takes a rational constant");
      return RFrac(RPoly(Radical::sqrt(e.num.constant_term().rational())));
    }
    for (std::size_t i = 0; i < kVarNames.size(); ++i)
      if (c == kVarNames[i][0]) {
        ++pos_;
        if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) fail("unknown identifier");
        return RFrac(RPoly::var(static_cast<Var>(i)));
      }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RFrac parse_expression(std::string_view text) { return simplify(detail::ExprParser(text).parse()); }

/// Polynomial in one variable with rational coefficients, from an expression
/// such as "1+u^2" or "-(u-1)".
inline UniPoly parse_univariate(std::string_view text, Var var = U) {
  RFrac f = parse_expression(text);
  if (!f.den.is_constant()) throw InvalidInput("expected a polynomial, got a fraction: '" + std::string(text) + "'");
  if (!f.num.uses_only({var})) throw InvalidInput("expected a polynomial in " + std::string(kVarNames[var]) + ": '" + std::string(text) + "'");
  std::vector<Rational> c(f.num.degree_in(var) + 1);
  for (auto& [m, r] : f.num.terms()) {
    if (!r.is_rational()) throw InvalidInput("irrational coefficient in '" + std::string(text) + "'");
    c[m[var]] = r.rational();
  }
  return UniPoly(c);
}

// Coefficient list ("1,0,1") or expression ("u^2+1").
inline UniPoly parse_poly_any(std::string_view text) {
  auto t = detail::trim(text);
  bool list = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '/' || c == '-' || c == '+' || c == ' ';
  }) && t.find(',') != std::string_view::npos;
  if (list || detail::is_integer_literal(t)) return parse_coeff_list(t);
  return parse_univariate(t);
}

}  // namespace qfib
