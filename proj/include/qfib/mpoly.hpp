#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfib/radical.hpp"
#include "qfib/unipoly.hpp"

namespace qfib {

// Variable order is fixed; exponent vectors index into it.
enum Var : std::size_t { X = 0, Y, Z, W, U, V };
inline constexpr std::array<const char*, 6> kVarNames{"x", "y", "z", "w", "u", "v"};

using Monomial = std::array<unsigned, 6>;

template <class C>
class MPoly {
 public:
  MPoly() = default;
  MPoly(const C& c) {  // NOLINT
    if (!is_zero_coeff(c)) terms_[Monomial{}] = c;
  }
  MPoly(long c) : MPoly(C(Rational(c))) {}  // NOLINT

  static MPoly var(Var i, unsigned e = 1) {
    Monomial m{};
    m[i] = e;
    MPoly p;
    p.terms_[m] = C(Rational(1));
    return p;
  }
  static MPoly term(const C& c, const Monomial& m) {
    MPoly p;
    p.add(m, c);
    return p;
  }
  // p(variable) for a univariate polynomial.
  static MPoly from(const UniPoly& p, Var i) {
    MPoly out;
    for (int k = 0; k <= p.degree(); ++k) {
      Monomial m{};
      m[i] = static_cast<unsigned>(k);
      out.add(m, C(p.coeff(static_cast<std::size_t>(k))));
    }
    return out;
  }

  [[nodiscard]] const std::map<Monomial, C>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
  [[nodiscard]] C constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? C() : it->second;
  }
  [[nodiscard]] unsigned degree_in(Var i) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
  }
  [[nodiscard]] bool uses_only(std::initializer_list<Var> vars) const {
    for (auto& [m, c] : terms_)
      for (std::size_t i = 0; i < 6; ++i)
        if (m[i] != 0 && std::find(vars.begin(), vars.end(), static_cast<Var>(i)) == vars.end()) return false;
    return true;
  }

  void add(const Monomial& m, const C& c) {
    if (is_zero_coeff(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  MPoly& operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) {
    MPoly r;
    for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < 6; ++i) m[i] = ma[i] + mb[i];
        r.add(m, ca * cb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  [[nodiscard]] MPoly pow(unsigned e) const {
    MPoly r(1L), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  std::map<Monomial, C> terms_;
};

using RPoly = MPoly<Radical>;

// num/den, kept unreduced; den never the zero polynomial.
template <class C>
struct Frac {
  MPoly<C> num, den;
  Frac() : num(), den(1L) {}
  Frac(MPoly<C> n) : num(std::move(n)), den(1L) {}  // NOLINT
  Frac(MPoly<C> n, MPoly<C> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw ZeroDivisor("fraction with zero denominator");
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Frac operator-(const Frac& a) { return {-a.num, a.den}; }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num.is_zero()) throw ZeroDivisor("division by zero");
    return {a.num * b.den, a.den * b.num};
  }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
};

using RFrac = Frac<Radical>;

namespace detail {

inline std::vector<std::pair<Integer, Rational>> coeff_parts(const Rational& c) { return {{Integer(1), c}}; }
inline std::vector<std::pair<Integer, Rational>> coeff_parts(const Radical& c) {
  return {c.parts().begin(), c.parts().end()};
}

// Graded order, higher total degree first, then descending exponents in variable order.
inline bool print_before(const Monomial& a, const Monomial& b) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db;
  return a > b;
}

}  // namespace detail

// Deterministic text form, readable back by the expression parser.
template <class C>
std::string to_string(const MPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, C>*> ts;
  for (auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return detail::print_before(a->first, b->first); });
  std::string s;
  for (auto* t : ts) {
    std::string mono;
    for (std::size_t i = 0; i < 6; ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
    }
    for (auto& [n, c] : detail::coeff_parts(t->second)) {
      Rational a = abs(c);
      std::string body;
      if (a != 1 || (n == 1 && mono.empty())) body = to_string(a);
      if (n != 1) body += (body.empty() ? "" : "*") + std::string("sqrt(") + to_string(n) + ")";
      if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
      if (s.empty())
        s = (c < 0 ? "-" : "") + body;
      else
        s += (c < 0 ? "-" : "+") + body;
    }
  }
  return s;
}

template <class C>
std::string to_string(const Frac<C>& f) {
  if (f.den == MPoly<C>(1L)) return to_string(f.num);
  return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

// Normal form modulo z^2 = u p(u) - x^2 - y^2 and w^2 = v p(-v): degree <= 1 in z and w.
template <class C>
class QuotientW {
 public:
  explicit QuotientW(const UniPoly& p)
      : p_(p),
        zz_(MPoly<C>::from(UniPoly::x() * p, U) - MPoly<C>::var(X, 2) - MPoly<C>::var(Y, 2)),
        ww_(MPoly<C>::from(UniPoly::x() * p.reflect(), V)) {}

  [[nodiscard]] const UniPoly& p() const { return p_; }

  [[nodiscard]] MPoly<C> reduce(const MPoly<C>& f) const {
    MPoly<C> out;
    std::map<std::pair<unsigned, unsigned>, MPoly<C>> cache;
    for (auto& [m, c] : f.terms()) {
      unsigned hz = m[Z] / 2, hw = m[W] / 2;
      Monomial rest = m;
      rest[Z] %= 2;
      rest[W] %= 2;
      if (hz == 0 && hw == 0) {
        out.add(rest, c);
        continue;
      }
      auto key = std::make_pair(hz, hw);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, zz_.pow(hz) * ww_.pow(hw)).first;
      out += MPoly<C>::term(c, rest) * it->second;
    }
    return out;
  }

 private:
  UniPoly p_;
  MPoly<C> zz_, ww_;
};

}  // namespace qfib
