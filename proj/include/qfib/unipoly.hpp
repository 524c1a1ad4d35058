#pragma once

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfib/error.hpp"
#include "qfib/rational.hpp"

namespace qfib {

/// Univariate polynomial over Q with ascending coefficients (index = degree).
///
/// Trailing zeros are always stripped, so the zero polynomial is the empty
/// coefficient vector and degree() is -1 for it.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
  static UniPoly monomial(const Rational& c, std::size_t deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(1, 1); }
  // u - c
  static UniPoly linear_root(const Rational& c) { return UniPoly{-c, 1}; }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  [[nodiscard]] const Rational& lc() const {
    ensure(!is_zero(), "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  [[nodiscard]] Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  [[nodiscard]] UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(d));
  }

  [[nodiscard]] UniPoly monic() const {
    if (is_zero()) return {};
    Rational l = lc();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x /= l;
    return UniPoly(std::move(c));
  }

  // p(-u)
  [[nodiscard]] UniPoly reflect() const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return UniPoly(std::move(c));
  }

  // u^deg * p(1/u)
  [[nodiscard]] UniPoly reverse(int deg) const {
    ensure(deg >= degree(), "reverse: degree too small");
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(deg) - i] = coeffs_[i];
    return UniPoly(std::move(c));
  }
  [[nodiscard]] UniPoly reverse() const { return reverse(degree()); }

  // p(u + shift)
  [[nodiscard]] UniPoly shift(const Rational& s) const {
    UniPoly out;
    UniPoly lin{s, 1};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * lin + constant(*it);
    return out;
  }

  // p(c * u)
  [[nodiscard]] UniPoly scale_var(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    Rational f = 1;
    for (auto& x : v) {
      x *= f;
      f *= c;
    }
    return UniPoly(std::move(v));
  }

  // Integer primitive associate with positive leading coefficient.
  [[nodiscard]] std::vector<Integer> primitive_integer() const {
    ensure(!is_zero(), "primitive of zero");
    Integer l = 1;
    for (auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    Integer g = 0;
    for (auto& c : coeffs_) {
      Rational t = c * l;
      out.push_back(t.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (out.back() < 0) g = -g;
    for (auto& c : out) c /= g;
    return out;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x = -x;
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& a) { return constant(s) * a; }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  [[nodiscard]] UniPoly pow(unsigned e) const {
    UniPoly r = constant(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

inline DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroDivisor("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& l = b.lc();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = r[static_cast<std::size_t>(i)] / l;
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

// Exact quotient; InternalError if b does not divide a.
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  ensure(r.is_zero(), "exact_quotient: nonzero remainder");
  return q;
}

// Monic gcd; gcd(0,0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool divides(const UniPoly& d, const UniPoly& a) { return (a % d).is_zero(); }

/// Squarefree decomposition a = c * s_1 * s_2^2 * ... * s_k^k (Yun), each s_i
/// monic squarefree and pairwise coprime; entry i-1 holds s_i (may be 1).
inline std::vector<UniPoly> squarefree_decomposition(const UniPoly& a) {
  if (a.is_zero()) throw InvalidInput("squarefree decomposition of zero");
  std::vector<UniPoly> out;
  if (a.degree() == 0) return out;
  UniPoly d = a.derivative();
  UniPoly g = gcd(a, d);
  UniPoly b = exact_quotient(a, g);
  UniPoly c = exact_quotient(d, g);
  UniPoly e = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly s = gcd(b, e);
    out.push_back(s);
    b = exact_quotient(b, s);
    c = exact_quotient(e, s);
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

// Monic squarefree part (product of distinct irreducible factors).
inline UniPoly squarefree_part(const UniPoly& a) {
  if (a.is_zero()) throw InvalidInput("squarefree part of zero");
  if (a.degree() <= 0) return UniPoly::constant(1);
  return exact_quotient(a, gcd(a, a.derivative())).monic();
}

inline bool is_squarefree(const UniPoly& a) { return gcd(a, a.derivative()).degree() <= 0; }

/// Resultant over Q by the Euclidean recurrence
///   Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r),  r = a mod b.
inline Rational resultant(UniPoly a, UniPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rational acc = 1;
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) return acc * pow(b.lc(), static_cast<unsigned long>(da));
    if (da == 0) return acc * pow(a.lc(), static_cast<unsigned long>(db));
    UniPoly r = a % b;
    if (r.is_zero()) return 0;
    if ((da % 2) && (db % 2)) acc = -acc;
    acc *= pow(b.lc(), static_cast<unsigned long>(da - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)
inline Rational discriminant(const UniPoly& f) {
  int n = f.degree();
  if (n < 1) throw InvalidInput("discriminant of a constant");
  Rational r = resultant(f, f.derivative()) / f.lc();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

/// Ascending comma-separated coefficient list: "1,0,1" is 1 + 0u + u^2.
inline UniPoly parse_coeff_list(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  if (detail::trim(text).empty()) throw InvalidInput("empty coefficient list");
  while (true) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    c.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return UniPoly(std::move(c));
}

inline std::string to_coeff_list(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += to_string(p.coeffs()[i]);
  }
  return out;
}

// Human-readable, descending: "u^3-3/2*u+1".
inline std::string to_string(const UniPoly& p, const std::string& var = "u") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    bool unit = (a == 1);
    if (!unit || i == 0) out += to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }

}  // namespace qfib
