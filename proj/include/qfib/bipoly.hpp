#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfib/unipoly.hpp"

namespace qfib {

// Sparse polynomial in u, v over the rationals; key (deg_u, deg_v).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly term(const Rational& c, int i, int j) {
    BiPoly b;
    b.add(i, j, c);
    return b;
  }
  static BiPoly in_u(const UniPoly& p) {
    BiPoly b;
    for (int i = 0; i <= p.degree(); ++i) b.add(i, 0, p.coeff(static_cast<std::size_t>(i)));
    return b;
  }
  static BiPoly in_v(const UniPoly& p) {
    BiPoly b;
    for (int j = 0; j <= p.degree(); ++j) b.add(0, j, p.coeff(static_cast<std::size_t>(j)));
    return b;
  }

  [[nodiscard]] const std::map<Key, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  [[nodiscard]] int total_degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  void add(int i, int j, const Rational& c) {
    if (c == 0) return;
    auto& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
  }

  [[nodiscard]] Rational operator()(const Rational& u, const Rational& v) const {
    Rational s = 0;
    for (auto& [k, c] : terms_) s += c * pow(u, static_cast<unsigned long>(k.first)) * pow(v, static_cast<unsigned long>(k.second));
    return s;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (auto& [k, c] : b.terms_) a.add(k.first, k.second, c);
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (auto& [k, c] : b.terms_) a.add(k.first, k.second, -c);
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (auto& [ka, ca] : a.terms_)
      for (auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, Rational> terms_;
};

/// r with (u + v) r = u p(u) + v p(-v). The dividend vanishes on u = -v, so
/// the division is exact.
inline BiPoly exact_div_u_plus_v(const UniPoly& p) {
  // Dividend as a polynomial in u with coefficients in Q[v].
  int n = p.degree() + 1;
  if (p.is_zero()) return {};
  std::vector<UniPoly> d(static_cast<std::size_t>(n) + 1);
  d[0] = UniPoly::x() * p.reflect();
  for (int k = 1; k <= n; ++k) d[static_cast<std::size_t>(k)] = UniPoly::constant(p.coeff(static_cast<std::size_t>(k - 1)));
  // Synthetic division by u - c, c = -v.
  const UniPoly c = -UniPoly::x();
  std::vector<UniPoly> q(static_cast<std::size_t>(n));
  q[static_cast<std::size_t>(n - 1)] = d[static_cast<std::size_t>(n)];
  for (int k = n - 1; k >= 1; --k) q[static_cast<std::size_t>(k - 1)] = d[static_cast<std::size_t>(k)] + c * q[static_cast<std::size_t>(k)];
  UniPoly rem = d[0] + c * q[0];
  ensure(rem.is_zero(), "exact_div_u_plus_v: nonzero remainder");
  BiPoly r;
  for (int i = 0; i < n; ++i) {
    const auto& qi = q[static_cast<std::size_t>(i)];
    for (int j = 0; j <= qi.degree(); ++j) r.add(i, j, qi.coeff(static_cast<std::size_t>(j)));
  }
  return r;
}

// Terms as "(i,j):c", exponents of u then v, sorted by key.
inline std::vector<std::string> to_term_list(const BiPoly& b) {
  std::vector<std::string> out;
  for (auto& [k, c] : b.terms())
    out.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + "):" + to_string(c));
  return out;
}

inline BiPoly parse_term_list(const std::vector<std::string>& terms) {
  BiPoly b;
  for (auto& raw : terms) {
    auto t = detail::trim(raw);
    auto close = t.find(')');
    auto comma = t.find(',');
    if (t.empty() || t.front() != '(' || close == std::string_view::npos || comma == std::string_view::npos ||
        comma > close || close + 1 >= t.size() || t[close + 1] != ':')
      throw InvalidInput("malformed bivariate term: '" + raw + "'");
    Integer i = parse_integer(t.substr(1, comma - 1));
    Integer j = parse_integer(t.substr(comma + 1, close - comma - 1));
    if (i < 0 || j < 0 || i > 100000 || j > 100000) throw InvalidInput("bad exponent in term: '" + raw + "'");
    b.add(static_cast<int>(i.get_si()), static_cast<int>(j.get_si()), parse_rational(t.substr(close + 2)));
  }
  return b;
}

inline std::string to_string(const BiPoly& b) {
  if (b.is_zero()) return "0";
  // Descending total degree, then descending u-degree.
  std::vector<std::pair<BiPoly::Key, Rational>> ts(b.terms().begin(), b.terms().end());
  std::sort(ts.begin(), ts.end(), [](auto& x, auto& y) {
    int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    return dx != dy ? dx > dy : x.first.first > y.first.first;
  });
  std::string s;
  for (auto& [k, c] : ts) {
    Rational a = abs(c);
    std::string mono;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("u", k.first);
    var("v", k.second);
    std::string body = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    if (s.empty())
      s = (c < 0 ? "-" : "") + body;
    else
      s += (c < 0 ? "-" : "+") + body;
  }
  return s;
}

}  // namespace qfib
