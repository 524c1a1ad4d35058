#pragma once

#include <cstdint>
#include <vector>

#include "qfib/rational.hpp"

namespace qfib::modp {

// Dense polynomials over F_p, ascending, p < 2^32.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline Poly reduce(const std::vector<Integer>& f, std::uint64_t p) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  trim(out);
  return out;
}

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mod(Poly a, const Poly& m, std::uint64_t p) {
  std::uint64_t li = inv(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * li % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return mod(r, m, p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = mod(base, m, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly exact_div(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  std::uint64_t li = inv(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t c = a.back() * li % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    trim(a);
  }
  return q;
}

/// Degrees of the irreducible factors of a squarefree f mod p (distinct-degree
/// factorisation), ascending.
inline std::vector<int> factor_degrees(Poly f, std::uint64_t p) {
  std::vector<int> out;
  Poly x{0, 1};
  Poly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = powmod(h, p, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    int gd = static_cast<int>(g.size()) - 1;
    if (gd > 0) {
      for (int i = 0; i < gd / d; ++i) out.push_back(d);
      f = exact_div(f, g, p);
      h = mod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(static_cast<int>(f.size()) - 1);
  return out;
}

}  // namespace qfib::modp
