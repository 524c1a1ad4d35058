#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qfib/bipoly.hpp"
#include "qfib/expr.hpp"
#include "qfib/mpoly.hpp"

namespace qfib {

enum class Ring { PlainBivariate, QuotientW };

inline std::string to_string(Ring r) { return r == Ring::QuotientW ? "W" : "plain"; }
inline Ring parse_ring(std::string_view s) {
  if (s == "W") return Ring::QuotientW;
  if (s == "plain") return Ring::PlainBivariate;
  throw InvalidInput("unknown ring '" + std::string(s) + "' (expected W or plain)");
}

// Sum of entries squared equals target in the ring.
struct SOSCertificate {
  std::vector<RFrac> entries;
  RFrac target;
  Ring ring = Ring::PlainBivariate;
  UniPoly p;  // defines the quotient ring when ring == QuotientW
};

inline RPoly reduce_in(const SOSCertificate& c, const RPoly& f) {
  if (c.ring == Ring::PlainBivariate) return f;
  return QuotientW<Radical>(c.p).reduce(f);
}

/// Exact check: clears denominators and reduces to normal form.
inline bool verify(const SOSCertificate& cert) {
  std::optional<QuotientW<Radical>> q;
  if (cert.ring == Ring::QuotientW) q.emplace(cert.p);
  auto red = [&](const RPoly& f) { return q ? q->reduce(f) : f; };
  for (auto& e : cert.entries)
    if (red(e.den).is_zero()) throw DivisionByZeroDenominator("an entry denominator vanishes in the ring");
  if (red(cert.target.den).is_zero()) throw DivisionByZeroDenominator("target denominator vanishes in the ring");
  RFrac sum;
  for (auto& e : cert.entries) {
    RFrac sq{e.num * e.num, e.den * e.den};
    if (sq.den == sum.den)
      sum.num += sq.num;
    else
      sum = sum + sq;
  }
  return red(sum.num * cert.target.den - cert.target.num * sum.den).is_zero();
}

/// Euler's four-square identity: (sum a_i^2)(sum b_i^2) = sum c_i^2.
inline std::array<RFrac, 4> euler_identity(const std::array<RFrac, 4>& a, const std::array<RFrac, 4>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

namespace detail {

inline std::array<RFrac, 4> pad4(const std::vector<RFrac>& v) {
  if (v.size() > 4) throw PreconditionError("Euler composition needs at most 4 entries");
  std::array<RFrac, 4> a;
  for (std::size_t i = 0; i < v.size(); ++i) a[i] = v[i];
  return a;
}

inline void check_same_ring(const SOSCertificate& s, const SOSCertificate& t) {
  if (s.ring != t.ring || (s.ring == Ring::QuotientW && !(s.p == t.p)))
    throw PreconditionError("certificates live in different rings");
}

inline std::vector<RFrac> drop_zero_entries(const std::array<RFrac, 4>& a) {
  std::vector<RFrac> out;
  for (auto& e : a)
    if (!e.num.is_zero()) out.push_back(e);
  return out;
}

}  // namespace detail

inline SOSCertificate euler_compose(const SOSCertificate& s, const SOSCertificate& t) {
  detail::check_same_ring(s, t);
  auto c = euler_identity(detail::pad4(s.entries), detail::pad4(t.entries));
  return {detail::drop_zero_entries(c), s.target * t.target, s.ring, s.p};
}

/// Certificate for s/t: compose with t and divide every entry by t.
inline SOSCertificate divide_cert(const SOSCertificate& s, const SOSCertificate& t) {
  detail::check_same_ring(s, t);
  if (reduce_in(t, t.target.num).is_zero()) throw ZeroDivisor("divisor certificate has zero target");
  SOSCertificate c = euler_compose(s, t);
  for (auto& e : c.entries) e = e / t.target;
  c.target = s.target / t.target;
  return c;
}

namespace detail {

// p = a^2 + b^2 for a prime p = 1 mod 4 (Cornacchia with a square root of -1).
inline std::pair<Integer, Integer> two_squares_prime(const Integer& p) {
  if (p == 2) return {1, 1};
  Integer e = (p - 1) / 4, x;
  for (Integer t = 2;; ++t) {
    if (mpz_legendre(t.get_mpz_t(), p.get_mpz_t()) != -1) continue;
    mpz_powm(x.get_mpz_t(), t.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    break;
  }
  Integer a = p, b = x, lim = isqrt(p);
  while (b > lim) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  Integer c = isqrt(p - b * b);
  ensure(b * b + c * c == p, "Cornacchia failed");
  return {b, c};
}

// n as a^2 + b^2 if cheaply decidable (n = 0, square, 2x square, prime 1 mod 4).
inline std::optional<std::pair<Integer, Integer>> easy_two_squares(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (is_perfect_square(n)) return std::make_pair(isqrt(n), Integer(0));
  if (n % 2 == 0 && is_perfect_square(n / 2)) {
    Integer s = isqrt(n / 2);
    return std::make_pair(s, s);
  }
  if (mpz_fdiv_ui(n.get_mpz_t(), 4) == 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) return two_squares_prime(n);
  return std::nullopt;
}

}  // namespace detail

/// n = a^2 + b^2 + c^2 + d^2 (n >= 0), by reducing to a prime that splits as
/// two squares.
inline std::array<Integer, 4> lagrange_four_squares(Integer n) {
  if (n < 0) throw InvalidInput("four squares of a negative integer");
  if (n == 0) return {0, 0, 0, 0};
  Integer scale = 1;
  while (n % 4 == 0) {
    n /= 4;
    scale *= 2;
  }
  for (Integer a = isqrt(n); a >= 0; --a)
    for (Integer b = isqrt(n - a * a), tries = 0; b >= 0 && tries < 64; --b, ++tries) {
      Integer rest = n - a * a - b * b;
      if (auto cd = detail::easy_two_squares(rest)) {
        std::array<Integer, 4> r{a * scale, b * scale, cd->first * scale, cd->second * scale};
        ensure(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3] == n * scale * scale, "four squares mismatch");
        return r;
      }
    }
  ensure(false, "four-square search exhausted");
  return {};
}

// q = sum of four rational squares, q >= 0: q = (n d)/d^2.
inline std::array<Rational, 4> rational_four_squares(const Rational& q) {
  if (q < 0) throw InvalidInput("four squares of a negative rational");
  auto s = lagrange_four_squares(q.get_num() * q.get_den());
  std::array<Rational, 4> r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = make_rational(s[i], q.get_den());
  return r;
}

// p = u^2 + a u + b with b >= a^2/3.
struct QuadraticData {
  Rational a, b;
  [[nodiscard]] Rational c() const { return b - a * a / 3; }
};

inline std::optional<QuadraticData> quadratic_with_small_a(const UniPoly& p) {
  if (p.degree() != 2 || p.lc() != 1) return std::nullopt;
  QuadraticData q{p.coeff(1), p.coeff(0)};
  if (q.c() < 0) return std::nullopt;
  return q;
}

/// r(u,v) = (u + (a-v)/2)^2 + (sqrt(3)/2 (v - a/3))^2 + (sqrt c)^2, c = b - a^2/3,
/// as a certificate in the polynomial ring. Entries with value 0 are omitted.
inline SOSCertificate r_certificate(const UniPoly& p) {
  auto q = quadratic_with_small_a(p);
  if (!q) throw PreconditionError("r certificate needs monic quadratic p with b >= a^2/3");
  RPoly u = RPoly::var(U), v = RPoly::var(V);
  RPoly s1 = u + RPoly(Radical(q->a / 2)) - RPoly(Radical(Rational(1, 2))) * v;
  RPoly s2 = RPoly(Radical::sqrt(Rational(3)) * Radical(Rational(1, 2))) * (v - RPoly(Radical(q->a / 3)));
  SOSCertificate c;
  c.entries = {RFrac(s1), RFrac(s2)};
  if (q->c() != 0) c.entries.emplace_back(RPoly(Radical::sqrt(q->c())));
  BiPoly r = exact_div_u_plus_v(p);
  RPoly target;
  for (auto& [k, coef] : r.terms()) {
    Monomial m{};
    m[U] = static_cast<unsigned>(k.first);
    m[V] = static_cast<unsigned>(k.second);
    target.add(m, Radical(coef));
  }
  c.target = RFrac(target);
  return c;
}

/// All-rational expansion of r: s1^2 + 3 (1/2 (v - a/3))^2 + c with 3 = 1+1+1 and c
/// split into four rational squares; up to eight squares.
inline SOSCertificate r_rational_certificate(const UniPoly& p) {
  SOSCertificate c = r_certificate(p);
  auto q = *quadratic_with_small_a(p);
  RPoly half = RPoly(Radical(Rational(1, 2))) * (RPoly::var(V) - RPoly(Radical(q.a / 3)));
  std::vector<RFrac> e{c.entries[0], RFrac(half), RFrac(half), RFrac(half)};
  for (auto& s : rational_four_squares(q.c()))
    if (s != 0) e.emplace_back(RPoly(Radical(s)));
  c.entries = e;
  return c;
}

/// u + v as a sum of four squares in the function field of W, for p passing
/// the quadratic criterion: (x,y,z,w) squares to (u+v) r on W, then divide by
/// the certificate of r.
inline SOSCertificate certify_u_plus_v(const UniPoly& p) {
  SOSCertificate rc = r_certificate(p);
  SOSCertificate xyzw{{RFrac(RPoly::var(X)), RFrac(RPoly::var(Y)), RFrac(RPoly::var(Z)), RFrac(RPoly::var(W))},
                      RFrac(rc.target.num * (RPoly::var(U) + RPoly::var(V))), Ring::QuotientW, p};
  rc.ring = Ring::QuotientW;
  rc.p = p;
  SOSCertificate out = divide_cert(xyzw, rc);
  out.target = RFrac(RPoly::var(U) + RPoly::var(V));
  ensure(verify(out), "u+v certificate failed to verify");
  return out;
}

}  // namespace qfib
