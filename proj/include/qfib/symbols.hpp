#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qfib/sturm.hpp"

namespace qfib {

// Element of Q(u) kept reduced: gcd(num, den) = 1, den monic.
class RatFunc {
 public:
  RatFunc() : num_(UniPoly::constant(0)), den_(UniPoly::constant(1)) {}
  RatFunc(const UniPoly& n) : RatFunc(n, UniPoly::constant(1)) {}  // NOLINT
  RatFunc(UniPoly n, UniPoly d) {
    if (d.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (n.is_zero()) {
      num_ = n;
      den_ = UniPoly::constant(1);
      return;
    }
    UniPoly g = gcd(n, d);
    n = exact_quotient(n, g);
    d = exact_quotient(d, g);
    Rational s = d.lc();
    num_ = n * UniPoly::constant(1 / s);
    den_ = d * UniPoly::constant(1 / s);
  }

  [[nodiscard]] const UniPoly& num() const { return num_; }
  [[nodiscard]] const UniPoly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDivisor("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_}; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  UniPoly num_, den_;
};

// "num|den" with coefficient lists; "|den" part optional.
inline RatFunc parse_ratfunc(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) return RatFunc(parse_coeff_list(text));
  return {parse_coeff_list(text.substr(0, bar)), parse_coeff_list(text.substr(bar + 1))};
}

inline std::string to_string(const RatFunc& f) {
  return to_coeff_list(f.num()) + "|" + to_coeff_list(f.den());
}

// A real closed point of P^1: rational, real algebraic of degree >= 2, or infinity.
class ClosedPointR {
 public:
  struct Infinity {
    bool operator==(const Infinity&) const { return true; }
  };

  static ClosedPointR at(const Rational& c) { return ClosedPointR(c); }
  static ClosedPointR infinity() { return ClosedPointR(Infinity{}); }
  static ClosedPointR at(const RealAlgebraic& a) {
    if (a.is_rational()) return ClosedPointR(a.rational_value());
    return ClosedPointR(a);
  }

  [[nodiscard]] bool is_infinity() const { return std::holds_alternative<Infinity>(v_); }
  [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  [[nodiscard]] const Rational& rational() const { return std::get<Rational>(v_); }
  [[nodiscard]] const RealAlgebraic& algebraic() const { return std::get<RealAlgebraic>(v_); }
  [[nodiscard]] RealAlgebraic as_real_algebraic() const {
    ensure(!is_infinity(), "infinity has no real algebraic value");
    return is_rational() ? RealAlgebraic::rational(rational()) : algebraic();
  }

  [[nodiscard]] std::string key() const {
    if (is_infinity()) return "inf";
    if (is_rational()) return to_string(rational());
    return to_string(algebraic());
  }

  // Finite points ascending, infinity last.
  friend int compare(const ClosedPointR& a, const ClosedPointR& b) {
    if (a.is_infinity() || b.is_infinity()) return static_cast<int>(a.is_infinity()) - static_cast<int>(b.is_infinity());
    return compare(a.as_real_algebraic(), b.as_real_algebraic());
  }
  friend bool operator==(const ClosedPointR& a, const ClosedPointR& b) { return compare(a, b) == 0; }
  friend bool operator<(const ClosedPointR& a, const ClosedPointR& b) { return compare(a, b) < 0; }

 private:
  explicit ClosedPointR(std::variant<Rational, RealAlgebraic, Infinity> v) : v_(std::move(v)) {}
  std::variant<Rational, RealAlgebraic, Infinity> v_;
};

// Valuation and sign of the leading Taylor coefficient at a real point; at
// infinity in the coordinate 1/u.
struct LocalUnit {
  long valuation;
  int unit_sign;
};

inline LocalUnit local_unit(const UniPoly& f, const ClosedPointR& p) {
  if (f.is_zero()) throw InvalidInput("local data of the zero polynomial");
  if (p.is_infinity()) return {-static_cast<long>(f.degree()), sign(f.lc())};
  RealAlgebraic a = p.as_real_algebraic();
  return {multiplicity_at(f, a), unit_sign_at(f, a)};
}

inline LocalUnit local_unit(const RatFunc& f, const ClosedPointR& p) {
  if (f.is_zero()) throw InvalidInput("local data of the zero function");
  LocalUnit n = local_unit(f.num(), p), d = local_unit(f.den(), p);
  return {n.valuation - d.valuation, n.unit_sign * d.unit_sign};
}

struct QuaternionSymbol {
  RatFunc f, g;
  QuaternionSymbol(RatFunc f_, RatFunc g_) : f(std::move(f_)), g(std::move(g_)) {
    if (f.is_zero() || g.is_zero()) throw InvalidInput("quaternion symbol entries must be nonzero");
  }
};

/// Tame symbol (-1)^{v(f)v(g)} f^{v(g)} g^{-v(f)} at P, as a sign class.
/// Returns true when nontrivial (negative residue).
inline bool tame_residue(const QuaternionSymbol& s, const ClosedPointR& p) {
  LocalUnit a = local_unit(s.f, p), b = local_unit(s.g, p);
  int value = ((a.valuation * b.valuation) % 2 != 0) ? -1 : 1;
  if (b.valuation % 2 != 0) value *= a.unit_sign;
  if (a.valuation % 2 != 0) value *= b.unit_sign;
  return value < 0;
}

struct ResidueEntry {
  ClosedPointR point;
  bool nontrivial;
};

struct ResidueProfile {
  std::vector<ResidueEntry> entries;  // sorted, infinity last
  [[nodiscard]] std::size_t nontrivial_count() const {
    std::size_t n = 0;
    for (auto& e : entries) n += e.nontrivial ? 1 : 0;
    return n;
  }
  [[nodiscard]] bool all_trivial() const { return nontrivial_count() == 0; }
  [[nodiscard]] std::vector<std::string> nontrivial_keys() const {
    std::vector<std::string> out;
    for (auto& e : entries)
      if (e.nontrivial) out.push_back(e.point.key());
    return out;
  }
};

/// Distinct real roots of the product of the given polynomials, each with a
/// small defining polynomial (gcd of the factors vanishing there). Sorted.
inline std::vector<ClosedPointR> real_points_of(const std::vector<UniPoly>& polys) {
  UniPoly prod = UniPoly::constant(1);
  std::vector<UniPoly> parts;
  for (auto& p : polys) {
    if (p.is_zero()) throw InvalidInput("zero polynomial among critical data");
    if (p.degree() < 1) continue;
    parts.push_back(squarefree_part(p));
    prod = prod * parts.back();
  }
  std::vector<ClosedPointR> out;
  if (prod.degree() < 1) return out;
  for (auto& r : isolate_real_roots(squarefree_part(prod))) {
    if (r.root.is_rational()) {
      out.push_back(ClosedPointR::at(r.root.rational_value()));
      continue;
    }
    UniPoly h = r.root.poly();
    for (auto& q : parts)
      if (sign_at(q, r.root) == 0) h = gcd(h, q);
    out.push_back(ClosedPointR::at(RealAlgebraic::make(h, r.root.lo(), r.root.hi())));
  }
  return out;
}

inline ResidueProfile residue_profile(const QuaternionSymbol& s) {
  ResidueProfile prof;
  auto pts = real_points_of({s.f.num(), s.f.den(), s.g.num(), s.g.den()});
  pts.push_back(ClosedPointR::infinity());
  for (auto& p : pts) {
    LocalUnit a = local_unit(s.f, p), b = local_unit(s.g, p);
    bool nt = tame_residue(s, p);
    if (a.valuation != 0 || b.valuation != 0 || nt) prof.entries.push_back({p, nt});
  }
  ensure(prof.nontrivial_count() % 2 == 0, "residue parity violated");
  return prof;
}

struct FaddeevResult {
  enum class Kind { Trivial, ConstantNontrivial, Ramified };
  Kind kind;
  ResidueProfile profile;
  std::optional<Rational> evaluation_point;
};

inline std::string to_string(FaddeevResult::Kind k) {
  switch (k) {
    case FaddeevResult::Kind::Trivial:
      return "Trivial";
    case FaddeevResult::Kind::ConstantNontrivial:
      return "ConstantNontrivial";
    case FaddeevResult::Kind::Ramified:
      return "Ramified";
  }
  return "?";
}

namespace detail {

// Rationals 0, 1, -1, 2, -2, 1/2, -1/2, 3, ... where none of the polys vanish.
inline Rational unramified_point(const std::vector<UniPoly>& polys) {
  auto ok = [&](const Rational& x) {
    for (auto& p : polys)
      if (sign(p(x)) == 0) return false;
    return true;
  };
  for (long n = 0;; ++n)
    for (long d = 1; d <= n + 1; ++d)
      for (long s : {1L, -1L}) {
        Rational x = make_rational(s * n, d);
        if (ok(x)) return x;
      }
}

}  // namespace detail

inline FaddeevResult faddeev_decide(const QuaternionSymbol& s) {
  FaddeevResult r{FaddeevResult::Kind::Ramified, residue_profile(s), std::nullopt};
  if (!r.profile.all_trivial()) return r;
  Rational x = detail::unramified_point({s.f.num(), s.f.den(), s.g.num(), s.g.den()});
  r.evaluation_point = x;
  bool both_negative = sign(s.f.num()(x) * s.f.den()(x)) < 0 && sign(s.g.num()(x) * s.g.den()(x)) < 0;
  r.kind = both_negative ? FaddeevResult::Kind::ConstantNontrivial : FaddeevResult::Kind::Trivial;
  return r;
}

// A place of Q: the real place or a prime.
struct Place {
  bool real = true;
  Integer p = 0;
  static Place infinite() { return {true, 0}; }
  static Place prime(const Integer& q) {
    if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) throw InvalidInput("place must be a prime or 'inf'");
    return {false, q};
  }
};

inline Place parse_place(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "inf" || t == "real" || t == "R" || t == "oo") return Place::infinite();
  return Place::prime(parse_integer(t));
}

/// Hilbert symbol (a, b)_v in {+1, -1}.
inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw InvalidInput("Hilbert symbol needs nonzero arguments");
  if (place.real) return (a < 0 && b < 0) ? -1 : 1;
  // Same square class: n/d ~ n*d.
  Integer x = a.get_num() * a.get_den(), y = b.get_num() * b.get_den();
  const Integer& p = place.p;
  long alpha = valuation(x, p), beta = valuation(y, p);
  for (long i = 0; i < alpha; ++i) x /= p;
  for (long i = 0; i < beta; ++i) y /= p;
  if (p == 2) {
    auto mod8 = [](const Integer& n) {
      Integer r = n % 8;
      if (r < 0) r += 8;
      return r.get_si();
    };
    long u = mod8(x), v = mod8(y);
    auto eps = [](long t) { return ((t - 1) / 2) % 2; };
    auto omega = [](long t) { return ((t * t - 1) / 8) % 2; };
    long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if ((alpha * beta) % 2 != 0 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) s = -s;
  if (beta % 2 != 0) s *= mpz_legendre(x.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 != 0) s *= mpz_legendre(y.get_mpz_t(), p.get_mpz_t());
  return s;
}

// The places where (a, b) can be nontrivial: real, 2, and odd primes dividing a or b.
inline std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  std::vector<Place> out{Place::infinite(), Place::prime(2)};
  std::map<Integer, long> primes;
  for (const Integer* n : {&a.get_num(), &a.get_den(), &b.get_num(), &b.get_den()})
    for (auto& [p, e] : factor(*n)) primes[p] += e;
  for (auto& [p, e] : primes)
    if (p != 2) out.push_back(Place::prime(p));
  return out;
}

}  // namespace qfib
