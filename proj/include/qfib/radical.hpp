#pragma once

#include <map>
#include <string>

#include "qfib/rational.hpp"

namespace qfib {

// Element of Q(sqrt 2, sqrt 3, ...) as sum of c_n sqrt(n), n squarefree positive.
class Radical {
 public:
  Radical() = default;
  Radical(const Rational& q) {  // NOLINT
    if (q != 0) parts_[Integer(1)] = q;
  }
  Radical(long q) : Radical(Rational(q)) {}  // NOLINT

  // sqrt(q) for q >= 0, simplified.
  static Radical sqrt(const Rational& q) {
    if (q < 0) throw InvalidInput("square root of a negative rational");
    Radical r;
    if (q == 0) return r;
    Integer n = q.get_num() * q.get_den();
    auto [sq, free] = split_square(n);
    r.parts_[free] = make_rational(sq, q.get_den());
    return r;
  }

  [[nodiscard]] const std::map<Integer, Rational>& parts() const { return parts_; }
  [[nodiscard]] bool is_zero() const { return parts_.empty(); }
  [[nodiscard]] bool is_rational() const { return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1); }
  [[nodiscard]] Rational rational() const {
    ensure(is_rational(), "radical is not rational");
    return parts_.empty() ? Rational(0) : parts_.begin()->second;
  }

  Radical& operator+=(const Radical& o) {
    for (auto& [n, c] : o.parts_) add(n, c);
    return *this;
  }
  Radical& operator-=(const Radical& o) {
    for (auto& [n, c] : o.parts_) add(n, -c);
    return *this;
  }
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator-(const Radical& a) {
    Radical r;
    for (auto& [n, c] : a.parts_) r.parts_[n] = -c;
    return r;
  }
  friend Radical operator*(const Radical& a, const Radical& b) {
    Radical r;
    for (auto& [n, c] : a.parts_)
      for (auto& [m, d] : b.parts_) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
        r.add(Integer(n / g * (m / g)), c * d * g);
      }
    return r;
  }
  Radical& operator*=(const Radical& o) { return *this = *this * o; }
  friend bool operator==(const Radical& a, const Radical& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

 private:
  void add(const Integer& n, const Rational& c) {
    if (c == 0) return;
    auto& slot = parts_[n];
    slot += c;
    if (slot == 0) parts_.erase(n);
  }
  std::map<Integer, Rational> parts_;
};

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const Radical& c) { return c.is_zero(); }

}  // namespace qfib
