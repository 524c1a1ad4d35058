#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qfib/unipoly.hpp"

namespace qfib {

// Rational extended by -inf and +inf, for root-counting endpoints.
struct ExtRational {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static ExtRational neg_inf() { return {Kind::NegInf, 0}; }
  static ExtRational pos_inf() { return {Kind::PosInf, 0}; }
  ExtRational() = default;
  ExtRational(Kind k, Rational v) : kind(k), value(std::move(v)) {}
  ExtRational(const Rational& v) : kind(Kind::Finite), value(v) {}  // NOLINT: implicit by design of call sites
  ExtRational(long v) : kind(Kind::Finite), value(v) {}              // NOLINT
  template <class T, class U>
  ExtRational(const __gmp_expr<T, U>& e) : kind(Kind::Finite), value(e) {}  // NOLINT

  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.kind == Kind::Finite && a.value < b.value;
  }
};

// Sign of f at a (possibly infinite) point; at +-inf from degree parity and lc.
inline int sign_at(const UniPoly& f, const ExtRational& x) {
  if (f.is_zero()) return 0;
  switch (x.kind) {
    case ExtRational::Kind::Finite:
      return sign(f(x.value));
    case ExtRational::Kind::PosInf:
      return sign(f.lc());
    case ExtRational::Kind::NegInf:
      return sign(f.lc()) * ((f.degree() % 2) ? -1 : 1);
  }
  return 0;
}

inline std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f};
  UniPoly next = f.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    next = -(a % b);
  }
  return seq;
}

inline int sign_variations(const std::vector<UniPoly>& seq, const ExtRational& x) {
  int count = 0, last = 0;
  for (auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

inline int sturm_root_count(const std::vector<UniPoly>& seq, const ExtRational& a, const ExtRational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

/// Number of distinct real roots of f in (a, b]; a < b, infinite ends allowed.
inline int sturm_root_count(const UniPoly& f, const ExtRational& a, const ExtRational& b) {
  if (f.is_zero()) throw InvalidInput("sturm_root_count of the zero polynomial");
  if (!(a < b)) throw InvalidInput("sturm_root_count needs a < b");
  if (f.degree() == 0) return 0;
  return sturm_root_count(sturm_sequence(f), a, b);
}

// Cauchy-type bound rounded up to a power of two: all roots lie in (-B, B).
inline Rational root_bound(const UniPoly& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeffs()[static_cast<std::size_t>(i)] / f.lc())));
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

/// A real algebraic number: the unique root of a squarefree polynomial in the
/// open interval (lo, hi). The polynomial is nonzero at both ends.
class RealAlgebraic {
 public:
  static RealAlgebraic make(const UniPoly& poly, const Rational& lo, const Rational& hi) {
    if (poly.degree() < 1) throw InvalidInput("real algebraic number needs a nonconstant polynomial");
    if (!(lo < hi)) throw InvalidInput("isolating interval must have lo < hi");
    if (!is_squarefree(poly)) throw InvalidInput("defining polynomial must be squarefree");
    if (sign(poly(lo)) * sign(poly(hi)) >= 0 || sturm_root_count(poly, lo, hi) != 1)
      throw InvalidInput("interval does not isolate exactly one root");
    return RealAlgebraic(poly.monic(), lo, hi);
  }
  static RealAlgebraic rational(const Rational& c) { return RealAlgebraic(UniPoly::linear_root(c), c - 1, c + 1); }

  [[nodiscard]] const UniPoly& poly() const { return poly_; }
  [[nodiscard]] const Rational& lo() const { return lo_; }
  [[nodiscard]] const Rational& hi() const { return hi_; }
  [[nodiscard]] bool is_rational() const { return poly_.degree() == 1; }
  [[nodiscard]] Rational rational_value() const {
    ensure(is_rational(), "rational_value of an irrational number");
    return -poly_.coeffs()[0] / poly_.coeffs()[1];
  }

  // Halve the interval, keeping the root.
  void refine() {
    Rational mid = (lo_ + hi_) / 2;
    int sm = sign(poly_(mid));
    if (sm == 0) {
      poly_ = UniPoly::linear_root(mid);
      lo_ = (lo_ + mid) / 2;
      hi_ = (hi_ + mid) / 2;
      return;
    }
    if (sign(poly_(lo_)) * sm < 0)
      hi_ = mid;
    else
      lo_ = mid;
  }

  void refine_to(const Rational& width) {
    if (is_rational()) {
      Rational c = rational_value();
      if (hi_ - lo_ >= width) {
        lo_ = c - width / 4;
        hi_ = c + width / 4;
      }
      return;
    }
    while (hi_ - lo_ >= width) refine();
  }

  [[nodiscard]] double to_double() const {
    RealAlgebraic c = *this;
    c.refine_to(Rational(1, 1) / Rational(Integer(1) << 60));
    Rational mid = (c.lo_ + c.hi_) / 2;
    return mid.get_d();
  }

 private:
  RealAlgebraic(UniPoly p, Rational lo, Rational hi) : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}
  UniPoly poly_;
  Rational lo_, hi_;
};

inline std::string to_string(const RealAlgebraic& a) {
  return "root(" + to_string(a.poly()) + ",(" + to_string(a.lo()) + "," + to_string(a.hi()) + "))";
}

/// Sign of g at alpha, exact: 0 iff g(alpha) = 0.
inline int sign_at(const UniPoly& g, const RealAlgebraic& alpha) {
  if (g.is_zero()) return 0;
  if (g.degree() == 0) return sign(g.lc());
  if (alpha.is_rational()) return sign(g(alpha.rational_value()));
  UniPoly h = gcd(alpha.poly(), g);
  if (h.degree() >= 1 && sturm_root_count(h, alpha.lo(), alpha.hi()) >= 1) return 0;
  RealAlgebraic a = alpha;
  auto seq = sturm_sequence(g);
  while (true) {
    int inside = sturm_root_count(seq, a.lo(), a.hi()) + (sign(g(a.lo())) == 0 ? 1 : 0);
    if (inside == 0) return sign(g(a.lo()));
    a.refine();
    if (a.is_rational()) return sign(g(a.rational_value()));
  }
}

// -1, 0, +1 ordering of two real algebraic numbers.
inline int compare(const RealAlgebraic& x, const RealAlgebraic& y) {
  if (x.is_rational() && y.is_rational()) {
    Rational a = x.rational_value(), b = y.rational_value();
    return a < b ? -1 : (b < a ? 1 : 0);
  }
  if (x.is_rational()) return -sign_at(UniPoly::linear_root(x.rational_value()), y);
  if (y.is_rational()) return sign_at(UniPoly::linear_root(y.rational_value()), x);
  // y == x iff y is a root of x's polynomial lying in x's isolating interval.
  UniPoly h = gcd(x.poly(), y.poly());
  if (h.degree() >= 1 && sign_at(h, y) == 0 && sign_at(UniPoly::linear_root(x.lo()), y) > 0 &&
      sign_at(UniPoly::linear_root(x.hi()), y) < 0)
    return 0;
  RealAlgebraic a = x, b = y;
  while (true) {
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    a.refine();
    b.refine();
  }
}

struct RealRoot {
  RealAlgebraic root;
  int multiplicity;
};

namespace detail {

// Distinct real roots of a squarefree polynomial, sorted, rational roots exact.
inline std::vector<RealAlgebraic> isolate_squarefree(const UniPoly& s) {
  std::vector<RealAlgebraic> out;
  if (s.degree() < 1) return out;
  auto seq = sturm_sequence(s);
  Rational b = root_bound(s);
  struct Box {
    Rational lo, hi;
    int count;
  };
  std::vector<Box> stack{{-b, b, sturm_root_count(seq, -b, b)}};
  std::vector<std::pair<Rational, Rational>> found;
  std::vector<Rational> exact;
  while (!stack.empty()) {
    Box box = stack.back();
    stack.pop_back();
    if (box.count == 0) continue;
    if (box.count == 1 && box.hi - box.lo <= 1) {
      if (sign(s(box.hi)) == 0) {
        exact.push_back(box.hi);
        continue;
      }
      Rational lo = box.lo, hi = box.hi;
      while (sign(s(lo)) == 0) {
        Rational mid = (lo + hi) / 2;
        if (sign(s(mid)) == 0) {
          exact.push_back(mid);
          lo = hi;  // marks done
          break;
        }
        if (sturm_root_count(seq, mid, hi) == 1)
          lo = mid;
        else
          hi = mid;
      }
      if (lo < hi) found.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (box.lo + box.hi) / 2;
    int left = sturm_root_count(seq, box.lo, mid);
    stack.push_back({mid, box.hi, box.count - left});
    stack.push_back({box.lo, mid, left});
  }
  // Rational roots have denominators dividing the leading coefficient of the
  // primitive integer associate.
  Integer lead = s.primitive_integer().back();
  Rational width = Rational(1) / Rational(lead);
  UniPoly irrational = s;
  std::vector<std::pair<Rational, Rational>> irr_ivals;
  for (auto& c : exact) irrational = exact_quotient(irrational, UniPoly::linear_root(c));
  for (auto [lo, hi] : found) {
    while (hi - lo > width) {
      Rational mid = (lo + hi) / 2;
      if (sign(s(mid)) == 0) {
        exact.push_back(mid);
        irrational = exact_quotient(irrational, UniPoly::linear_root(mid));
        lo = hi;
        break;
      }
      if (sign(s(lo)) * sign(s(mid)) < 0)
        hi = mid;
      else
        lo = mid;
    }
    if (!(lo < hi)) continue;
    bool is_rat = false;
    for (Integer k = ceil_div(lo * lead); k <= floor_div(hi * lead); ++k) {
      Rational cand = make_rational(k, lead);
      if (lo < cand && cand < hi && sign(s(cand)) == 0) {
        exact.push_back(cand);
        irrational = exact_quotient(irrational, UniPoly::linear_root(cand));
        is_rat = true;
        break;
      }
    }
    if (!is_rat) irr_ivals.emplace_back(lo, hi);
  }
  for (auto& c : exact) out.push_back(RealAlgebraic::rational(c));
  for (auto& [lo, hi] : irr_ivals) out.push_back(RealAlgebraic::make(irrational.monic(), lo, hi));
  std::sort(out.begin(), out.end(), [](const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) < 0; });
  return out;
}

}  // namespace detail

/// All real roots of f with multiplicities, sorted ascending. Rational roots
/// carry a linear defining polynomial.
inline std::vector<RealRoot> isolate_real_roots(const UniPoly& f) {
  if (f.is_zero()) throw InvalidInput("isolate_real_roots of the zero polynomial");
  std::vector<RealRoot> out;
  auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (auto& r : detail::isolate_squarefree(parts[i])) out.push_back({r, static_cast<int>(i + 1)});
  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return compare(x.root, y.root) < 0; });
  for (std::size_t i = 1; i < out.size(); ++i)
    while (out[i - 1].root.hi() > out[i].root.lo()) {
      out[i - 1].root.refine();
      out[i].root.refine();
    }
  return out;
}

// Order of vanishing of f at alpha (f nonzero).
inline int multiplicity_at(const UniPoly& f, const RealAlgebraic& alpha) {
  if (f.is_zero()) throw InvalidInput("multiplicity in the zero polynomial");
  int k = 0;
  UniPoly d = f;
  while (sign_at(d, alpha) == 0) {
    d = d.derivative();
    ++k;
  }
  return k;
}

// Sign of the leading Taylor coefficient of f at alpha: f = (u-alpha)^m (c + ...).
inline int unit_sign_at(const UniPoly& f, const RealAlgebraic& alpha) {
  if (f.is_zero()) throw InvalidInput("unit sign of the zero polynomial");
  UniPoly d = f;
  int s;
  while ((s = sign_at(d, alpha)) == 0) d = d.derivative();
  return s;
}

struct SeparabilityResult {
  bool separable;
  UniPoly witness;  // gcd(f, f')
};

inline SeparabilityResult separability_check(const UniPoly& f) {
  if (f.is_zero()) throw InvalidInput("separability of the zero polynomial");
  UniPoly g = gcd(f, f.derivative());
  if (f.degree() == 0) g = UniPoly::constant(1);
  return {g.degree() == 0, g};
}

}  // namespace qfib
