#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qfib/symbols.hpp"

namespace qfib {

struct StandardData {
  Rational a, b;
  UniPoly p;
};

// Diagonal quadric-surface bundle <q1, q2, q3, q4>(u) over P^1.
struct FibrationSpec {
  std::array<UniPoly, 4> q;
  std::optional<StandardData> standard;  // set when built from x^2 - a y^2 - b z^2 = u p(u) t^2

  static FibrationSpec diagonal(std::array<UniPoly, 4> q) {
    for (auto& qi : q)
      if (qi.is_zero()) throw InvalidInput("diagonal entries must be nonzero");
    return {std::move(q), std::nullopt};
  }
};

inline FibrationSpec StandardForm(const Rational& a, const Rational& b, const UniPoly& p) {
  if (a == 0 || b == 0) throw InvalidInput("standard form needs nonzero a and b");
  if (p.is_zero()) throw InvalidInput("standard form needs nonzero p");
  FibrationSpec f = FibrationSpec::diagonal(
      {UniPoly::constant(1), UniPoly::constant(-a), UniPoly::constant(-b), -(UniPoly::x() * p)});
  f.standard = StandardData{a, b, p};
  return f;
}

struct DegeneratePoint {
  bool at_infinity = false;
  UniPoly locus;                   // roots over C of this polynomial; u - c for rational c
  std::optional<Rational> rational;
  int corank = 0;
  [[nodiscard]] std::string key() const {
    if (at_infinity) return "inf";
    if (rational) return to_string(*rational);
    return to_string(locus) + "=0";
  }
};

struct TypeClassification {
  bool is_type_I = true;
  std::vector<DegeneratePoint> degenerate_points;
};

namespace detail {

// Product of the squarefree factors appearing with odd multiplicity.
inline UniPoly odd_part(const UniPoly& q) {
  UniPoly out = UniPoly::constant(1);
  auto parts = squarefree_decomposition(q);
  for (std::size_t i = 0; i < parts.size(); i += 2) out = out * parts[i];
  return out.monic();
}

}  // namespace detail

/// Local analysis after reducing each entry modulo squares. At a point the
/// corank is min(#odd, #even) valuations, since the whole form may be scaled
/// by a uniformizer.
inline TypeClassification classify_type_merged(const FibrationSpec& fib) {
  TypeClassification out;
  std::array<UniPoly, 4> odd;
  for (int i = 0; i < 4; ++i) odd[static_cast<std::size_t>(i)] = detail::odd_part(fib.q[static_cast<std::size_t>(i)]);
  for (unsigned mask = 1; mask < 16; ++mask) {
    UniPoly d;
    bool first = true;
    for (unsigned i = 0; i < 4; ++i)
      if (mask & (1u << i)) {
        d = first ? odd[i] : gcd(d, odd[i]);
        first = false;
      }
    for (unsigned j = 0; j < 4 && d.degree() >= 1; ++j)
      if (!(mask & (1u << j))) {
        UniPoly h = gcd(d, odd[j]);
        if (h.degree() >= 1) d = exact_quotient(d, h);
      }
    if (d.degree() < 1) continue;
    int n_odd = __builtin_popcount(mask);
    int corank = std::min(n_odd, 4 - n_odd);
    d = d.monic();
    for (auto& r : isolate_real_roots(d))
      if (r.root.is_rational()) {
        Rational c = r.root.rational_value();
        d = exact_quotient(d, UniPoly::linear_root(c));
        out.degenerate_points.push_back({false, UniPoly::linear_root(c), c, corank});
      }
    if (d.degree() >= 1) out.degenerate_points.push_back({false, d, std::nullopt, corank});
  }
  int n_odd = 0;
  for (auto& qi : fib.q) n_odd += qi.degree() % 2;
  if (int c = std::min(n_odd, 4 - n_odd); c > 0) out.degenerate_points.push_back({true, {}, std::nullopt, c});
  for (auto& dp : out.degenerate_points)
    if (dp.corank > 1) out.is_type_I = false;
  return out;
}

/// Type classification of an admissible model: every entry squarefree and the
/// entries pairwise coprime.
inline TypeClassification classify_type(const FibrationSpec& fib) {
  for (int i = 0; i < 4; ++i) {
    const auto& qi = fib.q[static_cast<std::size_t>(i)];
    if (!is_squarefree(qi)) throw NotAdmissible("entry q" + std::to_string(i + 1) + " is not squarefree");
    for (int j = i + 1; j < 4; ++j)
      if (gcd(qi, fib.q[static_cast<std::size_t>(j)]).degree() >= 1)
        throw NotAdmissible("entries q" + std::to_string(i + 1) + " and q" + std::to_string(j + 1) + " share a factor");
  }
  return classify_type_merged(fib);
}

struct HyperellipticCurve {
  UniPoly rhs;  // w^2 = rhs(v)
  int genus;
  static HyperellipticCurve make(const UniPoly& g) {
    if (g.degree() < 1 || !is_squarefree(g)) throw PreconditionError("hyperelliptic right-hand side must be squarefree and nonconstant");
    return {g, (g.degree() - 1) / 2};
  }
};

/// Discriminant double cover w^2 = a b v p(-v) of a standard form.
inline HyperellipticCurve discriminant_curve(const FibrationSpec& fib) {
  if (!fib.standard) throw PreconditionError("discriminant curve needs a standard form");
  const auto& s = *fib.standard;
  if (!separability_check(s.p).separable) throw PreconditionError("p is not separable");
  if (s.p(0) == 0) throw PreconditionError("p(0) = 0");
  return HyperellipticCurve::make(UniPoly::constant(s.a * s.b) * UniPoly::x() * s.p.reflect());
}

namespace detail {

// A rational strictly between two distinct real points.
inline Rational rational_between(const RealAlgebraic& x, const RealAlgebraic& y) {
  RealAlgebraic a = x, b = y;
  while (a.hi() > b.lo()) {
    a.refine();
    b.refine();
  }
  return (a.hi() + b.lo()) / 2;
}

// One rational sample on each open arc of P^1(R) cut out by the real roots of
// the polys together with infinity. Arcs are listed in circular order starting
// just after infinity.
inline std::vector<Rational> arc_samples(const std::vector<UniPoly>& polys) {
  auto pts = real_points_of(polys);
  if (pts.empty()) return {0};
  std::vector<Rational> out;
  RealAlgebraic first = pts.front().as_real_algebraic(), last = pts.back().as_real_algebraic();
  out.push_back(first.lo() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i)
    out.push_back(rational_between(pts[i - 1].as_real_algebraic(), pts[i].as_real_algebraic()));
  out.push_back(last.hi() + 1);
  return out;
}

// Maximal circular runs of true values.
inline int circular_runs(const std::vector<bool>& flags) {
  if (std::all_of(flags.begin(), flags.end(), [](bool b) { return b; })) return 1;
  int runs = 0;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i] && !flags[(i + flags.size() - 1) % flags.size()]) ++runs;
  return runs;
}

inline bool indefinite_at(const FibrationSpec& fib, const Rational& x) {
  bool pos = false, neg = false;
  for (auto& qi : fib.q) {
    int s = sign(qi(x));
    ensure(s != 0, "arc sample hit a root");
    (s > 0 ? pos : neg) = true;
  }
  return pos && neg;
}

}  // namespace detail

/// Connected components of X(R) for x^2 + y^2 + z^2 = g(u): maximal arcs of
/// P^1(R) on which g > 0.
inline int real_components(const UniPoly& g) {
  if (g.is_zero()) throw InvalidInput("real_components of the zero polynomial");
  if (!is_squarefree(g)) throw PreconditionError("real_components needs squarefree g");
  std::vector<bool> pos;
  for (auto& x : detail::arc_samples({g})) pos.push_back(sign(g(x)) > 0);
  // Without a sign change at infinity the two outer arcs are one arc.
  if (g.degree() % 2 == 0 && pos.size() > 1) pos.pop_back();
  if (g.degree() % 2 == 1 && pos.size() == 1) ensure(false, "odd degree without real roots");
  return detail::circular_runs(pos);
}

/// Same count for a general diagonal bundle: arcs where the fibre form is
/// indefinite, adjacent arcs merged through degenerate fibres.
inline int real_components(const FibrationSpec& fib) {
  std::vector<UniPoly> qs(fib.q.begin(), fib.q.end());
  auto samples = detail::arc_samples(qs);
  std::vector<bool> ind;
  for (auto& x : samples) ind.push_back(detail::indefinite_at(fib, x));
  if (ind.size() > 1 && ind.front() == ind.back()) {
    // Outer arcs meet at infinity; merging them does not change the run count
    // unless every arc is in one run.
    ind.pop_back();
  }
  return detail::circular_runs(ind);
}

/// Generic fibre isotropic on every arc of P^1(R): Witt's theorem gives a
/// section and X is R-rational.
inline bool witt_rational(const FibrationSpec& fib) {
  std::vector<UniPoly> qs(fib.q.begin(), fib.q.end());
  for (auto& x : detail::arc_samples(qs))
    if (!detail::indefinite_at(fib, x)) return false;
  return true;
}

struct BrauerObstruction {
  bool obstructed = false;
  bool disc_is_square = false;
  std::vector<ClosedPointR> T;
};

// Product of the entries is a square in R(u).
inline bool discriminant_is_square(const FibrationSpec& fib) {
  UniPoly d = fib.q[0] * fib.q[1] * fib.q[2] * fib.q[3];
  if (d.lc() < 0) return false;
  auto parts = squarefree_decomposition(d);
  for (std::size_t i = 0; i < parts.size(); i += 2)
    if (parts[i].degree() >= 1) return false;
  return true;
}

/// Points of P^1(R) where the entries split 2+2 by valuation parity and both
/// pairs of residue units have equal signs: the local shape
/// (x^2 + y^2) - t (z^2 + w^2) up to similarity.
inline std::vector<ClosedPointR> brauer_T(const FibrationSpec& fib) {
  std::vector<UniPoly> qs(fib.q.begin(), fib.q.end());
  auto pts = real_points_of(qs);
  pts.push_back(ClosedPointR::infinity());
  std::vector<ClosedPointR> T;
  for (auto& p : pts) {
    std::vector<int> even, odd;
    for (auto& qi : fib.q) {
      LocalUnit lu = local_unit(qi, p);
      (lu.valuation % 2 == 0 ? even : odd).push_back(lu.unit_sign);
    }
    if (even.size() == 2 && even[0] == even[1] && odd[0] == odd[1]) T.push_back(p);
  }
  return T;
}

inline BrauerObstruction brauer_obstruction(const FibrationSpec& fib) {
  if (classify_type_merged(fib).is_type_I) throw PreconditionError("Brauer obstruction criterion needs a fibration not of type I");
  BrauerObstruction out;
  out.disc_is_square = discriminant_is_square(fib);
  out.T = brauer_T(fib);
  out.obstructed = out.disc_is_square ? out.T.size() >= 4 : out.T.size() >= 2;
  return out;
}

}  // namespace qfib
