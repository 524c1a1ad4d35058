#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qfib;
using oracle::Gen;

namespace {

UniPoly u() { return UniPoly::x(); }
UniPoly c(long v) { return UniPoly::constant(Rational(v)); }

RatFunc random_ratfunc(Gen& g) {
  auto piece = [&] {
    UniPoly p = UniPoly::constant(g.nonzero());
    for (int i = 0; i < g.integer(0, 2); ++i) p = p * oracle::poly_from_roots({g.rational(5, 2)});
    if (g.coin()) p = p * g.positive_quadratic();
    if (g.integer(0, 3) == 0) p = p * UniPoly({Rational(-2), 0, 1});  // irrational real points
    return p;
  };
  return {piece(), g.coin() ? piece() : UniPoly::constant(1)};
}

}  // namespace

TEST(Symbols, LocalUnitAtInfinity) {
  auto lu = local_unit(UniPoly({Rational(1), 0, -3}), ClosedPointR::infinity());
  EXPECT_EQ(lu.valuation, -2);
  EXPECT_EQ(lu.unit_sign, -1);
  auto l0 = local_unit(u() * u() * (u() - c(2)), ClosedPointR::at(Rational(0)));
  EXPECT_EQ(l0.valuation, 2);
  EXPECT_EQ(l0.unit_sign, -1);
}

TEST(Symbols, SpecProfiles) {
  QuaternionSymbol s{RatFunc(-(u() * (u() * u() + c(1)))), RatFunc(u() + c(1))};
  auto prof = residue_profile(s);
  EXPECT_TRUE(prof.all_trivial());
  QuaternionSymbol t{RatFunc(c(-1)), RatFunc(u())};
  auto pt = residue_profile(t);
  EXPECT_EQ(pt.nontrivial_keys(), (std::vector<std::string>{"0", "inf"}));
  EXPECT_EQ(faddeev_decide(t).kind, FaddeevResult::Kind::Ramified);
  EXPECT_EQ(faddeev_decide({RatFunc(c(-1)), RatFunc(c(-1))}).kind, FaddeevResult::Kind::ConstantNontrivial);
  EXPECT_EQ(faddeev_decide({RatFunc(c(1)), RatFunc(u())}).kind, FaddeevResult::Kind::Trivial);
}

TEST(Symbols, TameSymbolFormula) {
  // (u, u) = (u, -1): nontrivial at 0 and infinity.
  QuaternionSymbol s{RatFunc(u()), RatFunc(u())};
  EXPECT_TRUE(tame_residue(s, ClosedPointR::at(Rational(0))));
  EXPECT_TRUE(tame_residue(s, ClosedPointR::infinity()));
  EXPECT_FALSE(tame_residue(s, ClosedPointR::at(Rational(1))));
}

TEST(Symbols, ParityAndSteinberg) {
  Gen g(21);
  for (int t = 0; t < 200; ++t) {
    RatFunc f = random_ratfunc(g), h = random_ratfunc(g);
    EXPECT_EQ(residue_profile({f, h}).nontrivial_count() % 2, 0u);
    RatFunc one_minus = RatFunc(c(1)) - f;
    if (!(one_minus == RatFunc())) { EXPECT_TRUE(residue_profile({f, one_minus}).all_trivial()); }
    EXPECT_TRUE(residue_profile({f, RatFunc(c(-1)) * f}).all_trivial());
  }
}

TEST(Symbols, ResidueSymmetryAndSquares) {
  Gen g(22);
  for (int t = 0; t < 100; ++t) {
    RatFunc f = random_ratfunc(g), h = random_ratfunc(g);
    auto a = residue_profile({f, h}), b = residue_profile({h, f});
    EXPECT_EQ(a.nontrivial_keys(), b.nontrivial_keys());
    EXPECT_TRUE(residue_profile({f, h * h}).all_trivial());
  }
}

TEST(Symbols, RatFuncRoundTrip) {
  RatFunc f = parse_ratfunc("1,0,1|0,2");
  EXPECT_EQ(to_string(f), "1/2,0,1/2|0,1");
  EXPECT_EQ(parse_ratfunc(to_string(f)), f);
  EXPECT_THROW(parse_ratfunc("1|0"), InvalidInput);
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_symbol(-1, -3, Place::prime(3)), -1);
  EXPECT_EQ(hilbert_symbol(2, 3, Place::prime(5)), 1);
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::infinite()), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::prime(2)), -1);
  EXPECT_EQ(hilbert_symbol(2, 5, Place::prime(2)), -1);
  EXPECT_THROW(Place::prime(4), InvalidInput);
  EXPECT_THROW(hilbert_symbol(0, 1, Place::prime(3)), InvalidInput);
}

TEST(Hilbert, AgainstBruteForce) {
  Gen g(23);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 40; ++t) {
      long a = g.integer(-30, 30), b = g.integer(-30, 30);
      if (a == 0 || b == 0) continue;
      EXPECT_EQ(hilbert_symbol(Rational(a), Rational(b), Place::prime(p)), oracle::brute_hilbert(a, b, p))
          << "(" << a << "," << b << ")_" << p;
    }
  }
}

TEST(Hilbert, RationalArgumentsAndSquareClasses) {
  Gen g(24);
  for (int t = 0; t < 100; ++t) {
    Rational a = g.nonzero(), b = g.nonzero(), s = g.nonzero();
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      EXPECT_EQ(hilbert_symbol(a, b, Place::prime(p)), hilbert_symbol(a * s * s, b, Place::prime(p)));
      EXPECT_EQ(hilbert_symbol(a, b, Place::prime(p)), hilbert_symbol(b, a, Place::prime(p)));
      EXPECT_EQ(hilbert_symbol(a, -a, Place::prime(p)), 1);
    }
  }
}
