#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qfib;
using oracle::Gen;

namespace {
UniPoly u() { return UniPoly::x(); }
UniPoly c(long v) { return UniPoly::constant(Rational(v)); }
FibrationSpec diag(UniPoly a, UniPoly b, UniPoly cc, UniPoly d) { return FibrationSpec::diagonal({a, b, cc, d}); }
}  // namespace

TEST(Fibration, StandardFormIsDiagonal) {
  auto f = StandardForm(-1, -1, UniPoly({Rational(1), 0, 1}));
  EXPECT_EQ(f.q[0], c(1));
  EXPECT_EQ(f.q[1], c(1));
  EXPECT_EQ(f.q[2], c(1));
  EXPECT_EQ(f.q[3], -(u() * (u() * u() + c(1))));
  EXPECT_THROW(FibrationSpec::diagonal({c(1), UniPoly(), c(1), c(1)}), InvalidInput);
}

TEST(Fibration, TypeClassification) {
  auto t = classify_type(StandardForm(-1, -1, UniPoly({Rational(1), 0, 1})));
  EXPECT_TRUE(t.is_type_I);
  std::vector<std::string> keys;
  for (auto& p : t.degenerate_points) {
    keys.push_back(p.key());
    EXPECT_EQ(p.corank, 1);
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"0", "u^2+1=0", "inf"}));
  auto ex = diag(c(1), c(1) + u() * u(), -u(), -u());
  EXPECT_THROW(classify_type(ex), NotAdmissible);
  auto s = classify_type_merged(ex);
  EXPECT_FALSE(s.is_type_I);
  bool corank2_zero = false;
  for (auto& p : s.degenerate_points) corank2_zero |= p.rational && *p.rational == 0 && p.corank == 2;
  EXPECT_TRUE(corank2_zero);
  auto inf = classify_type(diag(c(1), u(), c(1), c(1) - u()));
  bool corank2_inf = false;
  for (auto& p : inf.degenerate_points) corank2_inf |= p.at_infinity && p.corank == 2;
  EXPECT_TRUE(corank2_inf);
}

TEST(Fibration, BrauerExamples) {
  auto ex = diag(c(1), c(1) + u() * u(), -u(), -u());
  auto b = brauer_obstruction(ex);
  EXPECT_TRUE(b.obstructed);
  EXPECT_FALSE(b.disc_is_square);
  std::vector<std::string> T;
  for (auto& p : b.T) T.push_back(p.key());
  EXPECT_EQ(T, (std::vector<std::string>{"0", "inf"}));
  EXPECT_EQ(real_components(ex), 1);

  auto sq = brauer_obstruction(diag(c(1), c(1), -u(), -u()));
  EXPECT_TRUE(sq.disc_is_square);
  EXPECT_FALSE(sq.obstructed);

  UniPoly g = u() * (u() - c(1)) * (u() - c(2));
  auto three = brauer_obstruction(diag(c(1), c(1), -g, -g));
  EXPECT_TRUE(three.obstructed);
  EXPECT_EQ(three.T.size(), 4u);

  EXPECT_THROW(brauer_obstruction(StandardForm(-1, -1, UniPoly({Rational(1), 0, 1}))), PreconditionError);
}

TEST(Fibration, ComponentExamples) {
  EXPECT_EQ(real_components(u() * (u() * u() + c(1))), 1);
  EXPECT_EQ(real_components(u() * (u() * u() - c(1))), 2);
  EXPECT_EQ(real_components(-(u() * u()) - c(1)), 0);
  EXPECT_THROW(real_components(u() * u()), PreconditionError);
}

TEST(Fibration, ComponentsAgainstConstruction) {
  Gen g(31);
  for (int t = 0; t < 120; ++t) {
    auto roots = g.distinct(static_cast<std::size_t>(g.integer(1, 5)));
    int sl = g.coin() ? 1 : -1;
    UniPoly f = oracle::poly_from_roots(roots, Rational(sl) * g.positive());
    if (g.coin()) f = f * g.positive_quadratic();
    EXPECT_EQ(real_components(f), oracle::arcs_nonneg(roots, sl, f.degree())) << to_string(f);
    Rational shift = g.rational(), scale = g.nonzero();
    EXPECT_EQ(real_components(f.shift(shift)), real_components(f));
    EXPECT_EQ(real_components(f * UniPoly::constant(scale * scale)), real_components(f));
  }
}

TEST(Fibration, DiscriminantCurve) {
  auto h = discriminant_curve(StandardForm(-1, -1, UniPoly({Rational(1), 0, 1})));
  EXPECT_EQ(h.rhs, u() * u() * u() + u());
  EXPECT_EQ(h.genus, 1);
  EXPECT_THROW(HyperellipticCurve::make(u() * u()), PreconditionError);
}

TEST(Fibration, WittRational) {
  // a = 1: x^2 - y^2 is split, so the fibration is rational.
  EXPECT_TRUE(witt_rational(StandardForm(1, -1, UniPoly({Rational(1), 0, 1}))));
  EXPECT_FALSE(witt_rational(StandardForm(-1, -1, UniPoly({Rational(1), 0, 1}))));
}
