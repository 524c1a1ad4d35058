#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qfib;
using oracle::Gen;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(parse_rational(" 7 ")), "7");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(Rational, SquaresAndFactor) {
  EXPECT_TRUE(is_rational_square(Rational(9, 4)));
  EXPECT_FALSE(is_rational_square(Rational(2)));
  EXPECT_FALSE(is_rational_square(Rational(-1)));
  auto [sq, fr] = split_square(Integer(72));
  EXPECT_EQ(sq, 6);
  EXPECT_EQ(fr, 2);
  Integer n("1000000016000000063");  // (10^9+7)(10^9+9)
  auto f = factor(n);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.begin()->first, Integer(1000000007));
  EXPECT_EQ(valuation(Integer(48), Integer(2)), 4);
}

TEST(UniPoly, CoeffListRoundTrip) {
  UniPoly p = parse_coeff_list("1,0,-3/2,2");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(to_coeff_list(p), "1,0,-3/2,2");
  EXPECT_EQ(parse_coeff_list(to_coeff_list(p)), p);
  EXPECT_THROW(parse_coeff_list("1,,2"), InvalidInput);
}

TEST(UniPoly, GcdAgainstEuclidOracle) {
  Gen g(11);
  for (int t = 0; t < 200; ++t) {
    auto common = oracle::poly_from_roots(g.distinct(static_cast<std::size_t>(g.integer(0, 2))));
    UniPoly a = common * oracle::poly_from_roots(g.distinct(2), g.nonzero());
    UniPoly b = common * g.positive_quadratic() * UniPoly::constant(g.nonzero());
    auto expect = oracle::euclid_gcd(oracle::coeffs_of(a), oracle::coeffs_of(b));
    EXPECT_EQ(oracle::coeffs_of(qfib::gcd(a, b)), expect);
  }
}

TEST(UniPoly, ResultantAgainstSylvester) {
  Gen g(12);
  for (int t = 0; t < 150; ++t) {
    std::vector<Rational> ca, cb;
    int da = static_cast<int>(g.integer(1, 5)), db = static_cast<int>(g.integer(1, 4));
    for (int i = 0; i <= da; ++i) ca.push_back(i == da ? g.nonzero() : g.rational());
    for (int i = 0; i <= db; ++i) cb.push_back(i == db ? g.nonzero() : g.rational());
    UniPoly a(ca), b(cb);
    EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a, b));
  }
}

TEST(UniPoly, DiscriminantExamples) {
  EXPECT_EQ(discriminant(UniPoly({Rational(-2), 0, 1})), 8);
  EXPECT_EQ(discriminant(UniPoly({Rational(-1), -1, 0, 0, 0, 1})), 2869);
  EXPECT_EQ(discriminant(UniPoly({Rational(16), 20, 0, 0, 0, 1})), Integer("1024000000"));
}

TEST(UniPoly, SquarefreeDecomposition) {
  UniPoly x = UniPoly::x();
  UniPoly f = x * (x - UniPoly::constant(1)).pow(2) * (x * x + UniPoly::constant(1)).pow(3);
  auto parts = squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], x);
  EXPECT_EQ(parts[1], x - UniPoly::constant(1));
  EXPECT_EQ(parts[2], x * x + UniPoly::constant(1));
  EXPECT_FALSE(is_squarefree(f));
}

TEST(Sturm, SpecIsolation) {
  auto r = isolate_real_roots(UniPoly({Rational(-2), 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].root.lo(), -2);
  EXPECT_EQ(r[0].root.hi(), -1);
  EXPECT_EQ(r[1].root.lo(), 1);
  EXPECT_EQ(r[1].root.hi(), 2);
  auto c = isolate_real_roots(UniPoly({Rational(0), 0, 0, 1}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].multiplicity, 3);
  EXPECT_TRUE(c[0].root.is_rational());
  EXPECT_TRUE(isolate_real_roots(UniPoly({Rational(1), 0, 1})).empty());
  EXPECT_THROW(isolate_real_roots(UniPoly()), InvalidInput);
}

TEST(Sturm, RootCountByConstruction) {
  Gen g(13);
  for (int t = 0; t < 150; ++t) {
    auto roots = g.distinct(static_cast<std::size_t>(g.integer(0, 5)));
    UniPoly f = oracle::poly_from_roots(roots, g.nonzero());
    for (int q = 0; q < g.integer(0, 2); ++q) f = f * g.positive_quadratic();
    if (f.degree() < 1) continue;
    EXPECT_EQ(sturm_root_count(f, ExtRational::neg_inf(), ExtRational::pos_inf()), static_cast<int>(roots.size()));
    auto iso = isolate_real_roots(f);
    ASSERT_EQ(iso.size(), roots.size());
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_TRUE(iso[i].root.is_rational());
      EXPECT_EQ(iso[i].root.rational_value(), roots[i]);
      if (i + 1 < roots.size()) { EXPECT_LE(iso[i].root.hi(), iso[i + 1].root.lo()); }
    }
    Rational a = g.rational(), b = a + g.positive(5, 3);
    SCOPED_TRACE(to_string(f) + " on (" + to_string(a) + "," + to_string(b) + "]");
    int expect = 0;
    for (auto& r : roots) expect += (r > a && r <= b) ? 1 : 0;
    EXPECT_EQ(sturm_root_count(f, a, b), expect);
  }
}

TEST(Sturm, IrrationalRootsDisjointAndContain) {
  // (u^2 - 2)(u^2 - 3)(u - 3/2): five simple roots.
  UniPoly f = UniPoly({Rational(-2), 0, 1}) * UniPoly({Rational(-3), 0, 1}) * UniPoly({Rational(-3, 2), 1});
  auto iso = isolate_real_roots(f);
  ASSERT_EQ(iso.size(), 5u);
  std::vector<double> expect{-std::sqrt(3.0), -std::sqrt(2.0), std::sqrt(2.0), 1.5, std::sqrt(3.0)};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(iso[i].root.to_double(), expect[i], 1e-9);
    EXPECT_LE(iso[i].root.lo().get_d(), expect[i]);
    EXPECT_GE(iso[i].root.hi().get_d(), expect[i]);
    if (i + 1 < 5) { EXPECT_LE(iso[i].root.hi(), iso[i + 1].root.lo()); }
  }
}

TEST(Sturm, SignAtAlgebraic) {
  auto r = isolate_real_roots(UniPoly({Rational(-2), 0, 1}));
  const RealAlgebraic& s2 = r[1].root;
  EXPECT_EQ(sign_at(UniPoly({Rational(-2), 0, 1}), s2), 0);
  EXPECT_EQ(sign_at(UniPoly({Rational(-3), 2}), s2), -1);
  EXPECT_EQ(sign_at(UniPoly({Rational(-4), 0, 0, 0, 1}), s2), 0);
  EXPECT_EQ(sign_at(UniPoly({Rational(-4), 0, 0, 0, 2}), s2), 1);
  EXPECT_EQ(sign_at(UniPoly({Rational(-141, 100), 1}), s2), 1);
  EXPECT_EQ(compare(r[0].root, s2), -1);
  EXPECT_EQ(compare(s2, RealAlgebraic::rational(Rational(3, 2))), -1);
}

TEST(Sturm, Separability) {
  EXPECT_TRUE(separability_check(UniPoly({Rational(0), 1, 0, 1})).separable);
  auto s = separability_check(UniPoly({Rational(1), -2, 1}));
  EXPECT_FALSE(s.separable);
}

TEST(BiPoly, ExactDivisionByUPlusV) {
  BiPoly r = exact_div_u_plus_v(UniPoly({Rational(1), 0, 1}));
  EXPECT_EQ(to_string(r), "u^2-u*v+v^2+1");
  Gen g(14);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> c;
    int d = static_cast<int>(g.integer(1, 6));
    for (int i = 0; i <= d; ++i) c.push_back(i == d ? g.nonzero() : g.rational());
    UniPoly p(c);
    BiPoly q = exact_div_u_plus_v(p);
    // (u + v) q = u p(u) + v p(-v), checked at random points.
    for (int k = 0; k < 3; ++k) {
      Rational u = g.rational(), v = g.rational();
      EXPECT_EQ((u + v) * q(u, v), u * p(u) + v * p(-v));
    }
    EXPECT_EQ(parse_term_list(to_term_list(q)), q);
  }
}

TEST(Expr, ParserBasics) {
  RFrac f = parse_expression("(x*u - 1/2*sqrt(3)*y)/(u^2+1)");
  EXPECT_EQ(to_string(f), "(x*u-1/2*sqrt(3)*y)/(u^2+1)");
  EXPECT_EQ(parse_univariate("2*u^3 - u + 1/2"), UniPoly({Rational(1, 2), -1, 0, 2}));
  EXPECT_THROW(parse_expression("x +"), InvalidInput);
  EXPECT_THROW(parse_expression("sqrt(u)"), InvalidInput);
  EXPECT_EQ(parse_poly_any("1,0,1"), parse_poly_any("u^2+1"));
}
