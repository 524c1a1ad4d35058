#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qfib;
using oracle::Gen;

namespace {

UniPoly quad(const Rational& a, const Rational& b) { return UniPoly({b, a, Rational(1)}); }

// Random small polynomial in u, v with rational coefficients.
RPoly random_uv(Gen& g) {
  RPoly f;
  for (int k = 0; k < 3; ++k) {
    Monomial m{};
    m[U] = static_cast<unsigned>(g.integer(0, 2));
    m[V] = static_cast<unsigned>(g.integer(0, 1));
    f.add(m, Radical(g.rational(5, 3)));
  }
  if (f.is_zero()) f = RPoly(Radical(Rational(1)));
  return f;
}

SOSCertificate plain_cert(Gen& g) {
  SOSCertificate c;
  RPoly sum;
  for (int i = 0; i < g.integer(1, 4); ++i) {
    RPoly e = random_uv(g);
    c.entries.emplace_back(e);
    sum += e * e;
  }
  c.target = RFrac(sum);
  return c;
}

}  // namespace

TEST(SOS, VerifyRejectsWrongTarget) {
  SOSCertificate c{{RFrac(RPoly(Radical(Rational(1))))}, RFrac(RPoly(Radical(Rational(2)))), Ring::PlainBivariate, {}};
  EXPECT_FALSE(verify(c));
  c.target = RFrac(RPoly(Radical(Rational(1))));
  EXPECT_TRUE(verify(c));
}

TEST(SOS, RCertificatesExpandToR) {
  for (auto p : {quad(0, 1), quad(-3, 3), quad(3, 5), quad(Rational(1, 2), 7)}) {
    auto a = criterion_A(p);
    ASSERT_TRUE(a.has_value());
    EXPECT_TRUE(verify(a->three_squares));
    EXPECT_TRUE(verify(a->rational));
    EXPECT_LE(a->three_squares.entries.size(), 3u);
    for (auto& e : a->rational.entries)
      for (auto& [m, co] : e.num.terms()) EXPECT_TRUE(co.is_rational());
  }
  EXPECT_FALSE(criterion_A(quad(0, -1)).has_value());
  EXPECT_FALSE(criterion_A(quad(2, Rational(5, 4))).has_value());  // a^2/4 < b < a^2/3
}

TEST(SOS, UPlusVNumericOracle) {
  Gen g(41);
  for (auto p : {quad(0, 1), quad(-3, 3), quad(1, 1)}) {
    SOSCertificate cert = certify_u_plus_v(p);
    EXPECT_EQ(cert.entries.size(), 4u);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 20; ++t) {
      auto pt = oracle::point_on_W(p, g.rational(3, 2), g.rational(3, 2), g.rational(5, 1), g.rational(5, 1));
      if (!pt) continue;
      if (std::abs(oracle::eval(cert.target, *pt).d()) < 1e-6) continue;
      EXPECT_LT(oracle::sos_residual(cert, *pt), 1e-50);
      ++checked;
    }
    EXPECT_GT(checked, 5);
  }
}

TEST(SOS, UPlusVIsNotAnIdentityOffW) {
  // Off the variety the same entries do not square-sum to u + v.
  SOSCertificate cert = certify_u_plus_v(quad(0, 1));
  cert.ring = Ring::PlainBivariate;
  EXPECT_FALSE(verify(cert));
}

TEST(SOS, EulerAndDivisionPlain) {
  Gen g(42);
  for (int t = 0; t < 60; ++t) {
    auto s = plain_cert(g), r = plain_cert(g);
    auto comp = euler_compose(s, r);
    EXPECT_TRUE(verify(comp));
    auto div = divide_cert(s, r);
    EXPECT_TRUE(verify(div));
    std::array<oracle::Real, 6> pt{oracle::Real(0), oracle::Real(0), oracle::Real(0), oracle::Real(0), oracle::Real(g.rational()),
                                   oracle::Real(g.rational())};
    if (std::abs(oracle::eval(r.target, pt).d()) > 1e-9) { EXPECT_LT(oracle::sos_residual(div, pt), 1e-50); }
    EXPECT_LT(oracle::sos_residual(comp, pt), 1e-50);
  }
}

TEST(SOS, EulerExample) {
  auto one = RFrac(RPoly(Radical(Rational(1))));
  SOSCertificate a{{one, one}, RFrac(RPoly(Radical(Rational(2)))), Ring::PlainBivariate, {}};
  SOSCertificate b{{one, one, one}, RFrac(RPoly(Radical(Rational(3)))), Ring::PlainBivariate, {}};
  auto c = euler_compose(a, b);
  EXPECT_TRUE(verify(c));
  EXPECT_EQ(to_string(c.target), "6");
  SOSCertificate zero{{}, RFrac(), Ring::PlainBivariate, {}};
  EXPECT_THROW(divide_cert(a, zero), ZeroDivisor);
  SOSCertificate w = a;
  w.ring = Ring::QuotientW;
  w.p = quad(0, 1);
  EXPECT_THROW(euler_compose(a, w), PreconditionError);
}

TEST(SOS, LagrangeFourSquares) {
  Gen g(43);
  for (int t = 0; t < 300; ++t) {
    Integer n = Integer(g.integer(0, 1000000)) * Integer(g.integer(1, 1000000));
    auto s = lagrange_four_squares(n);
    EXPECT_EQ(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3], n);
  }
  Rational q(7, 3);
  auto r = rational_four_squares(q);
  EXPECT_EQ(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3], q);
  EXPECT_THROW(rational_four_squares(Rational(-1)), InvalidInput);
}

TEST(SOS, CertificateJsonRoundTrip) {
  SOSCertificate cert = certify_u_plus_v(quad(0, 1));
  auto j = io::to_json(cert);
  auto back = io::certificate_from(json::parse(j.dump()));
  EXPECT_TRUE(verify(back));
  EXPECT_EQ(io::to_json(back).dump(), j.dump());
  auto bad = j;
  bad["target"] = "u+v+1";
  EXPECT_FALSE(verify(io::certificate_from(bad)));
}
