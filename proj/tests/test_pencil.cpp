#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qfib;
using oracle::Gen;

namespace {

QuadricPencil singular_pair() {
  // x^2 + y^2 + u^2 - u w and w y - z^2 - t^2 in coordinates (x, y, u, w, z, t).
  Matrix6 f{}, g{};
  f[0][0] = f[1][1] = f[2][2] = 1;
  f[2][3] = f[3][2] = Rational(-1, 2);
  g[1][3] = g[3][1] = Rational(1, 2);
  g[4][4] = g[5][5] = -1;
  return {f, g};
}

Matrix6 random_symmetric(Gen& gen) {
  Matrix6 m{};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) m[i][j] = m[j][i] = Rational(gen.integer(-3, 3));
  return m;
}

}  // namespace

TEST(Pencil, DiagonalAgainstProduct) {
  QuadricPencil P{diagonal_matrix({1, 1, 1, 1, 1, 1}), diagonal_matrix({0, 1, 2, 3, 4, 5})};
  auto s = pencil_sextic(P);
  auto expect = oracle::diagonal_sextic({1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5});
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(s.coeffs[i], expect[i]);
  EXPECT_TRUE(pencil_separable(P).separable);
  auto d = pencil_delta(P);
  EXPECT_EQ(d.genus, 2);
  UniPoly prod = UniPoly::constant(-1);
  for (long i = 0; i < 6; ++i) prod = prod * UniPoly({Rational(i), 1});
  EXPECT_EQ(d.rhs, prod);
}

TEST(Pencil, RandomDiagonal) {
  Gen g(61);
  for (int t = 0; t < 50; ++t) {
    std::array<Rational, 6> a, b;
    for (std::size_t i = 0; i < 6; ++i) {
      a[i] = g.rational(6, 3);
      b[i] = g.rational(6, 3);
    }
    auto s = pencil_sextic({diagonal_matrix(a), diagonal_matrix(b)});
    auto expect = oracle::diagonal_sextic(a, b);
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(s.coeffs[i], expect[i]);
  }
}

TEST(Pencil, EqualQuadrics) {
  Gen g(62);
  Matrix6 f = random_symmetric(g);
  while (determinant(f) == 0) f = random_symmetric(g);
  QuadricPencil P{f, f};
  auto s = pencil_sextic(P);
  // det(f) (lambda + mu)^6
  const long binom[7] = {1, 6, 15, 20, 15, 6, 1};
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(s.coeffs[i], determinant(f) * binom[i]);
  EXPECT_FALSE(pencil_separable(P).separable);
}

TEST(Pencil, SingularPairFails) {
  auto P = singular_pair();
  auto s = pencil_sextic(P);
  EXPECT_EQ(to_string(s), "-1/4*l^4*m^2-1/4*l^2*m^4");
  EXPECT_FALSE(pencil_separable(P).separable);
  EXPECT_THROW(pencil_delta(P), PreconditionError);
}

TEST(Pencil, EndpointsAndEquivariance) {
  Gen g(63);
  for (int t = 0; t < 20; ++t) {
    QuadricPencil P{random_symmetric(g), random_symmetric(g)};
    auto s = pencil_sextic(P);
    EXPECT_EQ(s(1, 0), determinant(P.f));
    EXPECT_EQ(s(0, 1), determinant(P.g));
    // Substitution (lambda, mu) -> (a l + b m, c l + d m): the pencil (a f + c g, b f + d g).
    long a = g.integer(-2, 2), b = g.integer(-2, 2), c = g.integer(-2, 2), d = g.integer(-2, 2);
    QuadricPencil Q;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        Q.f[i][j] = a * P.f[i][j] + c * P.g[i][j];
        Q.g[i][j] = b * P.f[i][j] + d * P.g[i][j];
      }
    auto sq = pencil_sextic(Q);
    for (int k = 0; k < 3; ++k) {
      Rational l = g.rational(), m = g.rational();
      EXPECT_EQ(sq(l, m), s(a * l + b * m, c * l + d * m));
    }
  }
}

TEST(Pencil, ZeroPencilIsDegenerate) {
  QuadricPencil P{};
  EXPECT_THROW(pencil_separable(P), DegeneratePencil);
}

TEST(Pencil, Parsing) {
  EXPECT_THROW(symmetric_from_upper(std::vector<Rational>(20, 0)), InvalidInput);
  auto v = parse_rational_list("1 0, 0;1/2");
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[3], Rational(1, 2));
}
