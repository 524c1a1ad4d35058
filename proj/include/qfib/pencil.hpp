#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "qfib/fibration.hpp"

namespace qfib {

using Matrix6 = std::array<std::array<Rational, 6>, 6>;

// Pencil of quadrics in P^5 given by symmetric Gram matrices.
struct QuadricPencil {
  Matrix6 f{}, g{};
};

inline Matrix6 symmetric_from_upper(const std::vector<Rational>& upper) {
  if (upper.size() != 21) throw InvalidInput("a quadric needs 21 upper-triangle entries, got " + std::to_string(upper.size()));
  Matrix6 m{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) m[i][j] = m[j][i] = upper[k++];
  return m;
}

// Whitespace- or comma-separated rationals.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::string s(text);
  for (auto& c : s)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(s);
  std::vector<Rational> out;
  for (std::string tok; in >> tok;) out.push_back(parse_rational(tok));
  return out;
}

inline Matrix6 diagonal_matrix(const std::array<Rational, 6>& d) {
  Matrix6 m{};
  for (std::size_t i = 0; i < 6; ++i) m[i][i] = d[i];
  return m;
}

// Exact determinant by Gaussian elimination over Q.
inline Rational determinant(Matrix6 m) {
  Rational det = 1;
  for (std::size_t c = 0; c < 6; ++c) {
    std::size_t piv = c;
    while (piv < 6 && m[piv][c] == 0) ++piv;
    if (piv == 6) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < 6; ++r) {
      if (m[r][c] == 0) continue;
      Rational k = m[r][c] / m[c][c];
      for (std::size_t j = c; j < 6; ++j) m[r][j] -= k * m[c][j];
    }
  }
  return det;
}

// Binary sextic: coeffs[i] multiplies lambda^(6-i) mu^i.
struct BinarySextic {
  std::array<Rational, 7> coeffs{};
  [[nodiscard]] bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
  }
  // Dehomogenized at lambda = 1: polynomial in t = mu/lambda.
  [[nodiscard]] UniPoly dehomogenized() const { return UniPoly(std::vector<Rational>(coeffs.begin(), coeffs.end())); }
  // Dehomogenized at mu = 1: polynomial in u = lambda/mu.
  [[nodiscard]] UniPoly in_lambda() const { return UniPoly(std::vector<Rational>(coeffs.rbegin(), coeffs.rend())); }
  [[nodiscard]] Rational operator()(const Rational& lambda, const Rational& mu) const {
    Rational s = 0;
    for (std::size_t i = 0; i < 7; ++i) s += coeffs[i] * pow(lambda, 6 - i) * pow(mu, i);
    return s;
  }
};

/// det(lambda f + mu g) by evaluating det(f + t g) at t = 0..6 and interpolating.
inline BinarySextic pencil_sextic(const QuadricPencil& P) {
  std::vector<Rational> xs, ys;
  for (long t = 0; t <= 6; ++t) {
    Matrix6 m;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m[i][j] = P.f[i][j] + t * P.g[i][j];
    xs.emplace_back(t);
    ys.push_back(determinant(m));
  }
  // Lagrange interpolation.
  UniPoly h;
  for (std::size_t i = 0; i < 7; ++i) {
    UniPoly basis = UniPoly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < 7; ++j) {
      if (j == i) continue;
      basis = basis * UniPoly::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    h = h + basis * UniPoly::constant(ys[i] / denom);
  }
  BinarySextic s;
  for (std::size_t i = 0; i < 7; ++i) s.coeffs[i] = h.coeff(i);
  return s;
}

inline std::string to_string(const BinarySextic& s) {
  std::string out;
  for (std::size_t i = 0; i < 7; ++i) {
    const Rational& c = s.coeffs[i];
    if (c == 0) continue;
    std::string mono;
    auto var = [&](const char* n, std::size_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += n;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("l", 6 - i);
    var("m", i);
    Rational a = abs(c);
    std::string body = a == 1 ? mono : to_string(a) + "*" + mono;
    out += (c < 0 ? "-" : (out.empty() ? "" : "+")) + body;
  }
  return out.empty() ? "0" : out;
}

struct PencilSeparability {
  bool separable;
  int multiplicity_at_infinity;  // of the root lambda = 0
};

/// Six distinct roots on P^1: squarefree in t and at most a simple root at lambda = 0.
inline PencilSeparability pencil_separable(const QuadricPencil& P) {
  BinarySextic s = pencil_sextic(P);
  if (s.is_zero()) throw DegeneratePencil("det(lambda f + mu g) vanishes identically");
  UniPoly h = s.dehomogenized();
  int at_inf = 6 - h.degree();
  return {is_squarefree(h) && at_inf <= 1, at_inf};
}

/// Genus-2 curve w^2 = -det(u f + g).
inline HyperellipticCurve pencil_delta(const QuadricPencil& P) {
  if (!pencil_separable(P).separable) throw PreconditionError("pencil is singular or degenerate: sextic not separable");
  return HyperellipticCurve::make(-pencil_sextic(P).in_lambda());
}

}  // namespace qfib
