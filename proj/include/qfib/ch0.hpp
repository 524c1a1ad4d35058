#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "qfib/bipoly.hpp"
#include "qfib/fibration.hpp"
#include "qfib/modp.hpp"
#include "qfib/soscert.hpp"

namespace qfib {

using json = nlohmann::json;

/// Conditions on p for the fibration x^2 + y^2 + z^2 = u p(u): separable,
/// monic, nonconstant, even degree, p(0) != 0, positive on R. Empty = ok.
inline std::vector<std::string> situation_check(const UniPoly& p) {
  std::vector<std::string> v;
  if (p.is_zero()) return {"p is zero"};
  if (p.degree() < 1) v.emplace_back("p is constant");
  if (p.degree() >= 1 && !separability_check(p).separable) v.emplace_back("p is not separable");
  if (p.lc() != 1) v.emplace_back("p is not monic");
  if (p.degree() % 2 != 0) v.emplace_back("p has odd degree");
  if (p(0) == 0) v.emplace_back("p(0) = 0");
  bool positive = p(0) > 0 && (p.degree() < 1 || sturm_root_count(p, ExtRational::neg_inf(), ExtRational::pos_inf()) == 0);
  if (!positive) v.emplace_back("p is not positive on R");
  return v;
}

// Quadratic criterion: p = u^2 + a u + b with b >= a^2/3.
struct CriterionA {
  Rational a, b, c;             // c = b - a^2/3
  SOSCertificate three_squares;  // r = s1^2 + s2^2 + (sqrt c)^2, radical coefficients
  SOSCertificate rational;       // same r, all entries rational, up to 8 squares
  BiPoly r;
};

inline std::optional<CriterionA> criterion_A(const UniPoly& p) {
  auto q = quadratic_with_small_a(p);
  if (!q) return std::nullopt;
  CriterionA out{q->a, q->b, q->c(), r_certificate(p), r_rational_certificate(p), exact_div_u_plus_v(p)};
  ensure(verify(out.three_squares) && verify(out.rational), "criterion A certificate does not expand to r");
  return out;
}

struct CriterionB {
  bool pass;
  std::string reason;
};

/// Even monic p with a0 > 0 and every even coefficient >= 0 makes r >= 0 on R^2.
inline CriterionB criterion_B(const UniPoly& p) {
  if (p.degree() < 2 || p.degree() % 2 != 0) return {false, "degree is not even and positive"};
  if (p.lc() != 1) return {false, "not monic"};
  for (int i = 1; i <= p.degree(); i += 2)
    if (p.coeff(static_cast<std::size_t>(i)) != 0) return {false, "odd coefficient a" + std::to_string(i) + " is nonzero"};
  if (p.coeff(0) <= 0) return {false, "a0 <= 0"};
  for (int i = 2; i < p.degree(); i += 2)
    if (p.coeff(static_cast<std::size_t>(i)) < 0) return {false, "a" + std::to_string(i) + " < 0"};
  return {true, "even, monic, a0 > 0, all even coefficients nonnegative"};
}

// f >= 0 on all of R.
inline bool nonnegative_on_R(const UniPoly& f) {
  if (f.is_zero()) return true;
  auto parts = squarefree_decomposition(f);
  UniPoly odd = UniPoly::constant(1);
  for (std::size_t i = 0; i < parts.size(); i += 2) odd = odd * parts[i];
  if (odd.degree() >= 1 && sturm_root_count(odd, ExtRational::neg_inf(), ExtRational::pos_inf()) > 0) return false;
  for (long x = 0;; ++x)
    for (long s : {1L, -1L})
      if (Rational val = f(Rational(s * x)); val != 0) return val > 0;
}

struct PositivityResult {
  enum class Kind { PatternCertified, Counterexample, Unknown };
  Kind kind = Kind::Unknown;
  int pattern = 0;                // 1: only even components; 2: quadratic blocks
  std::vector<Rational> splits;   // share of each shared even component given to the block below it
  std::optional<std::pair<Rational, Rational>> point;
  std::optional<Rational> value;
  std::string note;
};

inline std::string to_string(PositivityResult::Kind k) {
  switch (k) {
    case PositivityResult::Kind::PatternCertified:
      return "PatternCertified";
    case PositivityResult::Kind::Counterexample:
      return "Counterexample";
    case PositivityResult::Kind::Unknown:
      return "Unknown";
  }
  return "?";
}

namespace detail {

// r(tv, v) = sum_e c_e(t) v^e.
inline std::vector<UniPoly> homogeneous_components(const BiPoly& r) {
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(std::max(r.total_degree(), 0)) + 1);
  for (auto& [k, coef] : r.terms()) {
    auto& ce = c[static_cast<std::size_t>(k.first + k.second)];
    if (ce.size() <= static_cast<std::size_t>(k.first)) ce.resize(static_cast<std::size_t>(k.first) + 1);
    ce[static_cast<std::size_t>(k.first)] += coef;
  }
  std::vector<UniPoly> out;
  for (auto& ce : c) out.emplace_back(ce);
  return out;
}

inline bool blocks_certify(const std::vector<UniPoly>& c, const std::vector<int>& odd, const std::vector<std::pair<int, Rational>>& lower_share) {
  auto share_low = [&](int e) -> Rational {  // part of c_e given to block e-1
    for (auto& [ee, s] : lower_share)
      if (ee == e) return s;
    return -1;
  };
  auto has_block = [&](int o) { return std::find(odd.begin(), odd.end(), o) != odd.end(); };
  int D = static_cast<int>(c.size()) - 1;
  for (int o : odd) {
    if (o + 1 > D) return false;
    UniPoly lo = c[static_cast<std::size_t>(o - 1)], hi = c[static_cast<std::size_t>(o + 1)];
    if (has_block(o - 2)) {
      Rational s = share_low(o - 1);
      lo = lo * UniPoly::constant(1 - s);
    }
    if (has_block(o + 2)) {
      Rational s = share_low(o + 1);
      hi = hi * UniPoly::constant(s);
    }
    const UniPoly& mid = c[static_cast<std::size_t>(o)];
    if (!nonnegative_on_R(lo) || !nonnegative_on_R(hi)) return false;
    if (!nonnegative_on_R(UniPoly::constant(4) * lo * hi - mid * mid)) return false;
  }
  return true;
}

inline double eval_double(const BiPoly& r, double u, double v) {
  double s = 0;
  for (auto& [k, c] : r.terms()) s += c.get_d() * std::pow(u, k.first) * std::pow(v, k.second);
  return s;
}

}  // namespace detail

/// Sound, incomplete test of r(u,v) >= 0 on R^2 via u = t v, plus a search
/// for a point where r < 0.
inline PositivityResult positivity_rtv(const UniPoly& p) {
  PositivityResult res;
  BiPoly r = exact_div_u_plus_v(p);
  auto c = detail::homogeneous_components(r);
  int D = static_cast<int>(c.size()) - 1;
  std::vector<int> odd;
  for (int e = 1; e <= D; e += 2)
    if (!c[static_cast<std::size_t>(e)].is_zero()) odd.push_back(e);
  auto near_block = [&](int e) {
    return std::find(odd.begin(), odd.end(), e - 1) != odd.end() || std::find(odd.begin(), odd.end(), e + 1) != odd.end();
  };
  bool standalone_ok = true;
  for (int e = 0; e <= D; e += 2)
    if (!near_block(e) && !nonnegative_on_R(c[static_cast<std::size_t>(e)])) standalone_ok = false;

  if (odd.empty() && standalone_ok) {
    res.kind = PositivityResult::Kind::PatternCertified;
    res.pattern = 1;
    return res;
  }
  if (!odd.empty() && standalone_ok) {
    std::vector<int> shared;
    for (int e = 2; e <= D; e += 2)
      if (std::find(odd.begin(), odd.end(), e - 1) != odd.end() && std::find(odd.begin(), odd.end(), e + 1) != odd.end())
        shared.push_back(e);
    std::vector<Rational> grid;
    int g = shared.size() <= 2 ? 8 : 4;
    for (int k = 1; k < g; ++k) grid.push_back(make_rational(k, g));
    std::vector<std::size_t> idx(shared.size(), 0);
    while (true) {
      std::vector<std::pair<int, Rational>> share;
      for (std::size_t i = 0; i < shared.size(); ++i) share.emplace_back(shared[i], grid[idx[i]]);
      if (detail::blocks_certify(c, odd, share)) {
        res.kind = PositivityResult::Kind::PatternCertified;
        res.pattern = 2;
        for (auto& s : share) res.splits.push_back(s.second);
        return res;
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }

  // Exact grid scan, step 1/3 on [-5, 5]^2.
  std::optional<Rational> best;
  for (long i = -15; i <= 15; ++i)
    for (long j = -15; j <= 15; ++j) {
      Rational u = make_rational(i, 3), v = make_rational(j, 3);
      Rational val = r(u, v);
      if (val < 0 && (!best || val < *best)) {
        best = val;
        res.point = {u, v};
      }
    }
  if (!best) {
    // Numeric compass search from fixed seeds; hits are re-checked exactly.
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-10, 10);
    for (int start = 0; start < 24 && !best; ++start) {
      double u = dist(rng), v = dist(rng), f = detail::eval_double(r, u, v), step = 1;
      while (step > 1e-9) {
        bool moved = false;
        for (auto [du, dv] : {std::pair{1., 0.}, {-1., 0.}, {0., 1.}, {0., -1.}}) {
          double g = detail::eval_double(r, u + step * du, v + step * dv);
          if (g < f) {
            u += step * du;
            v += step * dv;
            f = g;
            moved = true;
            break;
          }
        }
        if (!moved) step /= 2;
      }
      if (f < 0) {
        Rational ru(std::round(u * 1024) / 1024), rv(std::round(v * 1024) / 1024);
        Rational val = r(ru, rv);
        if (val < 0) {
          best = val;
          res.point = {ru, rv};
        }
      }
    }
  }
  if (best) {
    res.kind = PositivityResult::Kind::Counterexample;
    res.value = best;
    return res;
  }
  res.kind = PositivityResult::Kind::Unknown;
  res.note = "no pattern certificate and no negative value found";
  return res;
}

struct EllipticInvariants {
  Rational a, b, discE, j;
};

/// Invariants of z^2 = u^3 + a u^2 + b u for p = u^2 + a u + b (made monic).
inline EllipticInvariants elliptic_invariants(const UniPoly& p) {
  if (p.degree() != 2) throw PreconditionError("elliptic invariants need deg p = 2");
  if (!separability_check(p).separable) throw PreconditionError("p is not separable");
  if (p(0) == 0) throw PreconditionError("p(0) = 0");
  UniPoly m = p.monic();
  Rational a = m.coeff(1), b = m.coeff(0), t = a * a / b;
  Rational discE = -16 * b * b * b * (4 - t);
  Rational j = 256 * pow(Rational(3 - t), 3) / (4 - t);
  return {a, b, discE, j};
}

struct CMEntry {
  long disc;
  const char* j;
};

// Orders of class number one and their j-invariants.
inline const std::array<CMEntry, 13>& cm_table() {
  static const std::array<CMEntry, 13> t{{{-3, "0"},
                                          {-4, "1728"},
                                          {-7, "-3375"},
                                          {-8, "8000"},
                                          {-11, "-32768"},
                                          {-12, "54000"},
                                          {-16, "287496"},
                                          {-19, "-884736"},
                                          {-27, "-12288000"},
                                          {-28, "16581375"},
                                          {-43, "-884736000"},
                                          {-67, "-147197952000"},
                                          {-163, "-262537412640768000"}}};
  return t;
}

struct CMVerdict {
  bool is_cm_rational_j = false;
  std::optional<long> order_disc;
  bool parity_pass = false;
  Rational j;
};

inline CMVerdict cm_criterion(const UniPoly& p) {
  CMVerdict v;
  v.j = elliptic_invariants(p).j;
  for (auto& e : cm_table())
    if (v.j == Rational(Integer(e.j))) {
      v.is_cm_rational_j = true;
      v.order_disc = e.disc;
      v.parity_pass = ((e.disc % 4) + 4) % 4 == 1;
    }
  return v;
}

struct TauAdmissibility {
  bool admissible = false;
  std::string reason;
  // y = k/(2 beta) sqrt(|D|), kept symbolic.
  Integer k, beta, D;
  [[nodiscard]] std::string y() const {
    return to_string(make_rational(k, 2 * beta)) + "*sqrt(" + to_string(Integer(-D)) + ")";
  }
  [[nodiscard]] Rational y_squared() const { return make_rational(k * k * (-D), 4 * beta * beta); }
};

inline TauAdmissibility cm_tau_admissible(const Integer& D, const Integer& k, const Integer& beta) {
  TauAdmissibility t{false, "", k, beta, D};
  auto odd = [](const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; };
  if (D >= 0)
    t.reason = "D must be negative";
  else if (mpz_fdiv_ui(D.get_mpz_t(), 4) != 1)
    t.reason = "D is not 1 mod 4";
  else if (k <= 0 || !odd(k))
    t.reason = "k must be a positive odd integer";
  else if (beta <= 0 || !odd(beta))
    t.reason = "beta must be a positive odd integer";
  else if (Integer(k * k * D) % beta != 0)
    t.reason = "beta does not divide k^2 D";
  else {
    t.admissible = true;
    t.reason = "admissible";
  }
  return t;
}

struct TauFamilyMember {
  Integer n, k;
  TauAdmissibility tau;  // D = -(n^2+2), beta = n^2+2
};

/// The family n odd, k > n odd, D = -(n^2+2), beta = n^2+2, y = k/(2 sqrt(n^2+2)).
inline std::vector<TauFamilyMember> tau_family(long n_max, long k_max) {
  std::vector<TauFamilyMember> out;
  for (long n = 1; n <= n_max; n += 2)
    for (long k = n + 2; k <= k_max; k += 2) {
      Integer m = Integer(n) * n + 2;
      out.push_back({n, k, cm_tau_admissible(-m, k, m)});
    }
  return out;
}

struct ZarhinResult {
  enum class Kind { CertifiedSn, NotSn, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::string reason;
  Integer disc;
  unsigned budget = 0;
  unsigned primes_used = 0;
  std::vector<std::pair<unsigned long, std::vector<int>>> witnesses;  // prime, cycle type
};

inline std::string to_string(ZarhinResult::Kind k) {
  switch (k) {
    case ZarhinResult::Kind::CertifiedSn:
      return "CertifiedSn";
    case ZarhinResult::Kind::NotSn:
      return "NotSn";
    case ZarhinResult::Kind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

inline constexpr unsigned kDefaultPrimeBudget = 50;

/// Galois group S_n from Frobenius cycle types at good primes: an n-cycle (or
/// incompatible factor degrees, forcing irreducibility), a 2-cycle times odd
/// cycles (a power is a transposition), and a prime cycle of length > n/2.
inline ZarhinResult zarhin_sn_certificate(const UniPoly& f, unsigned budget = kDefaultPrimeBudget) {
  if (f.degree() < 5) throw PreconditionError("S_n certificate needs degree >= 5");
  if (!is_squarefree(f)) throw PreconditionError("S_n certificate needs a squarefree polynomial");
  ZarhinResult res;
  res.budget = budget;
  auto F = f.primitive_integer();
  std::vector<Rational> fq(F.begin(), F.end());
  Rational dq = discriminant(UniPoly(fq));
  ensure(dq.get_den() == 1, "integer discriminant expected");
  res.disc = dq.get_num();
  if (is_perfect_square(res.disc)) {
    res.kind = ZarhinResult::Kind::NotSn;
    res.reason = "discriminant is a square: Galois group lies in A_n";
    return res;
  }
  const int n = f.degree();
  Integer bad = F.back() * res.disc;
  bool have_n_cycle = false, have_transposition = false, have_big_prime = false;
  // Degrees d with 0 < d < n that could be a factor degree under every prime so far.
  std::vector<bool> possible(static_cast<std::size_t>(n + 1), true);
  auto is_prime = [](int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return true;
  };
  Integer p = 1;
  for (unsigned used = 0; used < budget;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (mpz_divisible_p(bad.get_mpz_t(), p.get_mpz_t())) continue;
    ++used;
    res.primes_used = used;
    unsigned long pu = p.get_ui();
    auto type = modp::factor_degrees(modp::reduce(F, pu), pu);
    std::vector<bool> sums(static_cast<std::size_t>(n + 1), false);
    sums[0] = true;
    for (int d : type)
      for (int s = n; s >= d; --s)
        if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    for (int d = 1; d < n; ++d) possible[static_cast<std::size_t>(d)] = possible[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
    bool useful = false;
    if (!have_n_cycle && type.size() == 1) have_n_cycle = useful = true;
    int twos = static_cast<int>(std::count(type.begin(), type.end(), 2));
    bool others_odd = std::all_of(type.begin(), type.end(), [](int d) { return d == 2 || d % 2 == 1; });
    if (!have_transposition && twos == 1 && others_odd) have_transposition = useful = true;
    if (!have_big_prime)
      for (int d : type)
        if (is_prime(d) && 2 * d > n && std::count(type.begin(), type.end(), d) == 1) have_big_prime = useful = true;
    if (useful) res.witnesses.emplace_back(pu, type);
    bool irreducible = have_n_cycle || std::none_of(possible.begin() + 1, possible.end() - 1, [](bool b) { return b; });
    if (irreducible && have_transposition && have_big_prime) {
      res.kind = ZarhinResult::Kind::CertifiedSn;
      res.reason = have_n_cycle ? "n-cycle, transposition power and large prime cycle found"
                                : "factor degrees incompatible across primes, transposition power and large prime cycle found";
      return res;
    }
  }
  bool maybe_reducible = !have_n_cycle && std::any_of(possible.begin() + 1, possible.end() - 1, [](bool b) { return b; });
  res.kind = ZarhinResult::Kind::Inconclusive;
  if (maybe_reducible) {
    std::string ds;
    for (int d = 1; d < n; ++d)
      if (possible[static_cast<std::size_t>(d)]) ds += (ds.empty() ? "" : ",") + std::to_string(d);
    res.reason = "possibly reducible: factor degrees {" + ds + "} compatible with every prime tried";
  } else {
    res.reason = std::string("prime budget exhausted without ") + (!have_transposition ? "a transposition power" : "a large prime cycle");
  }
  return res;
}

enum class Status { RATIONAL, NOT_UNIV_CH0_TRIVIAL, UNIV_CH0_TRIVIAL, UNKNOWN };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::RATIONAL:
      return "RATIONAL";
    case Status::NOT_UNIV_CH0_TRIVIAL:
      return "NOT_UNIV_CH0_TRIVIAL";
    case Status::UNIV_CH0_TRIVIAL:
      return "UNIV_CH0_TRIVIAL";
    case Status::UNKNOWN:
      return "UNKNOWN";
  }
  return "?";
}

struct Evidence {
  std::string criterion;
  std::string anchor;  // human-readable name of the argument used
  std::string supports;  // a Status name, or "context"
  json data;
};

struct Verdict {
  Status status = Status::UNKNOWN;
  std::vector<Evidence> reasons;
};

struct AnalyzeOptions {
  unsigned prime_budget = kDefaultPrimeBudget;
};

namespace detail {

inline json poly_json(const UniPoly& p) { return {{"coeffs", to_coeff_list(p)}, {"text", to_string(p)}}; }

inline json cert_entries_json(const SOSCertificate& c) {
  json e = json::array();
  for (auto& x : c.entries) e.push_back(to_string(x));
  return e;
}

// Reduce a diagonal bundle to x^2 + y^2 + z^2 = u p(u) with p monic, when three
// entries are constants of one sign and the fourth is -c u p(u) (up to the
// overall sign). Over R this is a change of variables.
inline std::optional<UniPoly> real_standard_p(const FibrationSpec& fib) {
  if (fib.standard) {
    const auto& s = *fib.standard;
    if (s.a < 0 && s.b < 0 && s.p.lc() > 0) return s.p.monic();
    return std::nullopt;
  }
  int var_idx = -1;
  for (int i = 0; i < 4; ++i)
    if (fib.q[static_cast<std::size_t>(i)].degree() >= 1) {
      if (var_idx >= 0) return std::nullopt;
      var_idx = i;
    }
  if (var_idx < 0) return std::nullopt;
  int s = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == var_idx) continue;
    int si = sign(fib.q[static_cast<std::size_t>(i)].lc());
    if (s != 0 && si != s) return std::nullopt;
    s = si;
  }
  UniPoly g = fib.q[static_cast<std::size_t>(var_idx)] * UniPoly::constant(-s);  // x^2+y^2+z^2 = g
  if (g.coeff(0) != 0 || g.lc() < 0) return std::nullopt;
  return exact_quotient(g, UniPoly::x()).monic();
}

}  // namespace detail

/// Decision pipeline: rationality by Witt, then the obstructions (real
/// components, Brauer class), then the sufficient criteria; otherwise UNKNOWN.
inline Verdict analyze(const FibrationSpec& fib, const AnalyzeOptions& opt = {}) {
  Verdict v;
  auto add = [&](std::string crit, std::string anchor, Status s, json data) {
    v.reasons.push_back({std::move(crit), std::move(anchor), to_string(s), std::move(data)});
  };
  auto context = [&](std::string crit, std::string anchor, json data) {
    v.reasons.push_back({std::move(crit), std::move(anchor), "context", std::move(data)});
  };

  if (witt_rational(fib)) {
    add("witt", "isotropic generic fibre gives a section", Status::RATIONAL,
        {{"reason", "fibre form indefinite on every arc of P^1(R)"}});
    v.status = Status::RATIONAL;
    return v;
  }
  int comps = real_components(fib);
  TypeClassification tc = classify_type_merged(fib);
  json type_json = {{"is_type_I", tc.is_type_I}, {"degenerate", json::array()}};
  for (auto& d : tc.degenerate_points) type_json["degenerate"].push_back({{"point", d.key()}, {"corank", d.corank}});
  context("type", "corank of degenerate fibres", type_json);
  json comp_json = {{"real_components", comps}};
  if (comps > 1) {
    add("components", "several real components", Status::NOT_UNIV_CH0_TRIVIAL, comp_json);
    v.status = Status::NOT_UNIV_CH0_TRIVIAL;
  } else {
    context("components", "real component count", comp_json);
  }
  if (!tc.is_type_I) {
    BrauerObstruction bo = brauer_obstruction(fib);
    json bj = {{"obstructed", bo.obstructed}, {"disc_is_square", bo.disc_is_square}, {"T", json::array()}};
    for (auto& t : bo.T) bj["T"].push_back(t.key());
    if (bo.obstructed) {
      add("brauer", "local split-parity points force a nonconstant Brauer class", Status::NOT_UNIV_CH0_TRIVIAL, bj);
      v.status = Status::NOT_UNIV_CH0_TRIVIAL;
    } else {
      context("brauer", "local split-parity points", bj);
    }
  }
  if (v.status == Status::NOT_UNIV_CH0_TRIVIAL) return v;

  auto p = detail::real_standard_p(fib);
  std::vector<std::string> viol;
  if (p) viol = situation_check(*p);
  if (tc.is_type_I && p && viol.empty()) {
    bool any = false;
    if (auto a = criterion_A(*p)) {
      any = true;
      add("A", "quadratic three-square criterion", Status::UNIV_CH0_TRIVIAL,
          {{"a", to_string(a->a)}, {"b", to_string(a->b)}, {"c", to_string(a->c)},
           {"r", to_string(a->r)},
           {"terms", {{{"weight", "1"}, {"square", to_string(RFrac(RPoly::var(U) + RPoly(Radical(a->a / 2)) - RPoly(Radical(Rational(1, 2))) * RPoly::var(V)))}},
                      {{"weight", "3/4"}, {"square", to_string(RFrac(RPoly::var(V) - RPoly(Radical(a->a / 3))))}},
                      {{"weight", to_string(a->c)}, {"square", "1"}}}},
           {"three_squares", detail::cert_entries_json(a->three_squares)},
           {"rational_squares", detail::cert_entries_json(a->rational)}});
    }
    CriterionB b = criterion_B(*p);
    if (b.pass) {
      any = true;
      add("B", "even polynomial with nonnegative coefficients", Status::UNIV_CH0_TRIVIAL, {{"reason", b.reason}});
    }
    PositivityResult pos = positivity_rtv(*p);
    json pj = {{"result", to_string(pos.kind)}};
    if (pos.kind == PositivityResult::Kind::PatternCertified) {
      pj["pattern"] = pos.pattern;
      json sp = json::array();
      for (auto& s : pos.splits) sp.push_back(to_string(s));
      pj["splits"] = sp;
      any = true;
      add("positivity", "r(u,v) nonnegative, hence a sum of four squares", Status::UNIV_CH0_TRIVIAL, pj);
    } else {
      if (pos.point) pj["point"] = {to_string(pos.point->first), to_string(pos.point->second)};
      if (pos.value) pj["value"] = to_string(*pos.value);
      context("positivity", "r(u,v) nonnegativity test", pj);
    }
    if (p->degree() == 2) {
      CMVerdict cm = cm_criterion(*p);
      EllipticInvariants ei = elliptic_invariants(*p);
      json cj = {{"j", to_string(cm.j)}, {"discE", to_string(ei.discE)}, {"is_cm_rational_j", cm.is_cm_rational_j},
                 {"parity_pass", cm.parity_pass}};
      if (cm.order_disc) cj["order_disc"] = *cm.order_disc;
      if (cm.parity_pass) {
        any = true;
        add("CM", "complex multiplication by an order of odd discriminant", Status::UNIV_CH0_TRIVIAL, cj);
      } else {
        context("CM", "complex multiplication test", cj);
      }
    }
    if (any) {
      v.status = Status::UNIV_CH0_TRIVIAL;
      return v;
    }
  } else if (p && !viol.empty()) {
    context("situation", "hypotheses on p", {{"violations", viol}});
  }
  // Open case; attach the Galois-group context for the curve z^2 = u p(u).
  if (p) {
    UniPoly f = UniPoly::x() * *p;
    if (f.degree() >= 5 && is_squarefree(f)) {
      ZarhinResult z = zarhin_sn_certificate(f, opt.prime_budget);
      context("zarhin", "S_n Galois group forces End(J) = Z", {{"result", to_string(z.kind)}, {"reason", z.reason}});
    }
  }
  add("open", "no criterion applies", Status::UNKNOWN, {{"note", "sufficient criteria exhausted"}});
  v.status = Status::UNKNOWN;
  return v;
}

}  // namespace qfib
