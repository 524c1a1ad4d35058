#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qfib/ch0.hpp"
#include "qfib/pencil.hpp"
#include "qfib/soscert.hpp"
#include "qfib/symbols.hpp"

namespace qfib {

inline constexpr const char* kVersion = "0.1.0";

namespace io {

// Rationals arrive as JSON strings ("3/2") or integers.
inline Rational rational_from(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InvalidInput(what + ": expected a rational as string or integer");
}

inline Integer integer_from(const json& j, const std::string& what) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw InvalidInput(what + ": expected an integer");
}

// Polynomial as coefficient-list string, expression string, or JSON array of coefficients.
inline UniPoly poly_from(const json& j, const std::string& what) {
  if (j.is_string()) return parse_poly_any(j.get<std::string>());
  if (j.is_number_integer()) return UniPoly::constant(rational_from(j, what));
  if (j.is_array()) {
    std::vector<Rational> c;
    for (auto& e : j) c.push_back(rational_from(e, what));
    return UniPoly(c);
  }
  throw InvalidInput(what + ": expected a polynomial");
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw InvalidInput(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline FibrationSpec fibration_from(const json& j) {
  if (!j.is_object()) throw InvalidInput("fibration must be a JSON object");
  std::string form = j.value("form", std::string("standard"));
  if (form == "standard") {
    Rational a = j.contains("a") ? rational_from(j.at("a"), "a") : Rational(-1);
    Rational b = j.contains("b") ? rational_from(j.at("b"), "b") : Rational(-1);
    return StandardForm(a, b, poly_from(field(j, "p"), "p"));
  }
  if (form == "diagonal") {
    const json& q = field(j, "q");
    if (!q.is_array() || q.size() != 4) throw InvalidInput("diagonal form needs exactly four entries in 'q'");
    std::array<UniPoly, 4> qs;
    for (std::size_t i = 0; i < 4; ++i) qs[i] = poly_from(q[i], "q" + std::to_string(i + 1));
    return FibrationSpec::diagonal(qs);
  }
  throw InvalidInput("unknown fibration form '" + form + "'");
}

// "q1;q2;q3;q4", each an expression or coefficient list.
inline json diagonal_json(const std::string& text) {
  json q = json::array();
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    q.push_back(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return {{"form", "diagonal"}, {"q", q}};
}

inline json to_json(const Evidence& e) {
  return {{"criterion", e.criterion}, {"anchor", e.anchor}, {"supports", e.supports}, {"data", e.data}};
}

inline json to_json(const Verdict& v) {
  json r = json::array();
  for (auto& e : v.reasons) r.push_back(to_json(e));
  return {{"status", to_string(v.status)}, {"reasons", r}};
}

inline json to_json(const ResidueProfile& p) {
  json m = json::object();
  for (auto& e : p.entries) m[e.point.key()] = e.nontrivial ? "nontrivial" : "trivial";
  return m;
}

inline json to_json(const UniPoly& p) { return {{"coeffs", to_coeff_list(p)}, {"text", to_string(p)}}; }

inline json to_json(const SOSCertificate& c) {
  json e = json::array();
  for (auto& x : c.entries) e.push_back(to_string(x));
  json j = {{"ring", to_string(c.ring)}, {"target", to_string(c.target)}, {"entries", e}};
  if (c.ring == Ring::QuotientW) j["p"] = to_coeff_list(c.p);
  return j;
}

inline SOSCertificate certificate_from(const json& j) {
  SOSCertificate c;
  c.ring = parse_ring(string_field(j, "ring"));
  if (c.ring == Ring::QuotientW) c.p = poly_from(field(j, "p"), "p");
  c.target = parse_expression(string_field(j, "target"));
  const json& e = field(j, "entries");
  if (!e.is_array()) throw InvalidInput("'entries' must be an array of strings");
  for (auto& x : e) {
    if (!x.is_string()) throw InvalidInput("certificate entries must be strings");
    c.entries.push_back(parse_expression(x.get<std::string>()));
  }
  return c;
}

inline json to_json(const ZarhinResult& z) {
  json w = json::array();
  for (auto& [p, t] : z.witnesses) w.push_back({{"prime", p}, {"cycle_type", t}});
  return {{"result", to_string(z.kind)}, {"reason", z.reason}, {"discriminant", to_string(z.disc)},
          {"budget", z.budget}, {"primes_used", z.primes_used}, {"witnesses", w}};
}

inline json to_json(const TauAdmissibility& t) {
  json j = {{"admissible", t.admissible}, {"reason", t.reason}, {"D", to_string(t.D)}, {"k", to_string(t.k)}, {"beta", to_string(t.beta)}};
  if (t.admissible) {
    j["y"] = t.y();
    j["y_squared"] = to_string(t.y_squared());
  }
  return j;
}

inline Matrix6 matrix_from(const json& j, const std::string& what) {
  std::vector<Rational> v;
  if (j.is_string()) {
    v = parse_rational_list(j.get<std::string>());
  } else if (j.is_array()) {
    for (auto& e : j) v.push_back(rational_from(e, what));
  } else {
    throw InvalidInput(what + ": expected 21 rationals");
  }
  return symmetric_from_upper(v);
}

inline QuadricPencil pencil_from(const json& j) { return {matrix_from(field(j, "f"), "f"), matrix_from(field(j, "g"), "g")}; }

}  // namespace io
}  // namespace qfib
