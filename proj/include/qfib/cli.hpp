#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qfib/report.hpp"

namespace qfib::cli {

enum ExitCode { kOk = 0, kMalformed = 2, kPrecondition = 3, kInternal = 4 };

inline unsigned prime_budget_from_env() {
  const char* s = std::getenv("QFIB_PRIME_BUDGET");
  if (!s || !*s) return kDefaultPrimeBudget;
  Integer b = parse_integer(s);
  if (b < 1 || b > 100000) throw InvalidInput("QFIB_PRIME_BUDGET must be between 1 and 100000");
  return static_cast<unsigned>(b.get_ui());
}

struct Outcome {
  json result;
  json evidence = json::array();
};

namespace detail {

inline json ev(const std::string& criterion, const std::string& anchor, json data = json::object()) {
  return json::array({{{"criterion", criterion}, {"anchor", anchor}, {"data", std::move(data)}}});
}

inline QuaternionSymbol symbol_from(const json& p) {
  auto side = [&](const char* key) {
    const json& j = io::field(p, key);
    if (j.is_string()) {
      std::string s = j.get<std::string>();
      auto bar = s.find('|');
      if (bar == std::string::npos) return RatFunc(parse_poly_any(s));
      return RatFunc(parse_poly_any(s.substr(0, bar)), parse_poly_any(s.substr(bar + 1)));
    }
    return RatFunc(io::poly_from(j, key));
  };
  return {side("f"), side("g")};
}

inline Outcome do_analyze(const json& p) {
  FibrationSpec fib = io::fibration_from(p.contains("fibration") ? p.at("fibration") : p);
  AnalyzeOptions opt;
  opt.prime_budget = p.contains("prime_budget") ? static_cast<unsigned>(io::integer_from(p.at("prime_budget"), "prime_budget").get_ui())
                                                : prime_budget_from_env();
  Verdict v = analyze(fib, opt);
  bool univ = false, not_univ = false;
  for (auto& e : v.reasons) {
    univ |= e.supports == "UNIV_CH0_TRIVIAL";
    not_univ |= e.supports == "NOT_UNIV_CH0_TRIVIAL";
  }
  ensure(!(univ && not_univ), "contradictory evidence in verdict");
  Outcome o;
  o.result = io::to_json(v);
  o.evidence = o.result["reasons"];
  json notes = json::array();
  if (p.contains("pencil")) {
    QuadricPencil P = io::pencil_from(p.at("pencil"));
    auto sep = pencil_separable(P);
    o.result["pencil"] = {{"sextic", to_string(pencil_sextic(P))}, {"separable", sep.separable}};
    if (fib.standard) {
      std::vector<std::string> bad;
      for (auto& pl : relevant_places(fib.standard->a, fib.standard->b))
        if (hilbert_symbol(fib.standard->a, fib.standard->b, pl) == -1) bad.push_back(pl.real ? "inf" : to_string(pl.p));
      o.result["pencil"]["ab_ramified_at"] = bad;
      if (!bad.empty())
        notes.push_back(
            "(a,b) is nonzero in Br(Q): this fibration is never birational over P^1 to one built from a smooth "
            "intersection of two quadrics in P^5 with a rational point");
    }
  }
  if (!notes.empty()) o.result["notes"] = notes;
  return o;
}

inline Outcome do_residues(const json& p) {
  auto s = symbol_from(p);
  auto prof = residue_profile(s);
  Outcome o;
  o.result = {{"profile", io::to_json(prof)}, {"nontrivial_count", prof.nontrivial_count()}};
  o.evidence = ev("tame symbol", "residues at real closed points", {{"parity_even", prof.nontrivial_count() % 2 == 0}});
  return o;
}

inline Outcome do_faddeev(const json& p) {
  auto s = symbol_from(p);
  auto r = faddeev_decide(s);
  Outcome o;
  o.result = {{"kind", to_string(r.kind)}, {"profile", io::to_json(r.profile)}, {"ramified_at", r.profile.nontrivial_keys()}};
  if (r.evaluation_point) o.result["evaluation_point"] = to_string(*r.evaluation_point);
  o.evidence = ev("faddeev", "residue sequence for R(u); constant part by evaluation");
  return o;
}

inline Outcome do_hilbert(const json& p) {
  Rational a = io::rational_from(io::field(p, "a"), "a"), b = io::rational_from(io::field(p, "b"), "b");
  Outcome o;
  std::string place = p.contains("place") ? (p.at("place").is_string() ? p.at("place").get<std::string>() : p.at("place").dump()) : "all";
  if (place == "all") {
    json m = json::object();
    int prod = 1;
    for (auto& pl : relevant_places(a, b)) {
      int s = hilbert_symbol(a, b, pl);
      prod *= s;
      m[pl.real ? "inf" : to_string(pl.p)] = s;
    }
    o.result = {{"symbols", m}, {"product", prod}};
  } else {
    o.result = {{"symbol", hilbert_symbol(a, b, parse_place(place))}, {"place", place}};
  }
  o.evidence = ev("hilbert", "local solvability of z^2 = a x^2 + b y^2");
  return o;
}

inline Outcome do_jinv(const json& p) {
  auto e = elliptic_invariants(io::poly_from(io::field(p, "p"), "p"));
  Outcome o;
  o.result = {{"a", to_string(e.a)}, {"b", to_string(e.b)}, {"j", to_string(e.j)}, {"discE", to_string(e.discE)}};
  o.evidence = ev("j-invariant", "curve z^2 = u p(u)");
  return o;
}

inline Outcome do_cm(const json& p) {
  auto c = cm_criterion(io::poly_from(io::field(p, "p"), "p"));
  Outcome o;
  o.result = {{"j", to_string(c.j)}, {"is_cm_rational_j", c.is_cm_rational_j}, {"parity_pass", c.parity_pass},
              {"order_disc", c.order_disc ? json(*c.order_disc) : json(nullptr)}};
  o.evidence = ev("CM", "class-number-one j table; odd order discriminant");
  return o;
}

inline Outcome do_certify(const json& p) {
  UniPoly poly = io::poly_from(io::field(p, "p"), "p");
  auto viol = situation_check(poly);
  if (!viol.empty()) throw PreconditionError("p violates the hypotheses: " + viol.front());
  if (!criterion_A(poly)) throw PreconditionError("p = u^2 + a u + b needs b >= a^2/3 for a certificate");
  SOSCertificate c = certify_u_plus_v(poly);
  Outcome o;
  o.result = io::to_json(c);
  o.result["verified"] = verify(c);
  o.evidence = ev("A", "quadratic three-square criterion; Euler composition and division", {{"entries", c.entries.size()}});
  return o;
}

inline Outcome do_verify_cert(const json& p) {
  SOSCertificate c = io::certificate_from(p.contains("certificate") ? p.at("certificate") : p);
  Outcome o;
  o.result = {{"verified", verify(c)}, {"entries", c.entries.size()}, {"ring", to_string(c.ring)}};
  o.evidence = ev("verify", "normal form modulo the relations of W");
  return o;
}

inline Outcome do_components(const json& p) {
  Outcome o;
  if (p.contains("g")) {
    o.result = {{"components", real_components(io::poly_from(p.at("g"), "g"))}};
  } else {
    o.result = {{"components", real_components(io::fibration_from(p.contains("fibration") ? p.at("fibration") : p))}};
  }
  o.evidence = ev("components", "arcs of P^1(R) with real fibres");
  return o;
}

inline Outcome do_pencil(const json& p) {
  QuadricPencil P = io::pencil_from(p);
  BinarySextic s = pencil_sextic(P);
  Outcome o;
  json coeffs = json::array();
  for (auto& c : s.coeffs) coeffs.push_back(to_string(c));
  o.result = {{"sextic", to_string(s)}, {"coeffs", coeffs}};
  auto sep = pencil_separable(P);
  o.result["separable"] = sep.separable;
  if (sep.separable) {
    auto d = pencil_delta(P);
    o.result["delta"] = {{"rhs", io::to_json(d.rhs)}, {"genus", d.genus}};
  } else {
    o.result["note"] = "singular or degenerate: sextic has a repeated root";
  }
  o.evidence = ev("pencil", "det(lambda f + mu g) and its double cover");
  return o;
}

inline Outcome do_zarhin(const json& p) {
  unsigned budget = p.contains("budget") ? static_cast<unsigned>(io::integer_from(p.at("budget"), "budget").get_ui()) : prime_budget_from_env();
  auto z = zarhin_sn_certificate(io::poly_from(io::field(p, "f"), "f"), budget);
  Outcome o;
  o.result = io::to_json(z);
  o.evidence = ev("zarhin", "Frobenius cycle types at good primes");
  return o;
}

inline Outcome do_tau(const json& p) {
  Outcome o;
  if (p.contains("family")) {
    const json& f = p.at("family");
    long n_max = static_cast<long>(io::integer_from(io::field(f, "n_max"), "n_max").get_si());
    long k_max = static_cast<long>(io::integer_from(io::field(f, "k_max"), "k_max").get_si());
    if (n_max < 1 || k_max < 1 || n_max > 1000 || k_max > 1000) throw InvalidInput("family bounds must be in 1..1000");
    json members = json::array();
    for (auto& m : tau_family(n_max, k_max)) members.push_back({{"n", to_string(m.n)}, {"k", to_string(m.k)}, {"tau", io::to_json(m.tau)}});
    o.result = {{"family", members}};
  } else {
    o.result = io::to_json(cm_tau_admissible(io::integer_from(io::field(p, "D"), "D"), io::integer_from(io::field(p, "k"), "k"),
                                             io::integer_from(io::field(p, "beta"), "beta")));
  }
  o.evidence = ev("tau", "tau = 1/2 + k/(2 beta) sqrt(D) with D = 1 mod 4, k and beta odd");
  return o;
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"analyze", "residues", "faddeev", "hilbert", "jinv", "cm", "certify",
                                          "verify-cert", "components", "pencil", "zarhin", "tau"};
  return c;
}

inline Outcome dispatch(const std::string& command, const json& payload) {
  if (command == "analyze") return detail::do_analyze(payload);
  if (command == "residues") return detail::do_residues(payload);
  if (command == "faddeev") return detail::do_faddeev(payload);
  if (command == "hilbert") return detail::do_hilbert(payload);
  if (command == "jinv") return detail::do_jinv(payload);
  if (command == "cm") return detail::do_cm(payload);
  if (command == "certify") return detail::do_certify(payload);
  if (command == "verify-cert") return detail::do_verify_cert(payload);
  if (command == "components") return detail::do_components(payload);
  if (command == "pencil") return detail::do_pencil(payload);
  if (command == "zarhin") return detail::do_zarhin(payload);
  if (command == "tau") return detail::do_tau(payload);
  throw InvalidInput("unknown command '" + command + "'");
}

struct Report {
  json body;
  int exit_code;
};

/// One request -> one report; every failure becomes an error report.
inline Report handle(const json& request) {
  auto t0 = std::chrono::steady_clock::now();
  json report = {{"version", kVersion}, {"request", request}};
  int code = kOk;
  try {
    if (!request.is_object()) throw InvalidInput("request must be a JSON object");
    std::string command = io::string_field(request, "command");
    json payload = request.contains("payload") ? request.at("payload") : request;
    if (!request.contains("payload")) payload.erase("command");
    Outcome o = dispatch(command, payload);
    report["result"] = std::move(o.result);
    report["evidence"] = std::move(o.evidence);
  } catch (const InvalidInput& e) {
    code = kMalformed;
    report["error"] = {{"kind", "malformed input"}, {"message", e.what()}};
  } catch (const json::exception& e) {
    code = kMalformed;
    report["error"] = {{"kind", "malformed input"}, {"message", e.what()}};
  } catch (const PreconditionError& e) {
    code = kPrecondition;
    report["error"] = {{"kind", "precondition violated"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = kInternal;
    report["error"] = {{"kind", "internal error"}, {"message", e.what()}};
  }
  report["exit_code"] = code;
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["timing_ms"] = std::round(ms * 1000) / 1000;
  return {report, code};
}

// NDJSON in, NDJSON out, order preserved; lines run on up to `jobs` threads.
inline int batch(std::istream& in, std::ostream& out, unsigned jobs) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!qfib::detail::trim(line).empty()) lines.push_back(line);
  std::vector<std::string> results(lines.size());
  auto work = [&](std::size_t i) {
    json req;
    try {
      req = json::parse(lines[i]);
    } catch (const json::exception& e) {
      json r = {{"version", kVersion}, {"request", lines[i]}, {"error", {{"kind", "malformed input"}, {"message", e.what()}}},
                {"exit_code", kMalformed}, {"timing_ms", 0}};
      results[i] = r.dump();
      return;
    }
    results[i] = handle(req).body.dump();
  };
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, lines.size()); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < lines.size();) work(i);
    });
  for (auto& th : pool) th.join();
  for (auto& r : results) out << r << "\n";
  return kOk;
}

namespace detail {

// Plain-text rendering of a report for terminals.
inline void print_human(const json& report, std::ostream& out, std::ostream& err) {
  if (report.contains("error")) {
    err << "error (" << report["error"]["kind"].get<std::string>() << "): " << report["error"]["message"].get<std::string>() << "\n";
    return;
  }
  const json& r = report["result"];
  if (r.contains("status")) {
    out << "status: " << r["status"].get<std::string>() << "\n";
    for (auto& e : r["reasons"])
      out << "  [" << e["supports"].get<std::string>() << "] " << e["criterion"].get<std::string>() << ": " << e["anchor"].get<std::string>()
          << "\n";
    if (r.contains("notes"))
      for (auto& n : r["notes"]) out << "  note: " << n.get<std::string>() << "\n";
    return;
  }
  for (auto& [k, v] : r.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Command-line entry: argv without the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for real quadric-surface bundles x^2 - a y^2 - b z^2 = u p(u)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON report on stdout");

  std::string p_s, a_s = "-1", b_s = "-1", diag_s, pencil_file, f_s, g_s, place_s = "all", cert_file, cert_s, D_s = "", k_s, beta_s;
  std::string batch_file;
  unsigned budget = 0, jobs = std::max(1u, std::thread::hardware_concurrency());
  long n_max = 0, k_max = 0;

  auto* an = app.add_subcommand("analyze", "verdict for a fibration");
  an->add_option("--p", p_s, "p(u): ascending coefficients \"1,0,1\" = u^2+1, or an expression");
  an->add_option("--a", a_s, "a in x^2 - a y^2 - b z^2 = u p(u) (default -1)");
  an->add_option("--b", b_s, "b (default -1)");
  an->add_option("--diagonal", diag_s, "diagonal form \"q1;q2;q3;q4\", e.g. \"1;1+u^2;-u;-u\"");
  an->add_option("--pencil", pencil_file, "file with two lines of 21 rationals (upper triangles of f and g)");
  an->add_option("--budget", budget, "prime budget for the S_n certificate");

  auto* re = app.add_subcommand("residues", "residue profile of a quaternion symbol (f, g)");
  auto* fa = app.add_subcommand("faddeev", "Trivial / ConstantNontrivial / Ramified for (f, g)");
  for (auto* c : {re, fa}) {
    c->add_option("--f", f_s, "f as \"num|den\" (coefficient lists or expressions)")->required();
    c->add_option("--g", g_s, "g as \"num|den\"")->required();
  }
  auto* hi = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v");
  hi->add_option("--a", a_s)->required();
  hi->add_option("--b", b_s)->required();
  hi->add_option("--place", place_s, "prime, 'inf', or 'all'");
  auto* ji = app.add_subcommand("jinv", "j-invariant of z^2 = u p(u), deg p = 2");
  auto* cm = app.add_subcommand("cm", "CM parity test, deg p = 2");
  auto* ce = app.add_subcommand("certify", "four-square certificate for u+v on W");
  for (auto* c : {ji, cm, ce}) c->add_option("--p", p_s, "p(u), ascending coefficients or expression")->required();
  auto* vc = app.add_subcommand("verify-cert", "re-check a certificate");
  vc->add_option("--cert", cert_file, "certificate JSON file");
  vc->add_option("--cert-json", cert_s, "certificate JSON text");
  auto* co = app.add_subcommand("components", "real connected components");
  co->add_option("--g", g_s, "g for x^2+y^2+z^2 = g(u)");
  co->add_option("--diagonal", diag_s, "diagonal form \"q1;q2;q3;q4\"");
  auto* pe = app.add_subcommand("pencil", "sextic and discriminant curve of a pencil of quadrics");
  pe->add_option("--f", f_s, "21 rationals: upper triangle of f, row-major");
  pe->add_option("--g", g_s, "21 rationals: upper triangle of g");
  pe->add_option("--file", pencil_file, "file with f then g (42 rationals)");
  auto* za = app.add_subcommand("zarhin", "S_n certificate for the Galois group of f");
  za->add_option("--f", f_s, "f(u), degree >= 5")->required();
  za->add_option("--budget", budget, "number of good primes to try");
  auto* ta = app.add_subcommand("tau", "admissibility of tau = 1/2 + k/(2 beta) sqrt(D)");
  ta->add_option("--D", D_s);
  ta->add_option("--k", k_s);
  ta->add_option("--beta", beta_s);
  ta->add_option("--family-n", n_max, "enumerate the n^2+2 family up to n");
  ta->add_option("--family-k", k_max, "... and k");
  auto* ba = app.add_subcommand("batch", "NDJSON requests, one report per line");
  ba->add_option("--file", batch_file, "input file, '-' for stdin")->required();
  ba->add_option("--jobs", jobs, "worker threads");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error (malformed input): " << e.what() << "\n";
    return kMalformed;
  }

  if (ba->parsed()) {
    try {
      if (batch_file == "-") return batch(std::cin, out, jobs);
      std::ifstream in(batch_file);
      if (!in) throw InvalidInput("cannot read file '" + batch_file + "'");
      return batch(in, out, jobs);
    } catch (const InvalidInput& e) {
      err << "error (malformed input): " << e.what() << "\n";
      return kMalformed;
    }
  }

  json req;
  try {
    auto* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    json pl = json::object();
    if (name == "analyze") {
      if (!diag_s.empty())
        pl = io::diagonal_json(diag_s);
      else if (!p_s.empty())
        pl = {{"form", "standard"}, {"a", a_s}, {"b", b_s}, {"p", p_s}};
      else
        throw InvalidInput("analyze needs --p or --diagonal");
      if (!pencil_file.empty()) {
        auto v = parse_rational_list(detail::read_file(pencil_file));
        if (v.size() != 42) throw InvalidInput("pencil file needs 42 rationals");
        json f = json::array(), g = json::array();
        for (std::size_t i = 0; i < 21; ++i) f.push_back(to_string(v[i]));
        for (std::size_t i = 21; i < 42; ++i) g.push_back(to_string(v[i]));
        pl["pencil"] = {{"f", f}, {"g", g}};
      }
      if (budget) pl["prime_budget"] = budget;
    } else if (name == "residues" || name == "faddeev") {
      pl = {{"f", f_s}, {"g", g_s}};
    } else if (name == "hilbert") {
      pl = {{"a", a_s}, {"b", b_s}, {"place", place_s}};
    } else if (name == "jinv" || name == "cm" || name == "certify") {
      pl = {{"p", p_s}};
    } else if (name == "verify-cert") {
      std::string text = !cert_file.empty() ? detail::read_file(cert_file) : cert_s;
      if (text.empty()) throw InvalidInput("verify-cert needs --cert or --cert-json");
      pl = {{"certificate", json::parse(text)}};
    } else if (name == "components") {
      if (!diag_s.empty())
        pl = io::diagonal_json(diag_s);
      else if (!g_s.empty())
        pl = {{"g", g_s}};
      else
        throw InvalidInput("components needs --g or --diagonal");
    } else if (name == "pencil") {
      if (!pencil_file.empty()) {
        auto v = parse_rational_list(detail::read_file(pencil_file));
        if (v.size() != 42) throw InvalidInput("pencil file needs 42 rationals");
        json f = json::array(), g = json::array();
        for (std::size_t i = 0; i < 21; ++i) f.push_back(to_string(v[i]));
        for (std::size_t i = 21; i < 42; ++i) g.push_back(to_string(v[i]));
        pl = {{"f", f}, {"g", g}};
      } else {
        pl = {{"f", f_s}, {"g", g_s}};
      }
    } else if (name == "zarhin") {
      pl = {{"f", f_s}};
      if (budget) pl["budget"] = budget;
    } else if (name == "tau") {
      if (n_max > 0 || k_max > 0)
        pl = {{"family", {{"n_max", n_max}, {"k_max", k_max}}}};
      else
        pl = {{"D", D_s}, {"k", k_s}, {"beta", beta_s}};
    }
    req = {{"command", name}, {"payload", pl}};
  } catch (const InvalidInput& e) {
    err << "error (malformed input): " << e.what() << "\n";
    return kMalformed;
  } catch (const json::exception& e) {
    err << "error (malformed input): " << e.what() << "\n";
    return kMalformed;
  }

  Report r = handle(req);
  if (as_json) {
    out << r.body.dump(2) << "\n";
    if (r.body.contains("error")) err << "error: " << r.body["error"]["message"].get<std::string>() << "\n";
  } else {
    detail::print_human(r.body, out, err);
  }
  return r.exit_code;
}

}  // namespace qfib::cli
