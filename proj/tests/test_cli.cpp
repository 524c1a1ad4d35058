#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

#include "qfib/cli.hpp"

using namespace qfib;
using qfib::cli::run;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

json without_timing(json r) {
  r.erase("timing_ms");
  return r;
}

}  // namespace

TEST(Cli, AnalyzeUPlusOne) {
  auto r = call({"--json", "analyze", "--p", "1,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["result"]["status"], "UNIV_CH0_TRIVIAL");
  bool a = false;
  for (auto& e : j["result"]["reasons"]) a |= e["criterion"] == "A";
  EXPECT_TRUE(a);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_FALSE(j["evidence"].empty());
}

TEST(Cli, HilbertAndDiagonal) {
  auto h = call({"--json", "hilbert", "--a", "-1", "--b", "-3", "--place", "3"});
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(json::parse(h.out)["result"]["symbol"], -1);
  auto d = call({"--json", "analyze", "--diagonal", "1;1+u^2;-u;-u"});
  ASSERT_EQ(d.code, 0);
  auto j = json::parse(d.out);
  EXPECT_EQ(j["result"]["status"], "NOT_UNIV_CH0_TRIVIAL");
  bool brauer = false;
  for (auto& e : j["result"]["reasons"]) brauer |= e["criterion"] == "brauer" && e["supports"] == "NOT_UNIV_CH0_TRIVIAL";
  EXPECT_TRUE(brauer);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"analyze", "--p", "1,,2"}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"hilbert", "--a", "x", "--b", "1"}).code, 2);
  // u p(u) = u^3 has repeated roots: precondition.
  EXPECT_EQ(call({"components", "--g", "0,0,1"}).code, 3);
  EXPECT_EQ(call({"certify", "--p", "5,4,1"}).code, 3);
  auto e = call({"--json", "certify", "--p", "5,4,1"});
  EXPECT_EQ(json::parse(e.out)["error"]["kind"], "precondition violated");
  EXPECT_FALSE(e.err.empty());
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, CertifyThenVerify) {
  auto c = call({"--json", "certify", "--p", "3,-3,1"});
  ASSERT_EQ(c.code, 0) << c.err;
  auto j = json::parse(c.out);
  EXPECT_TRUE(j["result"]["verified"].get<bool>());
  json cert = j["result"];
  cert.erase("verified");
  auto v = call({"--json", "verify-cert", "--cert-json", cert.dump()});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(json::parse(v.out)["result"]["verified"].get<bool>());
  cert["target"] = "u";
  auto w = call({"--json", "verify-cert", "--cert-json", cert.dump()});
  EXPECT_FALSE(json::parse(w.out)["result"]["verified"].get<bool>());
}

TEST(Cli, ReportsDeterministicAndRoundTrip) {
  json req = {{"command", "analyze"}, {"payload", {{"form", "standard"}, {"a", "-1"}, {"b", "-1"}, {"p", "1,0,1"}}}};
  auto a = cli::handle(req).body, b = cli::handle(req).body;
  EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
  EXPECT_EQ(json::parse(a.dump()), a);
  for (auto& cmd : cli::commands()) {
    auto r = cli::handle({{"command", cmd}, {"payload", json::object()}}).body;
    EXPECT_EQ(r["exit_code"], 2) << cmd;  // missing fields are malformed, never internal
  }
}

TEST(Cli, BatchOrderAndErrors) {
  std::stringstream in;
  in << R"({"command":"jinv","payload":{"p":"1,0,1"}})" << "\n";
  in << "{not json\n";
  in << R"({"command":"hilbert","payload":{"a":"-1","b":"-1","place":"inf"}})" << "\n";
  in << R"({"command":"components","payload":{"g":"0,-1,0,1"}})" << "\n";
  std::ostringstream out;
  EXPECT_EQ(cli::batch(in, out, 3), 0);
  std::istringstream lines(out.str());
  std::vector<json> reps;
  for (std::string l; std::getline(lines, l);) reps.push_back(json::parse(l));
  ASSERT_EQ(reps.size(), 4u);
  EXPECT_EQ(reps[0]["result"]["j"], "1728");
  EXPECT_EQ(reps[1]["exit_code"], 2);
  EXPECT_EQ(reps[2]["result"]["symbol"], -1);
  EXPECT_EQ(reps[3]["result"]["components"], 2);
}

TEST(Cli, BatchParallelMatchesSerial) {
  std::stringstream a, b;
  for (int i = 1; i <= 40; ++i) {
    std::string line = json{{"command", "analyze"}, {"payload", {{"p", std::to_string(i) + ",1,1"}}}}.dump();
    a << line << "\n";
    b << line << "\n";
  }
  std::ostringstream s, p;
  cli::batch(a, s, 1);
  cli::batch(b, p, 4);
  std::istringstream ls(s.str()), lp(p.str());
  for (std::string x, y; std::getline(ls, x) && std::getline(lp, y);)
    EXPECT_EQ(without_timing(json::parse(x)).dump(), without_timing(json::parse(y)).dump());
}

TEST(Cli, PrimeBudgetEnv) {
  setenv("QFIB_PRIME_BUDGET", "3", 1);
  auto r = call({"--json", "zarhin", "--f", "-1,-1,0,0,0,1"});
  unsetenv("QFIB_PRIME_BUDGET");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["result"]["budget"], 3);
  setenv("QFIB_PRIME_BUDGET", "zero", 1);
  EXPECT_EQ(call({"zarhin", "--f", "-1,-1,0,0,0,1"}).code, 2);
  unsetenv("QFIB_PRIME_BUDGET");
}

TEST(Cli, PencilNote) {
  json req = {{"command", "analyze"},
              {"payload",
               {{"form", "standard"},
                {"p", "1,0,1"},
                {"pencil",
                 {{"f", "1 0 0 0 0 0 1 0 0 0 0 1 0 0 0 1 0 0 1 0 1"}, {"g", "0 0 0 0 0 0 1 0 0 0 0 2 0 0 0 3 0 0 4 0 5"}}}}}};
  auto r = cli::handle(req).body;
  ASSERT_EQ(r["exit_code"], 0) << r.dump();
  EXPECT_TRUE(r["result"]["pencil"]["separable"].get<bool>());
  EXPECT_EQ(r["result"]["notes"].size(), 1u);
}

TEST(Cli, ThousandQuadraticAnalyses) {
  std::stringstream in;
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    int a = static_cast<int>(rng() % 41) - 20, b = static_cast<int>(rng() % 40) + 1;
    in << json{{"command", "analyze"}, {"payload", {{"p", std::to_string(b) + "," + std::to_string(a) + ",1"}}}}.dump() << "\n";
  }
  std::ostringstream out;
  auto t0 = std::chrono::steady_clock::now();
  cli::batch(in, out, 2);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::istringstream lines(out.str());
  int n = 0;
  for (std::string l; std::getline(lines, l); ++n) EXPECT_EQ(json::parse(l)["exit_code"], 0);
  EXPECT_EQ(n, 1000);
  EXPECT_LT(s, 30.0);
}
