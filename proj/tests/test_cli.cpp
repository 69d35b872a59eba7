#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "oracles.hpp"
#include "qscov/cli.hpp"

using namespace qscov;
using namespace qscov::cli;

namespace {

RunConfig config(std::string command, std::size_t n, unsigned m) {
  RunConfig c;
  c.command = std::move(command);
  c.n = n;
  c.m = m;
  return c;
}

RunConfig suite(std::string name, std::size_t n, unsigned m) {
  auto c = config("verify", n, m);
  c.suite = std::move(name);
  return c;
}

struct Process {
  int status;
  std::string out;
};

Process run_binary(const std::string& args) {
  std::string cmd = std::string(QSCOV_CLI_PATH) + " " + args + " 2>/dev/null";
  Process p{-1, {}};
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), got);
  int raw = pclose(f);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

}  // namespace

TEST(CmdBasis, Examples) {
  auto r = run(config("basis", 2, 2));
  EXPECT_EQ(r.result["count"], 8);
  EXPECT_EQ(r.result["histogram"], Json::parse("[1,2,2,2,1]"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(run(config("basis", 1, 1)).result["monomials"], Json::parse(R"j(["(0)"])j"));
  EXPECT_EQ(run(config("basis", 3, 1)).result["count"], 5);
}

TEST(CmdGroebner, Examples) {
  auto gens = [](std::size_t n, unsigned m) { return run(config("groebner", n, m)).result["basis"]["generators"]; };
  EXPECT_EQ(gens(2, 1), Json::parse(R"(["x1 + x2", "x2^2"])"));
  EXPECT_EQ(gens(2, 2), Json::parse(R"(["x1^2 + x2^2", "x2^4"])"));
  EXPECT_EQ(gens(1, 3), Json::parse(R"(["x1^3"])"));
  auto r = run(config("groebner", 3, 2));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.result["standard_monomials"]["count"], 40);
  EXPECT_EQ(r.result["standard_monomials"]["complete"], true);
}

TEST(CmdGroebner, BasisDocumentRoundTrips) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 3; ++m) {
      auto gb = quasi_invariant_ideal_basis(n, m);
      auto j = basis_to_json(gb, m);
      auto doc = basis_from_json(Json::parse(j.dump()));
      EXPECT_EQ(doc.basis, gb);
      EXPECT_EQ(doc.m, m);
      EXPECT_EQ(run(config("groebner", n, m)).result["basis"], j);
    }
  EXPECT_THROW(basis_from_json(Json::parse(R"({"n": 2})")), std::invalid_argument);
  EXPECT_EQ(series_from_json(series_to_json(F_nm_closed(3, 2))), F_nm_closed(3, 2));
}

TEST(CmdGroebner, LowDegreeBoundFailsChecks) {
  auto c = config("groebner", 2, 2);
  c.degree_bound = 3;
  auto r = run(c);
  EXPECT_FALSE(r.ok());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "standard_monomials_complete");
}

TEST(CmdDim, Examples) {
  auto dim = [](std::size_t n, unsigned m, const char* method) {
    auto c = config("dim", n, m);
    c.method = method;
    auto r = run(c);
    EXPECT_TRUE(r.ok());
    return r.result["dimension"].get<std::uint64_t>();
  };
  EXPECT_EQ(dim(3, 2, "groebner"), 40u);
  EXPECT_EQ(dim(1, 1, "harmonic"), 1u);
  EXPECT_EQ(dim(2, 3, "basis"), 18u);
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 3; ++m)
      for (const char* method : {"groebner", "basis", "harmonic"})
        EXPECT_EQ(dim(n, m, method), oracle::ipow(m, static_cast<unsigned>(n)) * catalan(static_cast<unsigned>(n)));
  auto bad = config("dim", 2, 2);
  bad.method = "guess";
  EXPECT_THROW(run(bad), UsageError);
}

TEST(CmdAct, Examples) {
  auto c = config("act", 3, 3);
  c.element = "tau=3,1,2;weights=1,0,1";
  c.poly = "x1^2*x2";
  EXPECT_EQ(run(c).result["image"], "(-1-z)*x1^2*x3");
  c.action = "classical";
  EXPECT_EQ(run(c).result["image"], "(-1-z)*x1*x3^2");
  c.element = "tau=1,2,3;weights=0,0,0";
  c.poly = "x1*x2^2 - 3/2*x3 + (1+z)*x2";
  EXPECT_EQ(run(c).result["image"], "x1*x2^2 + (1+z)*x2 - 3/2*x3");
}

TEST(CmdAct, UsageErrors) {
  auto c = config("act", 3, 3);
  c.element = "tau=3,1,2;weights=1,0,1";
  c.poly = "x1^^2";
  EXPECT_THROW(run(c), UsageError);
  c.poly = "x1";
  c.element = "tau=3,1;weights=1,0";
  EXPECT_THROW(run(c), UsageError);
  c.element = "tau=3,1,2;weights=1,0,3";
  EXPECT_THROW(run(c), UsageError);
  c.element = "tau=3,1,2;weights=1,0,1";
  c.action = "sideways";
  EXPECT_THROW(run(c), UsageError);
}

TEST(CmdVerify, Examples) {
  auto main = run(suite("main", 2, 2));
  EXPECT_TRUE(main.ok());
  EXPECT_EQ(main.result["harmonic"], 8);
  EXPECT_TRUE(run(suite("ppp", 2, 2)).ok());
  auto chev = run(suite("chevalley", 2, 1));
  EXPECT_TRUE(chev.ok());
  EXPECT_EQ(chev.result["groebner"], 2);
  EXPECT_THROW(run(suite("everything", 2, 2)), UsageError);
}

TEST(CmdVerify, AllSuitesPassOnSmallCases) {
  for (const auto& name : suites())
    for (std::size_t n = 1; n <= 3; ++n)
      for (unsigned m = 1; m <= 2; ++m) {
        auto r = run(suite(name, n, m));
        EXPECT_TRUE(r.ok()) << name << " " << n << " " << m << " " << render_text(r);
        EXPECT_FALSE(r.checks.empty());
      }
}

TEST(CmdVerify, HilbertSuiteFlagsLiteralFormula) {
  EXPECT_EQ(run(suite("hilbert", 2, 2)).result["literal_status"], "MISMATCH");
  EXPECT_EQ(run(suite("hilbert", 1, 3)).result["literal_status"], "MATCH");
  EXPECT_EQ(run(suite("hilbert", 3, 1)).result["literal_status"], "MATCH");
}

TEST(CmdVerify, CapsProduceResourceErrors) {
  auto c = suite("main", 3, 3);
  c.caps.max_matrix_entries = 100;
  EXPECT_THROW(run(c), resource_error);
  auto g = suite("action-axioms", 3, 3);
  g.caps.max_group_order = 10;
  EXPECT_THROW(run(g), resource_error);
}

TEST(Report, JsonSchema) {
  auto j = to_json(run(suite("ppp", 2, 2)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "m", "command", "result", "checks"}));
  for (const auto& chk : j["checks"]) {
    EXPECT_TRUE(chk.contains("name"));
    EXPECT_TRUE(chk.contains("expected"));
    EXPECT_TRUE(chk.contains("actual"));
    EXPECT_TRUE(chk["pass"].get<bool>());
  }
}

TEST(Report, RenderingIsDeterministic) {
  for (const char* cmd : {"basis", "groebner"}) {
    auto a = render_json(run(config(cmd, 3, 2)));
    auto b = render_json(run(config(cmd, 3, 2)));
    EXPECT_EQ(a, b);
  }
  EXPECT_EQ(render_json(run(suite("action-axioms", 2, 3))), render_json(run(suite("action-axioms", 2, 3))));
}

TEST(Binary, ExitCodesAndOutput) {
  auto ok = run_binary("act --n 3 --m 3 --element \"tau=3,1,2;weights=1,0,1\" --poly \"x1^2*x2\" --action quasi");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("(-1-z)*x1^2*x3"), std::string::npos);
  EXPECT_EQ(run_binary("verify --suite main --n 2 --m 2").status, 0);
  EXPECT_EQ(run_binary("verify --suite bogus --n 2 --m 2").status, 2);
  EXPECT_EQ(run_binary("basis --m 2").status, 2);
  EXPECT_EQ(run_binary("frobnicate --n 2").status, 2);
  EXPECT_EQ(run_binary("groebner --n 2 --m 2 --degree-bound 3").status, 1);
  EXPECT_EQ(run_binary("act --n 2 --m 2 --element \"tau=1,1;weights=0,0\" --poly x1").status, 2);
}

TEST(Binary, JsonOutputIsByteIdenticalAcrossRuns) {
  for (const char* args : {"groebner --n 3 --m 2 --json", "verify --suite hilbert --n 3 --m 3 --json",
                           "basis --n 2 --m 3 --json"}) {
    auto a = run_binary(args);
    auto b = run_binary(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_NO_THROW(Json::parse(a.out));
  }
}

TEST(Binary, EnvironmentCapsApply) {
  auto p = run_binary("verify --suite main --n 3 --m 3 --json");
  EXPECT_EQ(p.status, 0);
  std::string capped = "QSCOV_MAX_MATRIX_ENTRIES=50 " + std::string(QSCOV_CLI_PATH) +
                       " verify --suite main --n 3 --m 3 >/dev/null 2>&1";
  int raw = std::system(capped.c_str());
  EXPECT_TRUE(WIFEXITED(raw));
  EXPECT_EQ(WEXITSTATUS(raw), 3);
}
