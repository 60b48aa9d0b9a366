// Contract test for the command-line runner: exit codes, report formats,
// and agreement with the library's own rendering. Drives the binary named
// by the SHIFTOP_BIN environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "shiftop/dsl.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("SHIFTOP_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SHIFTOP_BIN must point at the CLI binary");
  return bin;
}

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("check: passing suite exits 0") {
  RunResult r = run("check spherical --N 2 --l 1 --deterministic");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("summary") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("check: failing identity exits 1 and reports the residual") {
  RunResult r = run("check harness-control --format json --deterministic");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["failures"] == 1);
  CHECK(j["summary"]["all_pass"] == false);
  bool saw_residual = false;
  for (const auto& item : j["items"])
    if (item["status"] == "fail") {
      CHECK(item["residual"] == "intentional nonzero residual");
      saw_residual = true;
    }
  CHECK(saw_residual);
}

TEST_CASE("usage errors exit 2, distinct from verification failure") {
  CHECK(run("check nosuchsuite").exit_code == 2);
  CHECK(run("check cyclotomic --bogus-flag").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("eval \"q[1]\"").exit_code == 2);               // unknown atom
  CHECK(run("eval \"w[5]\" --N 2").exit_code == 2);         // index range
  CHECK(run("check tsy --order 5 --max-degree 4").exit_code == 2);  // precondition
}

TEST_CASE("json report carries the schema fields and is byte-stable") {
  RunResult a = run("check cyclotomic --format json --deterministic");
  RunResult b = run("check cyclotomic --format json --deterministic");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["suite"] == "cyclotomic");
  CHECK(j["context"]["N"] == 2);
  CHECK(j["context"]["l"] == 1);
  CHECK(j["context"]["order"] == 8);
  REQUIRE(j["items"].is_array());
  REQUIRE(j["items"].size() > 0);
  for (const auto& item : j["items"]) {
    CHECK(item.contains("id"));
    CHECK(item.contains("anchor"));
    CHECK(item.contains("status"));
    CHECK(item.contains("millis"));
    CHECK((item["status"] == "pass" || item["status"] == "fail"));
  }
  CHECK(j["summary"]["total"] == j["items"].size());
}

TEST_CASE("text report is byte-stable under --deterministic") {
  RunResult a = run("check poisson --N 2 --deterministic");
  RunResult b = run("check poisson --N 2 --deterministic");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("eval matches the library rendering") {
  using namespace shiftop;
  RunResult r = run("eval \"comm(w[1], u[1])\" --N 1 --l 0");
  CHECK(r.exit_code == 0);
  auto ctx = Context::make(1, 0);
  CHECK(r.out == render_value(eval("comm(w[1], u[1])", ctx)) + "\n");
  // The commutator is -ħ times the shift operator.
  CHECK(eval_operator("comm(w[1], u[1])", ctx) ==
        DiffOp::mult(-MultiPoly::h(ctx)) * DiffOp::u(ctx, 1));
}

TEST_CASE("apply matches the library action") {
  using namespace shiftop;
  RunResult r = run("apply \"s[1]\" --to \"w[1] * w[1]\" --N 2 --l 0");
  CHECK(r.exit_code == 0);
  auto ctx = Context::make(2, 0);
  RatFunc want = eval_operator("s[1]", ctx).apply(
      MultiPoly::w(ctx, 1) * MultiPoly::w(ctx, 1));
  CHECK(r.out == want.render() + "\n");
}

TEST_CASE("check all at reduced bounds covers every registered suite") {
  RunResult r = run(
      "check all --N 2 --l 1 --order 6 --max-degree 2 --jobs 2 --format json "
      "--deterministic");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "all");
  CHECK(j["summary"]["failures"] == 0);
  // Every registered suite contributes at least one item.
  for (const char* name :
       {"hgr1/", "hgr2/", "rat/", "dunkl/", "exchange/", "reorder/",
        "leading/", "spherical/", "powersum/", "yangian/", "tsy/", "tau/",
        "shifted/", "cyclotomic/", "poisson/"}) {
    bool found = false;
    for (const auto& item : j["items"])
      if (std::string(item["id"]).rfind(name, 0) == 0) {
        found = true;
        break;
      }
    INFO(name);
    CHECK(found);
  }
}
