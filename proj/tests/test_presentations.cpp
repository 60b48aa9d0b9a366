#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftop/suites_weyl.hpp"

using namespace shiftop;

namespace {
CheckReport run_suite(void (*build)(Checker&, const SuiteParams&), const char* name,
                      int N, int l, int jobs = 2) {
  Checker c;
  SuiteParams p;
  p.N = N;
  p.l = l;
  build(c, p);
  return c.run(name, p, jobs);
}
void dump_failures(const CheckReport& r) {
  for (const auto& it : r.items)
    if (!it.pass) {
      INFO(it.id, ": ", it.anchor, " -> ", it.residual);
      CHECK(it.pass);
    }
}
}  // namespace

TEST_CASE("affine presentation holds for N=2,3") {
  for (int N : {2, 3}) {
    auto rep = run_suite(suite_hgr1, "hgr1", N, 0);
    dump_failures(rep);
    CHECK(rep.all_pass());
    CHECK(rep.items.size() > 10);
  }
}

TEST_CASE("affine presentation skips braid relations at N=2") {
  auto rep = run_suite(suite_hgr1, "hgr1", 2, 0);
  for (const auto& it : rep.items) CHECK(it.id.find("braid") == std::string::npos);
  auto rep3 = run_suite(suite_hgr1, "hgr1", 3, 0);
  int braid = 0;
  for (const auto& it : rep3.items)
    if (it.id.find("braid") != std::string::npos) ++braid;
  CHECK(braid == 3);
}

TEST_CASE("shift-generator presentation holds for N=2,3") {
  for (int N : {2, 3}) {
    auto rep = run_suite(suite_hgr2, "hgr2", N, 0);
    dump_failures(rep);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("double-coset relations hold for N=2,3") {
  for (int N : {2, 3}) {
    auto rep = run_suite(suite_rat, "rat", N, 0);
    dump_failures(rep);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("relations also hold with z parameters present") {
  auto rep = run_suite(suite_hgr2, "hgr2", 2, 2);
  dump_failures(rep);
  CHECK(rep.all_pass());
}

TEST_CASE("checker reports failures with residuals") {
  Checker c;
  auto ctx = Context::make(2, 0);
  c.add_zero("bad/one", "1 = 0", [ctx] { return DiffOp::one(ctx); });
  c.add_cond("bad/cond", "false", [] { return false; }, "it is false");
  c.add("bad/throw", "throws", []() -> std::optional<std::string> {
    throw domain_error("boom");
  });
  c.add_zero("good/zero", "0 = 0", [ctx] { return DiffOp::zero(ctx); });
  auto rep = c.run("bad", SuiteParams{}, 1, true);
  CHECK(rep.failures() == 3);
  CHECK(!rep.all_pass());
  CHECK(rep.items[0].residual == "1");
  CHECK(rep.items[1].residual == "it is false");
  CHECK(rep.items[2].residual == "exception: boom");
  CHECK(rep.items[3].pass);
  for (const auto& it : rep.items) CHECK(it.millis == 0);
}
