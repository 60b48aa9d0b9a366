#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftop/suites_embed.hpp"

using namespace shiftop;

namespace {

CheckReport run_suite(void (*suite)(Checker&, const SuiteParams&),
                      const char* name, int N, int l) {
  Checker c;
  SuiteParams p;
  p.N = N;
  p.l = l;
  suite(c, p);
  return c.run(name, p, 2);
}

void dump_failures(const CheckReport& r) {
  for (const auto& item : r.items)
    if (!item.pass) {
      INFO(item.id << " [" << item.anchor << "]: " << item.residual);
      CHECK(item.pass);
    }
}

}  // namespace

TEST_CASE("restricted generator sums equal the spherical operators") {
  for (int N = 2; N <= 3; ++N)
    for (int l = 0; l <= 2; ++l) {
      auto r = run_suite(suite_spherical, "spherical", N, l);
      dump_failures(r);
      CHECK(r.all_pass());
    }
}

TEST_CASE("two-variable lowering sum in closed form") {
  auto ctx = Context::make(2, 0);
  auto w1 = MultiPoly::w(ctx, 1);
  auto w2 = MultiPoly::w(ctx, 2);
  auto tt = MultiPoly::t(ctx);
  auto frac = [&](MultiPoly n, MultiPoly d) {
    return RatFunc::fraction(std::move(n), {std::move(d)});
  };
  auto sum = dl_X_inv(ctx, 1).res() + dl_X_inv(ctx, 2).res();
  auto expect = frac(w1 - w2 + tt, w1 - w2) * DiffOp::u_inv(ctx, 1) +
                frac(w2 - w1 + tt, w2 - w1) * DiffOp::u_inv(ctx, 2);
  CHECK(sum == expect);
  CHECK(sum == F_op(SymPoly::one(1, 0), ctx));
}

TEST_CASE("one cyclotomic factor specialized at zero") {
  auto ctx = Context::make(2, 1);
  auto w1 = MultiPoly::w(ctx, 1);
  auto w2 = MultiPoly::w(ctx, 2);
  auto tt = MultiPoly::t(ctx);
  auto hh = MultiPoly::h(ctx);
  auto frac = [&](MultiPoly n, MultiPoly d) {
    return RatFunc::fraction(std::move(n), {std::move(d)});
  };
  std::vector<MultiPoly> z0 = {MultiPoly::zero(ctx)};
  auto F = F_op(SymPoly::one(1, 1), ctx, z0);
  auto expect = frac(w1 - w2 + tt, w1 - w2) * RatFunc(w1 - hh) *
                    DiffOp::u_inv(ctx, 1) +
                frac(w2 - w1 + tt, w2 - w1) * RatFunc(w2 - hh) *
                    DiffOp::u_inv(ctx, 2);
  CHECK(F == expect);
  // The same sum arises from the cyclotomic lowering generators at z = 0.
  auto sum = oblomkov_Y(ctx, 1, z0).res() + oblomkov_Y(ctx, 2, z0).res();
  CHECK(sum == F);
}

TEST_CASE("single variable lowering operator") {
  auto ctx = Context::make(1, 0);
  CHECK(F_op(SymPoly::one(1, 0), ctx) == DiffOp::u_inv(ctx, 1));
  CHECK(E_op(SymPoly::one(1, 0), ctx) == DiffOp::u(ctx, 1));
}

TEST_CASE("power sums against the raising operators") {
  for (int N = 1; N <= 3; ++N)
    for (int l = 0; l <= 1; ++l) {
      auto r = run_suite(suite_powersum, "powersum", N, l);
      dump_failures(r);
      CHECK(r.all_pass());
    }
}

TEST_CASE("raising commutator reproduces a direct expansion at small size") {
  // [p_1(w), E_1[1]] = -ħ E_1[1] at N = 1: a one-line sanity anchor.
  auto ctx = Context::make(1, 0);
  auto E = E_op(SymPoly::one(1, 0), ctx);
  CHECK(commutator(DiffOp::mult(power_sum(ctx, 1)), E) ==
        (MultiPoly::h(ctx) * E).scale(-1));
}
