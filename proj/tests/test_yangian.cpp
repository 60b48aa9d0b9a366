#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftop/suites_yangian.hpp"

using namespace shiftop;

namespace {

CheckReport run_suite(void (*suite)(Checker&, const SuiteParams&), const char* name,
                      const SuiteParams& p) {
  Checker c;
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

TEST_CASE("phi series: support, leading coefficient, parameter zeros") {
  auto ctx = Context::make(2, 1);
  MultiPoly h = MultiPoly::h(ctx), t = MultiPoly::t(ctx);
  for (int n = 0; n <= 3; ++n) {
    auto s = phi_series(ctx, n, n + 5);
    // Vanishes below x^{n+3}.
    for (int k = 0; k <= n + 2; ++k) CHECK(s.coeff(k).is_zero());
    // Leading coefficient ħ t (ħ+t) (n+1)(n+2).
    CHECK(s.coeff(n + 3) == rat((n + 1) * (n + 2)) * (h * t * (h + t)));
    // Exactly divisible by ħ.
    auto q = phi_over_h(ctx, n, n + 5);
    CHECK(q.coeff(n + 3) == rat((n + 1) * (n + 2)) * (t * (h + t)));
    // Every coefficient dies at ħ = 0, t = 0, and ħ = -t.
    for (int k = 0; k <= n + 5; ++k) {
      CHECK(substitute_symbol(s.coeff(k), ctx->h(), MultiPoly::zero(ctx)).is_zero());
      CHECK(substitute_symbol(s.coeff(k), ctx->t(), MultiPoly::zero(ctx)).is_zero());
      CHECK(substitute_symbol(s.coeff(k), ctx->h(), -t).is_zero());
    }
  }
}

TEST_CASE("log difference building block at small orders") {
  auto ctx = Context::make(1, 0);
  MultiPoly q = MultiPoly::h(ctx);
  // n = 0: log(1+qx) - log(1-qx) = 2(qx + q³x³/3 + ...).
  auto s = g_difference(ctx, 0, q, 4);
  CHECK(s.coeff(0).is_zero());
  CHECK(s.coeff(1) == rat(2) * q);
  CHECK(s.coeff(2).is_zero());
  CHECK(s.coeff(3) == rat(2, 3) * q.pow(3));
  // n = 2: x²((1-qx)^{-2} - (1+qx)^{-2})/2 = 2qx³ + 4q³x⁵ + ...
  auto s2 = g_difference(ctx, 2, q, 6);
  CHECK(s2.coeff(3) == rat(2) * q);
  CHECK(s2.coeff(4).is_zero());
  CHECK(s2.coeff(5) == rat(4) * q.pow(3));
}

TEST_CASE("diagonal levels of the product current at two sites") {
  auto ctx = Context::make(2, 0);
  MultiPoly h = MultiPoly::h(ctx), t = MultiPoly::t(ctx);
  auto hs = cartan_levels(product_current(ctx, ShiftConv::unbarred, 6, false), 0);
  CHECK(hs[0].is_zero());
  CHECK(hs[1] == MultiPoly::constant(ctx, 2));
  MultiPoly d1 = cartan_poly(ctx, ShiftConv::unbarred, 1);
  CHECK(hs[2] == rat(2) * d1 + rat(2) * (h - t));
  // D_1 = w_1 + w_2 + t (balanced degree-one Cartan sum at two sites).
  CHECK(d1 == MultiPoly::w(ctx, 1) + MultiPoly::w(ctx, 2) + t);
}

TEST_CASE("single-site bracket closed form") {
  // At one site [e_m, f_n] is multiplication by (w+ħ)^{m+n} - w^{m+n}.
  auto ctx = Context::make(1, 0);
  MultiPoly w = MultiPoly::w(ctx, 1), h = MultiPoly::h(ctx);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n + m <= 4; ++n) {
      DiffOp lhs = commutator(yangian_e(ctx, ShiftConv::unbarred, m),
                              yangian_f(ctx, ShiftConv::unbarred, n));
      DiffOp rhs = DiffOp::mult((w + h).pow(m + n) - w.pow(m + n));
      CHECK(lhs == rhs);
      CHECK(lhs == ef_commutator_closed(ctx, ShiftConv::unbarred, m, n));
    }
}

TEST_CASE("raising and lowering sums preserve symmetric polynomials") {
  auto ctx = Context::make(3, 0);
  for (int n = 0; n <= 2; ++n) {
    CHECK(yangian_e(ctx, ShiftConv::barred, n).preserves_symmetric(3));
    CHECK(yangian_f(ctx, ShiftConv::barred, n).preserves_symmetric(3));
    CHECK(yangian_e(ctx, ShiftConv::unbarred, n).preserves_symmetric(3));
  }
}

TEST_CASE("exponential equals product current, three sites") {
  auto ctx = Context::make(3, 0);
  MultiPoly om = MultiPoly::constant(ctx, 3);
  for (auto conv : {ShiftConv::barred, ShiftConv::unbarred}) {
    CHECK(cartan_current(ctx, conv, om, 6, false) ==
          product_current(ctx, conv, 6, false));
  }
}

TEST_CASE("degreewise suite passes at two sites with one z parameter") {
  SuiteParams p;  // N = 2, l = 1, order = 8, max_degree = 4
  auto r = run_suite(suite_yangian, "yangian", p);
  dump_failures(r);
  CHECK(r.all_pass());
  CHECK(r.items.size() > 100);
}

TEST_CASE("degreewise suite passes at three sites") {
  SuiteParams p;
  p.N = 3;
  p.l = 0;
  p.order = 6;
  p.max_degree = 3;
  auto r = run_suite(suite_yangian, "yangian", p);
  dump_failures(r);
  CHECK(r.all_pass());
}
