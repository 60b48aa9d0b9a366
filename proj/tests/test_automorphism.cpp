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

TEST_CASE("binomial transform at low degree") {
  auto ctx = Context::make(2, 0);
  MultiPoly a = MultiPoly::a(ctx);
  DiffOp e0 = yangian_e(ctx, ShiftConv::unbarred, 0);
  DiffOp e1 = yangian_e(ctx, ShiftConv::unbarred, 1);
  DiffOp e2 = yangian_e(ctx, ShiftConv::unbarred, 2);
  // tau(e_1) = a e_0 + e_1, tau(e_2) = a² e_0 + 2a e_1 + e_2.
  DiffOp t1 = a * e0 + e1;
  DiffOp t2 = (a * a) * e0 + (rat(2) * a) * e1 + e2;
  // The degree-one Cartan generator acts diagonally, [D_1, e_n] = -ħ e_n,
  // so its bracket fixes every binomial transform up to the -ħ factor.
  DiffOp D1 = cartan_op(ctx, ShiftConv::unbarred, 1);
  CHECK(commutator(D1, t1) == (-MultiPoly::h(ctx)) * t1);
  CHECK(commutator(D1, t2) == (-MultiPoly::h(ctx)) * t2);
}

TEST_CASE("central corrections extracted symbolically in omega") {
  auto ctx = Context::make(1, 0);
  int K = 6;
  MultiPoly a = MultiPoly::a(ctx);
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  MultiPoly om = MultiPoly::omega(ctx);
  TruncSeries ratio = TruncSeries::linear(ctx, K, -(a + h + t));
  ratio = ratio * TruncSeries::linear(ctx, K, -(a - om * t));
  ratio = ratio * inv_one_minus(ctx, K, a);
  ratio = ratio * inv_one_minus(ctx, K, a + h + (MultiPoly::one(ctx) - om) * t);
  TruncSeries g = (ratio * cartan_prefactor(ctx, om, K).reciprocal()).log();
  CHECK(g.coeff(1).is_zero());
  CHECK(g.coeff(2).is_zero());
  // Peel off C_1 and C_2 against phi_0/ħ and phi_1/ħ.
  MultiPoly den = t * (h + t);
  MultiPoly c1 = (-g.coeff(3)).exact_divide(den).scale(rat(1, 2));
  CHECK(c1 == a * om);
  TruncSeries res = g + c1 * phi_over_h(ctx, 0, K);
  MultiPoly c2 = (-res.coeff(4)).exact_divide(den).scale(rat(1, 6));
  // Half the sum rule: C_2 = (ω(a²+ħa) - atω(ω-1))/2, matching the two-term
  // balanced Bernoulli sum B̄_2(a+s) - B̄_2(s) = a²/2 + as + ħa/2 summed over
  // s = 0, -t, ..., -(ω-1)t.
  MultiPoly want = om * (a * a + h * a) - a * t * om * (om - MultiPoly::one(ctx));
  CHECK(c2 == want.scale(rat(1, 2)));
}

TEST_CASE("automorphism suite, two sites") {
  SuiteParams p;
  p.N = 2;
  p.l = 0;
  p.order = 7;
  p.max_degree = 3;
  auto r = run_suite(suite_tau, "tau", p);
  dump_failures(r);
  CHECK(r.all_pass());
}

TEST_CASE("automorphism suite, one site with defaults") {
  SuiteParams p;
  p.N = 1;
  p.l = 1;
  auto r = run_suite(suite_tau, "tau", p);
  dump_failures(r);
  CHECK(r.all_pass());
}
