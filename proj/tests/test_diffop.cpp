#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftop/diffop.hpp"

using namespace shiftop;

namespace {
DiffOp cycle_shift(const CtxPtr& ctx) {
  // u^{e_1} (1 2 ... N): conjugating this by w_i realizes w_i -> w_{i+1},
  // with w_N wrapping to w_1 + ħ.
  int N = ctx->N();
  std::vector<int> lam(static_cast<size_t>(N), 0);
  lam[0] = 1;
  return DiffOp::term(RatFunc::one(ctx), lam, Perm::cycle(N));
}
DiffOp cycle_shift_inv(const CtxPtr& ctx) {
  int N = ctx->N();
  std::vector<int> lam(static_cast<size_t>(N), 0);
  lam[static_cast<size_t>(N - 1)] = -1;
  return DiffOp::term(RatFunc::one(ctx), lam, Perm::cycle(N).inverse());
}
}  // namespace

TEST_CASE("shift relations of u_i") {
  auto ctx = Context::make(2, 0);
  auto w1 = MultiPoly::w(ctx, 1);
  auto hh = MultiPoly::h(ctx);
  // u_1 w_1 = (w_1 + ħ) u_1 and [w_1, u_1] = -ħ u_1.
  CHECK(DiffOp::u(ctx, 1) * DiffOp::w_mult(ctx, 1) ==
        DiffOp::mult(w1 + hh) * DiffOp::u(ctx, 1));
  CHECK(commutator(DiffOp::w_mult(ctx, 1), DiffOp::u(ctx, 1)) ==
        DiffOp::u(ctx, 1).scale(-1) * DiffOp::mult(hh));
  CHECK(DiffOp::u(ctx, 1) * DiffOp::u_inv(ctx, 1) == DiffOp::one(ctx));
  // u_1 commutes with w_2.
  CHECK(commutator(DiffOp::w_mult(ctx, 2), DiffOp::u(ctx, 1)).is_zero());
}

TEST_CASE("cyclic shift operator") {
  auto ctx = Context::make(3, 0);
  auto pi = cycle_shift(ctx);
  auto piinv = cycle_shift_inv(ctx);
  CHECK(pi * piinv == DiffOp::one(ctx));
  CHECK(piinv * pi == DiffOp::one(ctx));
  // pi w_i = w_{i+1} pi for i < N; pi w_N = (w_1 + ħ) pi.
  for (int i = 1; i < 3; ++i)
    CHECK(pi * DiffOp::w_mult(ctx, i) == DiffOp::w_mult(ctx, i + 1) * pi);
  CHECK(pi * DiffOp::w_mult(ctx, 3) ==
        DiffOp::mult(MultiPoly::w(ctx, 1) + MultiPoly::h(ctx)) * pi);
  // pi^N is the overall shift u_1 u_2 u_3.
  CHECK(pi.pow(3) == DiffOp::u(ctx, 1) * DiffOp::u(ctx, 2) * DiffOp::u(ctx, 3));
}

TEST_CASE("application to functions") {
  auto ctx = Context::make(3, 0);
  auto w1 = MultiPoly::w(ctx, 1);
  auto w2 = MultiPoly::w(ctx, 2);
  auto w3 = MultiPoly::w(ctx, 3);
  auto hh = MultiPoly::h(ctx);
  auto pi = cycle_shift(ctx);
  CHECK(pi.apply(w3) == RatFunc(w1 + hh));
  CHECK(pi.apply(w1) == RatFunc(w2));
  CHECK(DiffOp::u(ctx, 1).apply(w1 * w1) == RatFunc((w1 + hh) * (w1 + hh)));
  CHECK(DiffOp::swap_w(ctx, 1).apply(w1) == RatFunc(w2));
  // Composition is compatible with application.
  auto A = pi;
  auto B = DiffOp::swap_w(ctx, 1) * DiffOp::u(ctx, 2);
  auto f = w1 * w1 * w2 + w3;
  CHECK((A * B).apply(f) == A.apply(B.apply(f)));
  auto g = RatFunc::fraction(MultiPoly::one(ctx), {w1 - w2});
  CHECK((A * B).apply(g) == A.apply(B.apply(g)));
}

TEST_CASE("residue map drops permutations") {
  auto ctx = Context::make(3, 0);
  auto pi = cycle_shift(ctx);
  CHECK(pi.res() == DiffOp::u(ctx, 1));
  CHECK(cycle_shift_inv(ctx).res() == DiffOp::u_inv(ctx, 3));
  CHECK(DiffOp::swap_w(ctx, 2).res() == DiffOp::one(ctx));
}

TEST_CASE("symmetric-function preservation") {
  auto ctx = Context::make(2, 0);
  auto w1 = MultiPoly::w(ctx, 1);
  auto w2 = MultiPoly::w(ctx, 2);
  auto tt = MultiPoly::t(ctx);
  auto one = MultiPoly::one(ctx);
  // (1 - t/(w_1-w_2)) u_1 + (1 + t/(w_1-w_2)) u_2 preserves symmetry;
  // u_1 alone does not.
  auto c1 = RatFunc::fraction(w1 - w2 - tt, {w1 - w2});
  auto c2 = RatFunc::fraction(w2 - w1 - tt, {w2 - w1});
  auto E = c1 * DiffOp::u(ctx, 1) + c2 * DiffOp::u(ctx, 2);
  CHECK(E.preserves_symmetric(3));
  CHECK(!DiffOp::u(ctx, 1).preserves_symmetric(2));
  // The undeformed sum u_1 + u_2 is symmetric-preserving; the difference
  // passes in degree 1 (it kills e_1) but fails from degree 2 on.
  CHECK((DiffOp::u(ctx, 1) + DiffOp::u(ctx, 2)).preserves_symmetric(3));
  CHECK((DiffOp::u(ctx, 1) - DiffOp::u(ctx, 2)).preserves_symmetric(1));
  CHECK(!(DiffOp::u(ctx, 1) - DiffOp::u(ctx, 2)).preserves_symmetric(2));
}

TEST_CASE("symmetric helpers") {
  auto ctx = Context::make(3, 0);
  auto w1 = MultiPoly::w(ctx, 1);
  auto w2 = MultiPoly::w(ctx, 2);
  auto w3 = MultiPoly::w(ctx, 3);
  CHECK(elementary_symmetric(ctx, 1) == w1 + w2 + w3);
  CHECK(elementary_symmetric(ctx, 2) == w1 * w2 + w1 * w3 + w2 * w3);
  CHECK(elementary_symmetric(ctx, 3) == w1 * w2 * w3);
  CHECK(elementary_symmetric(ctx, 0).is_one());
  CHECK(power_sum(ctx, 2) == w1 * w1 + w2 * w2 + w3 * w3);
  // Newton's identity: p_2 = e_1 p_1 - 2 e_2.
  CHECK(power_sum(ctx, 2) ==
        elementary_symmetric(ctx, 1) * power_sum(ctx, 1) -
            elementary_symmetric(ctx, 2).scale(2));
}

TEST_CASE("classical limit bracket") {
  auto ctx = Context::make(2, 0);
  auto W2 = DiffOp::mult(power_sum(ctx, 2));
  auto Y1 = DiffOp::u_inv(ctx, 1) + DiffOp::u_inv(ctx, 2);
  // Bracket of sum w_i^2 with sum u_i^{-1} in the ħ -> 0 limit.
  auto expect = DiffOp::mult(MultiPoly::w(ctx, 1)) * DiffOp::u_inv(ctx, 1) +
                DiffOp::mult(MultiPoly::w(ctx, 2)) * DiffOp::u_inv(ctx, 2);
  CHECK(classical_bracket(W2, Y1) == expect.scale(2));
  // Non-divisible commutators are rejected: [w_1, s_1] has no ħ factor.
  CHECK_THROWS_AS(
      classical_bracket(DiffOp::w_mult(ctx, 1), DiffOp::swap_w(ctx, 1)),
      division_error);
}

TEST_CASE("rendering") {
  auto ctx = Context::make(2, 0);
  auto hh = MultiPoly::h(ctx);
  CHECK(DiffOp::zero(ctx).render() == "0");
  CHECK(DiffOp::one(ctx).render() == "1");
  CHECK(DiffOp::u(ctx, 1).render() == "u_1");
  CHECK(DiffOp::u_inv(ctx, 2).render() == "u_2^-1");
  CHECK(DiffOp::term(RatFunc(-hh), {1, 0}, Perm::simple(2, 1)).render() ==
        "-ħ*u_1*(1 2)");
  CHECK((DiffOp::u(ctx, 1) - DiffOp::u(ctx, 2)).render() == "u_1 - u_2");
  CHECK(cycle_shift(ctx).render() == "u_1*(1 2)");
}
