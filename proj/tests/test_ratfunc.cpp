#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftop/ratfunc.hpp"

using namespace shiftop;

namespace {
CtxPtr ctx = Context::make(2, 0);
MultiPoly W(int i) { return MultiPoly::w(ctx, i); }
MultiPoly H() { return MultiPoly::h(ctx); }
MultiPoly T() { return MultiPoly::t(ctx); }
}  // namespace

TEST_CASE("construction and cancellation") {
  auto r = RatFunc::fraction(W(1) * W(1) - W(2) * W(2), {W(1) - W(2)});
  CHECK(r.den_trivial());
  CHECK(r.num() == W(1) + W(2));
  CHECK(r.is_polynomial());
  CHECK(r.as_poly() == W(1) + W(2));

  auto s = RatFunc::fraction(MultiPoly::one(ctx), {W(1) - W(2)});
  CHECK(!s.is_polynomial());
  CHECK_THROWS_AS(s.as_poly(), domain_error);
}

TEST_CASE("monic normalization absorbs scalars") {
  // 1/(w_2 - w_1) is stored as -1 over the monic factor (w_1 - w_2).
  auto r = RatFunc::fraction(MultiPoly::one(ctx), {W(2) - W(1)});
  CHECK(r.num() == -MultiPoly::one(ctx));
  CHECK(r.den_factors().count(W(1) - W(2)) == 1);
  auto s = RatFunc::fraction(MultiPoly::one(ctx), {W(1) - W(2)});
  CHECK(r + s == RatFunc::zero(ctx));
}

TEST_CASE("field arithmetic") {
  auto f = RatFunc::fraction(W(1) - W(2) - T(), {W(1) - W(2)});
  auto g = RatFunc::fraction(W(2) - W(1) - T(), {W(2) - W(1)});
  CHECK(f + g == RatFunc::constant(ctx, 2));

  auto r = RatFunc::fraction(W(1) - W(2), {W(1) + W(2)});
  CHECK(r.inverse() == RatFunc::fraction(W(1) + W(2), {W(1) - W(2)}));
  CHECK(r * r.inverse() == RatFunc::one(ctx));
  CHECK(r / r == RatFunc::one(ctx));
  CHECK((r - r).is_zero());
  CHECK(r.scale(rat(3, 2)).num() == (W(1) - W(2)).scale(rat(3, 2)));
}

TEST_CASE("difference-coefficient identity") {
  // -ħ[(x-t)(x+ħ+t)/(x(x+ħ)) - (x-ħ+t)(x-2ħ-t)/((x-ħ)(x-2ħ))]
  //   + 2ħt(ħ+t)[1/(x(x-2ħ)) - 1/((x+ħ)(x-ħ))] = 0   with x = w_1 - w_2.
  auto x = W(1) - W(2);
  auto hh = H();
  auto tt = T();
  auto one = MultiPoly::one(ctx);
  auto A = RatFunc::fraction((x - tt) * (x + hh + tt), {x, x + hh});
  auto B = RatFunc::fraction((x - hh + tt) * (x - hh - hh - tt), {x - hh, x - hh - hh});
  auto C = RatFunc::fraction(one, {x, x - hh - hh});
  auto D = RatFunc::fraction(one, {x + hh, x - hh});
  auto lhs = (RatFunc(-hh)) * (A - B) + RatFunc(Rat(2) * (hh * tt * (hh + tt))) * (C - D);
  CHECK(lhs.is_zero());
}

TEST_CASE("substitution and degeneration") {
  auto r = RatFunc::fraction(MultiPoly::one(ctx), {W(1) - W(2)});
  CHECK_THROWS_AS(r.subst_sym(ctx->w(2), W(1)), division_error);

  auto s = RatFunc::fraction(MultiPoly::one(ctx), {W(1) - T()});
  // w_1 -> t + 2 makes the factor the constant 2.
  CHECK(s.subst_sym(ctx->w(1), T() + MultiPoly::constant(ctx, 2)) ==
        RatFunc::constant(ctx, rat(1, 2)));

  // w_1 -> w_1^2 turns the factor nonlinear: lands in the residual but the
  // value is still exact.
  auto q = s.subst_sym(ctx->w(1), W(1) * W(1));
  CHECK(!q.den_residual().is_one());
  CHECK(q * RatFunc(W(1) * W(1) - T()) == RatFunc::one(ctx));

  CHECK(r.shifted_w({1, 0}) ==
        RatFunc::fraction(MultiPoly::one(ctx), {W(1) + H() - W(2)}));
  CHECK(r.permuted_w({2, 1}) == -r);
  CHECK(r.specialize_zero({ctx->w(2)}) ==
        RatFunc::fraction(MultiPoly::one(ctx), {W(1)}));
}

TEST_CASE("symmetry detection") {
  auto sym = RatFunc::fraction(W(1) + W(2), {W(1), W(2)});
  CHECK(sym.is_symmetric_in_w());
  auto asym = RatFunc::fraction(MultiPoly::one(ctx), {W(1) - W(2)});
  CHECK(!asym.is_symmetric_in_w());
}

TEST_CASE("division by a polynomial") {
  auto r = RatFunc(H() * W(1)).divided_by(H());
  CHECK(r == RatFunc(W(1)));
  auto s = RatFunc(W(1)).divided_by(H());
  CHECK(s.den_factors().count(H()) == 1);
}

TEST_CASE("rendering") {
  auto r = RatFunc::fraction(MultiPoly::one(ctx), {W(1) - W(2)});
  CHECK(r.render() == "1 / (w_1 - w_2)");
  auto s = RatFunc::fraction(W(1) + H(), {W(1) - W(2), W(1) + W(2)});
  CHECK(s.render() == "(w_1 + ħ) / ((w_1 - w_2)*(w_1 + w_2))");
  auto sq = RatFunc::fraction(MultiPoly::one(ctx), {W(1) - W(2), W(1) - W(2)});
  CHECK(sq.render() == "1 / (w_1 - w_2)^2");
  CHECK(RatFunc::constant(ctx, rat(-1, 2)).render() == "-1/2");
}
