// Parser, renderer, and evaluator for the operator expression language.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shiftop/dsl.hpp"

using namespace shiftop;

namespace {
DiffOp op_of(const EvalValue& v) {
  REQUIRE(std::holds_alternative<DiffOp>(v));
  return std::get<DiffOp>(v);
}
RatFunc fn_of(const EvalValue& v) {
  REQUIRE(std::holds_alternative<RatFunc>(v));
  return std::get<RatFunc>(v);
}
}  // namespace

TEST_CASE("parsing builds the expected shapes") {
  ExprPtr e = parse("Res(X[1]) + Res(X[2])");
  CHECK(e->kind == Expr::Kind::sum);
  CHECK(e->a->kind == Expr::Kind::res);
  CHECK(e->b->kind == Expr::Kind::res);
  CHECK(e->a->a->name == "X");

  e = parse("comm(e[1], f[0])");
  CHECK(e->kind == Expr::Kind::comm);
  CHECK(e->a->name == "e");
  CHECK(e->b->idx == std::vector<int>{0});

  e = parse("F[1; 1]");
  CHECK(e->kind == Expr::Kind::slotop);
  CHECK(e->name == "F");
  CHECK(e->idx == std::vector<int>{1});
  CHECK(e->a->kind == Expr::Kind::literal);

  e = parse("2/3 * w[1] - s[1,2]");
  CHECK(e->kind == Expr::Kind::diff);
  CHECK(e->a->kind == Expr::Kind::prod);
  CHECK(e->a->a->lit == rat(2, 3));
  CHECK(e->b->idx == (std::vector<int>{1, 2}));
}

TEST_CASE("precedence") {
  ExprPtr e = parse("h + t * om");
  CHECK(e->kind == Expr::Kind::sum);
  CHECK(e->b->kind == Expr::Kind::prod);
  ExprPtr f = parse("(h + t) * om");
  CHECK(f->kind == Expr::Kind::prod);
  CHECK(equal(parse("h - t - om"), parse("(h - t) - om")));
  CHECK(!equal(parse("h - t - om"), parse("h - (t - om)")));
  CHECK(equal(parse("hbar"), parse("ħ")));
  CHECK(equal(parse("omega"), parse("om")));
}

TEST_CASE("syntax diagnostics carry positions") {
  try {
    parse("w[1] +\n q[2]");
    FAIL("expected a parse error");
  } catch (const parse_error& err) {
    CHECK(err.line() == 2);
    CHECK(err.col() == 2);
    CHECK(std::string(err.what()).find("unknown atom 'q'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("comm(w[1] w[2])"), parse_error);
  CHECK_THROWS_AS(parse("w[]"), parse_error);
  CHECK_THROWS_AS(parse("pi[1]"), parse_error);  // pi takes no index
  CHECK_THROWS_AS(parse("1/0"), parse_error);
  CHECK_THROWS_AS(parse(""), parse_error);
  CHECK_THROWS_AS(parse("w[1] +"), parse_error);
}

TEST_CASE("render round-trips every atom") {
  for (const char* s :
       {"E[1; 1]", "E[2; w[1] * w[2]]", "F[1; w[1] - h]", "X[1]", "Xinv[2]",
        "Y[1]", "y[2]", "w[3]", "u[1]", "uinv[2]", "s[0]", "s[1]", "s[1,3]",
        "pi", "piinv", "D0[2]", "e[0]", "f[1]", "p[2]", "B[2; w[1]]", "3",
        "5/7", "h", "t", "a", "om", "z[1]"}) {
    ExprPtr e = parse(s);
    CHECK(equal(parse(render(e)), e));
    CHECK(render(e) == s);  // atoms render canonically
  }
}

TEST_CASE("render round-trips on random expressions") {
  std::mt19937 rng(20260822);
  auto leaf = [&]() -> ExprPtr {
    switch (rng() % 6) {
      case 0: return parse("w[" + std::to_string(1 + rng() % 3) + "]");
      case 1: return parse("e[" + std::to_string(rng() % 3) + "]");
      case 2: return parse("h");
      case 3: return parse(std::to_string(rng() % 12));
      case 4: return parse("s[" + std::to_string(1 + rng() % 2) + "]");
      default: return parse("u[" + std::to_string(1 + rng() % 3) + "]");
    }
  };
  std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    if (depth == 0) return leaf();
    switch (rng() % 7) {
      case 0: return Expr::node(Expr::Kind::sum, gen(depth - 1), gen(depth - 1));
      case 1: return Expr::node(Expr::Kind::diff, gen(depth - 1), gen(depth - 1));
      case 2: return Expr::node(Expr::Kind::prod, gen(depth - 1), gen(depth - 1));
      case 3: return Expr::node(Expr::Kind::neg, gen(depth - 1));
      case 4: return Expr::node(Expr::Kind::comm, gen(depth - 1), gen(depth - 1));
      case 5: return Expr::node(Expr::Kind::res, gen(depth - 1));
      default: return leaf();
    }
  };
  for (int trial = 0; trial < 100; ++trial) {
    ExprPtr e = gen(3);
    ExprPtr back = parse(render(e));
    INFO(render(e));
    CHECK(equal(back, e));
  }
}

TEST_CASE("eval: basic operator identities") {
  auto ctx = Context::make(2, 0);
  CHECK(op_of(eval("comm(w[1], w[2])", ctx)).is_zero());
  CHECK(op_of(eval("s[1] * s[1] - 1", ctx)).is_zero());
  CHECK(op_of(eval("comm(e[1], f[0]) - comm(e[0], f[1])", ctx)).is_zero());

  auto c1 = Context::make(1, 0);
  // [w, u] = -ħ u as difference operators in one variable.
  DiffOp lhs = op_of(eval("comm(w[1], u[1])", c1));
  DiffOp rhs = op_of(eval("h * u[1]", c1)).scale(-1);
  CHECK(lhs == rhs);
  // In one variable [e_1, f_0] = ħ multiplication (normal-form computation).
  CHECK(op_of(eval("comm(e[1], f[0]) - h", c1)).is_zero());
}

TEST_CASE("eval: the N = 2 restriction identities") {
  auto ctx = Context::make(2, 0);
  CHECK(op_of(eval("Res(X[1]) + Res(X[2]) - E[1; 1]", ctx)).is_zero());
  CHECK(op_of(eval("Res(Xinv[1]) + Res(Xinv[2]) - F[1; 1]", ctx)).is_zero());

  auto cl1 = Context::make(2, 1);
  EvalOptions zero_z;
  zero_z.z_zero = true;
  CHECK(op_of(eval("Res(Y[1]) + Res(Y[2]) - F[1; 1]", cl1, zero_z)).is_zero());
}

TEST_CASE("eval: scalars, application, Bernoulli") {
  auto ctx = Context::make(2, 1);
  // B2(w) = w^2/2 + ħ w/2 + ħ^2/12; w[1] in operator position makes the
  // difference a multiplication operator.
  DiffOp v = op_of(eval("B[2; w[1]] - 1/2 * w[1] * w[1] - 1/2 * h * w[1]", ctx));
  CHECK(v == DiffOp::mult(rat(1, 12) * MultiPoly::h(ctx).pow(2)));
  RatFunc applied = fn_of(eval("apply(u[1]; w[1] * w[2])", ctx));
  MultiPoly want = (MultiPoly::w(ctx, 1) + MultiPoly::h(ctx)) * MultiPoly::w(ctx, 2);
  CHECK(applied == RatFunc(want));
  CHECK(fn_of(eval("z[1] + h", ctx)) ==
        RatFunc(MultiPoly::z(ctx, 1) + MultiPoly::h(ctx)));
  CHECK(fn_of(eval("p[2]", ctx)) == RatFunc(power_sum(ctx, 2)));
}

TEST_CASE("eval: domain errors") {
  auto ctx = Context::make(2, 0);
  CHECK_THROWS_AS(eval("w[3]", ctx), domain_error);
  CHECK_THROWS_AS(eval("Y[1]", ctx), domain_error);      // no cyclotomic factors
  CHECK_THROWS_AS(eval("z[1]", ctx), domain_error);      // l = 0
  CHECK_THROWS_AS(eval("E[3; 1]", ctx), domain_error);   // slots > N
  CHECK_NOTHROW(eval("E[1; w[1] + h]", ctx));
  CHECK_NOTHROW(eval("E[2; w[1] + w[2]]", ctx));
  CHECK_THROWS_AS(eval("E[2; w[1]]", ctx), domain_error);  // not symmetric
  CHECK_THROWS_AS(eval("s[2,1]", ctx), domain_error);

  auto cl2 = Context::make(2, 2);
  CHECK_THROWS_AS(eval("f[1]", cl2), domain_error);  // below the shift
  CHECK_NOTHROW(eval("f[2]", cl2));
}

TEST_CASE("eval: shifted f matches the dressed lowering operator") {
  auto ctx = Context::make(2, 1);
  EvalOptions o;
  o.conv = ShiftConv::unbarred;
  DiffOp viaDsl = op_of(eval("f[1]", ctx, o));
  CHECK(viaDsl == yangian_f_shifted(ctx, 0));
}
