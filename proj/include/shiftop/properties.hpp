#ifndef SHIFTOP_PROPERTIES_HPP
#define SHIFTOP_PROPERTIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shiftop/cyclotomic.hpp"
#include "shiftop/dsl.hpp"
#include "shiftop/series.hpp"

namespace shiftop {

/// Tally of a randomized property run: every individual checked equation
/// counts as one case.
struct PropertyStats {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void note(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

namespace propdetail {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  Rat coeff() { return rat(uniform(-9, 9), uniform(1, 3)); }

  /// Random polynomial: up to `terms` monomials over the context's symbols.
  MultiPoly poly(const CtxPtr& ctx, int terms = 3, int deg = 2) {
    MultiPoly p = MultiPoly::zero(ctx);
    int nt = uniform(1, terms);
    for (int i = 0; i < nt; ++i) {
      MultiPoly m = MultiPoly::constant(ctx, coeff());
      int d = uniform(0, deg);
      for (int j = 0; j < d; ++j)
        m *= MultiPoly::sym(ctx, uniform(0, ctx->nsym() - 1));
      p += m;
    }
    return p;
  }

  MultiPoly nonzero_poly(const CtxPtr& ctx, int terms = 3, int deg = 2) {
    for (;;) {
      MultiPoly p = poly(ctx, terms, deg);
      if (!p.is_zero()) return p;
    }
  }

  /// Random difference-reflection operator: products/sums of generators.
  DiffOp op(const CtxPtr& ctx) {
    auto unit = [&]() -> DiffOp {
      switch (uniform(0, 5)) {
        case 0: return DiffOp::w_mult(ctx, uniform(1, ctx->N()));
        case 1: return DiffOp::u(ctx, uniform(1, ctx->N()));
        case 2: return DiffOp::u_inv(ctx, uniform(1, ctx->N()));
        case 3: return DiffOp::swap_w(ctx, uniform(1, ctx->N() - 1));
        case 4: return dl_s(ctx, uniform(1, ctx->N() - 1));
        default: return DiffOp::mult(poly(ctx, 2, 1));
      }
    };
    DiffOp a = unit();
    switch (uniform(0, 2)) {
      case 0: return a;
      case 1: return a * unit();
      default: return a + unit();
    }
  }

  /// Random truncated series with polynomial coefficients.
  TruncSeries series(const CtxPtr& ctx, int order, bool unit_constant) {
    TruncSeries s = unit_constant ? TruncSeries::one(ctx, order)
                                  : TruncSeries::zero(ctx, order);
    for (int n = unit_constant ? 1 : 0; n <= order; ++n)
      if (uniform(0, 1)) s.set_coeff(n, poly(ctx, 2, 1));
    return s;
  }

  CycNum cyc(int l) {
    CycNum v = CycNum::zero(l);
    for (int j = 0; j < l; ++j)
      v = v + Rat(uniform(-6, 6)) * CycNum::eps_pow(l, j);
    return v;
  }
  CycNum cyc_unit(int l) {
    for (;;) {
      CycNum v = cyc(l);
      if (!v.is_zero()) return v;
    }
  }

  /// Random well-formed expression tree for round-trip checks.
  ExprPtr expr(int depth) {
    if (depth == 0) return leaf();
    switch (uniform(0, 8)) {
      case 0: return Expr::node(Expr::Kind::sum, expr(depth - 1), expr(depth - 1));
      case 1: return Expr::node(Expr::Kind::diff, expr(depth - 1), expr(depth - 1));
      case 2: return Expr::node(Expr::Kind::prod, expr(depth - 1), expr(depth - 1));
      case 3: return Expr::node(Expr::Kind::neg, expr(depth - 1));
      case 4: return Expr::node(Expr::Kind::comm, expr(depth - 1), expr(depth - 1));
      case 5: return Expr::node(Expr::Kind::res, expr(depth - 1));
      case 6:
        return Expr::named(Expr::Kind::slotop, uniform(0, 1) ? "E" : "F",
                           {uniform(1, 2)}, poly_expr(depth - 1));
      case 7:
        return Expr::named(Expr::Kind::bern, "B", {uniform(1, 3)},
                           poly_expr(depth - 1));
      default: return leaf();
    }
  }

 private:
  ExprPtr leaf() {
    switch (uniform(0, 9)) {
      case 0: return parse("w[" + std::to_string(uniform(1, 3)) + "]");
      case 1: return parse("u[" + std::to_string(uniform(1, 3)) + "]");
      case 2: return parse("e[" + std::to_string(uniform(0, 3)) + "]");
      case 3: return parse("X[" + std::to_string(uniform(1, 3)) + "]");
      case 4: return parse("s[" + std::to_string(uniform(0, 2)) + "]");
      case 5: return parse("D0[" + std::to_string(uniform(1, 3)) + "]");
      case 6: return Expr::literal_of(rat(uniform(0, 9), uniform(1, 4)));
      case 7: return parse("h");
      case 8: return parse("z[1]");
      default: return parse("pi");
    }
  }
  ExprPtr poly_leaf() {
    switch (uniform(0, 3)) {
      case 0: return parse("w[" + std::to_string(uniform(1, 2)) + "]");
      case 1: return parse("t");
      case 2: return Expr::literal_of(rat(uniform(0, 9), uniform(1, 4)));
      default: return parse("h");
    }
  }
  ExprPtr poly_expr(int depth) {
    if (depth <= 0) return poly_leaf();
    switch (uniform(0, 3)) {
      case 0:
        return Expr::node(Expr::Kind::sum, poly_expr(depth - 1),
                          poly_expr(depth - 1));
      case 1:
        return Expr::node(Expr::Kind::prod, poly_expr(depth - 1),
                          poly_expr(depth - 1));
      case 2: return Expr::node(Expr::Kind::neg, poly_expr(depth - 1));
      default: return poly_leaf();
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace propdetail

/// Randomized verification of the engine's structural axioms. Deterministic
/// for a fixed seed; every checked equation counts as one case.
inline PropertyStats run_property_battery(uint64_t seed = 20260822) {
  using propdetail::Gen;
  PropertyStats st;
  Gen g(seed);
  auto ctx = Context::make(2, 1);

  // Commutative-ring axioms for exact multivariate polynomials.
  for (int trial = 0; trial < 120; ++trial) {
    MultiPoly p = g.poly(ctx), q = g.poly(ctx), r = g.poly(ctx);
    st.note((p + q) + r == p + (q + r), "poly: addition associativity");
    st.note(p + q == q + p, "poly: addition commutativity");
    st.note((p * q) * r == p * (q * r), "poly: multiplication associativity");
    st.note(p * q == q * p, "poly: multiplication commutativity");
    st.note(p * (q + r) == p * q + p * r, "poly: distributivity");
    st.note((p - p).is_zero() && (MultiPoly::one(ctx) * p == p),
            "poly: additive inverse and unit");
  }

  // Exact division is the two-sided inverse of multiplication.
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly p = g.poly(ctx);
    MultiPoly q = g.nonzero_poly(ctx);
    MultiPoly prod = p * q;
    st.note(prod.exact_divide(q) == p, "poly: exact division inverts product");
    auto back = prod.try_divide(q);
    st.note(back.has_value() && *back == p, "poly: try_divide inverts product");
  }

  // Field axioms for rational functions.
  for (int trial = 0; trial < 60; ++trial) {
    RatFunc f(g.poly(ctx));
    RatFunc den(g.nonzero_poly(ctx, 2, 1));
    RatFunc h = f / den;
    st.note(h * den == f, "ratfunc: division then multiplication");
    RatFunc k(g.poly(ctx, 2, 1));
    st.note((h + k) - k == h, "ratfunc: addition then subtraction");
    st.note(h * k == k * h, "ratfunc: multiplication commutativity");
  }

  // Operator algebra: associativity, distributivity, and the module action.
  for (int trial = 0; trial < 60; ++trial) {
    DiffOp A = g.op(ctx), B = g.op(ctx), C = g.op(ctx);
    st.note((A * B) * C == A * (B * C), "op: multiplication associativity");
    st.note(A * (B + C) == A * B + A * C, "op: left distributivity");
    MultiPoly f = g.poly(ctx, 2, 1);
    st.note((A * B).apply(f) == A.apply(B.apply(f)),
            "op: action respects composition");
    st.note((A + B).apply(f) == A.apply(f) + B.apply(f),
            "op: action respects addition");
  }

  // Parse-render round trip on random well-formed expressions.
  for (int trial = 0; trial < 120; ++trial) {
    ExprPtr e = g.expr(3);
    bool ok = false;
    std::string text;
    try {
      text = render(e);
      ok = equal(parse(text), e);
    } catch (const std::exception&) {
      ok = false;
    }
    st.note(ok, "dsl: parse(render(e)) != e for " + text);
  }

  // Cyclotomic field axioms at random orders.
  for (int trial = 0; trial < 40; ++trial) {
    int l = g.uniform(1, 8);
    CycNum a = g.cyc(l), b = g.cyc(l), c = g.cyc(l);
    st.note((a * b) * c == a * (b * c), "cyc: multiplication associativity");
    st.note(a * (b + c) == a * b + a * c, "cyc: distributivity");
    CycNum u = g.cyc_unit(l);
    st.note(u * u.inverse() == CycNum::one(l), "cyc: multiplicative inverse");
  }

  // Truncated series: ring laws and exp/log/reciprocal inverses.
  for (int trial = 0; trial < 40; ++trial) {
    TruncSeries S = g.series(ctx, 6, true);
    TruncSeries T = g.series(ctx, 6, true);
    st.note(S * T == T * S, "series: multiplication commutativity");
    st.note(S * S.reciprocal() == TruncSeries::one(ctx, 6),
            "series: reciprocal inverts");
    st.note((S * T).log() == S.log() + T.log(),
            "series: log turns products into sums");
  }

  return st;
}

}  // namespace shiftop

#endif  // SHIFTOP_PROPERTIES_HPP
