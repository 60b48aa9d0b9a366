#ifndef SHIFTOP_SUITES_YANGIAN_HPP
#define SHIFTOP_SUITES_YANGIAN_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "shiftop/check.hpp"
#include "shiftop/yangian.hpp"

namespace shiftop {

namespace detail {

/// First nonzero coefficient of a scalar series difference, rendered.
inline std::optional<std::string> series_residual(const TruncSeries& d) {
  for (int n = 0; n <= d.order(); ++n)
    if (!d.coeff(n).is_zero())
      return "x^" + std::to_string(n) + ": " + d.coeff(n).render();
  return std::nullopt;
}

/// First nonzero coefficient of an operator series difference, rendered.
inline std::optional<std::string> series_residual(const OpSeries& d) {
  for (int n = 0; n <= d.order(); ++n)
    if (!d.coeff(n).is_zero())
      return "x^" + std::to_string(n) + ": " + d.coeff(n).render();
  return std::nullopt;
}

inline std::optional<std::string> poly_residual(const MultiPoly& d) {
  if (d.is_zero()) return std::nullopt;
  return d.render();
}

/// Elementary symmetric polynomial e_k of an explicit list of polynomials.
inline MultiPoly esym_list(const CtxPtr& ctx, const std::vector<MultiPoly>& xs, int k) {
  if (k < 0 || k > static_cast<int>(xs.size())) return MultiPoly::zero(ctx);
  std::vector<MultiPoly> e(static_cast<size_t>(k) + 1, MultiPoly::zero(ctx));
  e[0] = MultiPoly::one(ctx);
  int cnt = 0;
  for (const MultiPoly& x : xs) {
    ++cnt;
    for (int j = std::min(k, cnt); j >= 1; --j)
      e[static_cast<size_t>(j)] += x * e[static_cast<size_t>(j) - 1];
  }
  return e[static_cast<size_t>(k)];
}

/// The degree-n slot symbol (w + ħ - shift)^n multiplied by an extra factor
/// given as a polynomial in the slot variable of a fresh one-slot context.
inline SymPoly slot_times(const CtxPtr& ctx, ShiftConv conv, const MultiPoly& factor_of_slot,
                          int n) {
  CtxPtr one = factor_of_slot.ctx();
  MultiPoly arg = MultiPoly::w(one, 1) + MultiPoly::h(one);
  if (conv == ShiftConv::barred)
    arg -= rat(ctx->N() - 1) * MultiPoly::t(one);
  return SymPoly::single(arg.pow(n) * factor_of_slot);
}

/// The structure constant ħ² + t(ħ+t) of the quartic relations.
inline MultiPoly serre_const(const CtxPtr& ctx) {
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  return h * h + t * (h + t);
}

/// ħ t (ħ + t).
inline MultiPoly htht(const CtxPtr& ctx) {
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  return h * t * (h + t);
}

/// Per-site bracket kernel of the Cartan current: the scalar series
/// prod_k (1-(z_k+ħ)x) * prod_{j != i} R_j(x) * 2 ħ t (ħ+t) x^3 /
/// [(1-w_i x)(1-(w_i+ħ)x)(1-(w_i+2ħ)x)], where R_j is the site-j ratio
/// (1-(w_j-t)x)(1-(w_j+ħ+t)x)/[(1-w_j x)(1-(w_j+ħ)x)].
inline TruncSeries site_bracket_kernel(const CtxPtr& ctx, int i, int K) {
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  TruncSeries r = z_prefactor(ctx, K, symbolic_z(ctx));
  for (int j = 1; j <= ctx->N(); ++j) {
    if (j == i) continue;
    MultiPoly wj = MultiPoly::w(ctx, j);
    r = r * TruncSeries::linear(ctx, K, -(wj - t));
    r = r * TruncSeries::linear(ctx, K, -(wj + h + t));
    r = r * inv_one_minus(ctx, K, wj);
    r = r * inv_one_minus(ctx, K, wj + h);
  }
  MultiPoly wi = MultiPoly::w(ctx, i);
  r = r * inv_one_minus(ctx, K, wi);
  r = r * inv_one_minus(ctx, K, wi + h);
  r = r * inv_one_minus(ctx, K, wi + rat(2) * h);
  return (rat(2) * htht(ctx)) * r.shifted(3);
}

/// Same kernel with the cubic 2 ħ t (ħ+t) x^3 replaced by twice the cubic
/// polynomial (1-λx)^3 - c x^2 (1-λx) at λ = w_i + ħ (anticommutator form).
inline TruncSeries site_anticomm_kernel(const CtxPtr& ctx, int i, int K) {
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  TruncSeries r = z_prefactor(ctx, K, symbolic_z(ctx));
  for (int j = 1; j <= ctx->N(); ++j) {
    if (j == i) continue;
    MultiPoly wj = MultiPoly::w(ctx, j);
    r = r * TruncSeries::linear(ctx, K, -(wj - t));
    r = r * TruncSeries::linear(ctx, K, -(wj + h + t));
    r = r * inv_one_minus(ctx, K, wj);
    r = r * inv_one_minus(ctx, K, wj + h);
  }
  MultiPoly wi = MultiPoly::w(ctx, i);
  MultiPoly lam = wi + h;
  TruncSeries lin = TruncSeries::linear(ctx, K, -lam);
  TruncSeries pcub = lin.pow(3) - (serre_const(ctx) * lin).shifted(2);
  r = r * pcub;
  r = r * inv_one_minus(ctx, K, wi);
  r = r * inv_one_minus(ctx, K, wi + h);
  r = r * inv_one_minus(ctx, K, wi + rat(2) * h);
  return rat(2) * r;
}

/// The site coefficient of the raising generator: the multiplication part of
/// the i-th summand of e_n, (w_i+ħ-shift)^n prod_{j != i} (w_i-w_j-t)/(w_i-w_j),
/// composed with the forward shift u_i.
inline DiffOp site_raise(const CtxPtr& ctx, ShiftConv conv, int i, int n) {
  MultiPoly t = MultiPoly::t(ctx);
  MultiPoly num = (conv_w(ctx, conv, i) + MultiPoly::h(ctx)).pow(n);
  std::vector<MultiPoly> den;
  for (int j = 1; j <= ctx->N(); ++j) {
    if (j == i) continue;
    MultiPoly d = MultiPoly::w(ctx, i) - MultiPoly::w(ctx, j);
    num *= d - t;
    den.push_back(d);
  }
  return DiffOp::mult(RatFunc::fraction(num, den)) * DiffOp::u(ctx, i);
}

}  // namespace detail

/// Realizations of the degreewise generators as explicit operators: raising
/// and lowering sums, balanced Bernoulli Cartan generators, the generating
/// series of the diagonal current, and the scalar identities they rest on.
inline void suite_yangian(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int K = p.order;
  int M = p.max_degree;
  int N = p.N;

  for (auto conv : {ShiftConv::barred, ShiftConv::unbarred}) {
    std::string tag = conv == ShiftConv::barred ? "barred" : "unbarred";
    std::string site = conv == ShiftConv::barred ? "w_i - (N-1)t" : "w_i";

    c.add_zero("yangian/" + tag + "-d-comm",
               "Cartan generators commute: [D_1, D_2] = 0",
               [ctx, conv] {
                 return commutator(cartan_op(ctx, conv, 1), cartan_op(ctx, conv, 2));
               });

    for (int n = 1; n <= 3; ++n) {
      c.add_eq("yangian/" + tag + "-be-e-" + std::to_string(n),
               "[sum_i Bber_n(" + site + "), E[f]] = -ħ E[f (site+ħ)^{n-1}] for f = s^2 + t s",
               [ctx, conv, n] {
                 CtxPtr one = Context::make(1, ctx->l());
                 MultiPoly s = MultiPoly::w(one, 1);
                 MultiPoly f = s * s + MultiPoly::t(one) * s;
                 DiffOp B = DiffOp::mult([&] {
                   MultiPoly r = MultiPoly::zero(ctx);
                   for (int i = 1; i <= ctx->N(); ++i) r += bbar(n, conv_w(ctx, conv, i));
                   return r;
                 }());
                 return commutator(B, E_op(SymPoly::single(f), ctx));
               },
               [ctx, conv, n] {
                 CtxPtr one = Context::make(1, ctx->l());
                 MultiPoly s = MultiPoly::w(one, 1);
                 MultiPoly f = s * s + MultiPoly::t(one) * s;
                 MultiPoly site1 = s + MultiPoly::h(one);
                 if (conv == ShiftConv::barred)
                   site1 -= rat(ctx->N() - 1) * MultiPoly::t(one);
                 DiffOp r = E_op(SymPoly::single(f * site1.pow(n - 1)), ctx);
                 return (-MultiPoly::h(ctx)) * r;
               });
      c.add_eq("yangian/" + tag + "-be-f-" + std::to_string(n),
               "[sum_i Bber_n(" + site + "), F[f]] = +ħ F[f (site+ħ)^{n-1}] for f = s^2 + t s",
               [ctx, conv, n] {
                 CtxPtr one = Context::make(1, ctx->l());
                 MultiPoly s = MultiPoly::w(one, 1);
                 MultiPoly f = s * s + MultiPoly::t(one) * s;
                 DiffOp B = DiffOp::mult([&] {
                   MultiPoly r = MultiPoly::zero(ctx);
                   for (int i = 1; i <= ctx->N(); ++i) r += bbar(n, conv_w(ctx, conv, i));
                   return r;
                 }());
                 return commutator(B, F_op(SymPoly::single(f), ctx, {}));
               },
               [ctx, conv, n] {
                 CtxPtr one = Context::make(1, ctx->l());
                 MultiPoly s = MultiPoly::w(one, 1);
                 MultiPoly f = s * s + MultiPoly::t(one) * s;
                 MultiPoly site1 = s + MultiPoly::h(one);
                 if (conv == ShiftConv::barred)
                   site1 -= rat(ctx->N() - 1) * MultiPoly::t(one);
                 DiffOp r = F_op(SymPoly::single(f * site1.pow(n - 1)), ctx, {});
                 return MultiPoly::h(ctx) * r;
               });
    }

    for (int m = 1; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        std::string mn = std::to_string(m) + "-" + std::to_string(n);
        c.add_eq("yangian/" + tag + "-d-e-" + mn,
                 "[D_m, e_n] = -ħ e_{m+n-1}",
                 [ctx, conv, m, n] {
                   return commutator(cartan_op(ctx, conv, m), yangian_e(ctx, conv, n));
                 },
                 [ctx, conv, m, n] {
                   return (-MultiPoly::h(ctx)) * yangian_e(ctx, conv, m + n - 1);
                 });
        c.add_eq("yangian/" + tag + "-d-f-" + mn,
                 "[D_m, f_n] = +ħ f_{m+n-1}",
                 [ctx, conv, m, n] {
                   return commutator(cartan_op(ctx, conv, m), yangian_f(ctx, conv, n));
                 },
                 [ctx, conv, m, n] {
                   return MultiPoly::h(ctx) * yangian_f(ctx, conv, m + n - 1);
                 });
      }

    c.add_zero("yangian/" + tag + "-serre-e",
               "3[e_2,e_1] - [e_3,e_0] + (ħ²+t(ħ+t))[e_1,e_0] + ħt(ħ+t) e_0² = 0",
               [ctx, conv] {
                 std::vector<DiffOp> e;
                 for (int n = 0; n <= 3; ++n) e.push_back(yangian_e(ctx, conv, n));
                 DiffOp r = commutator(e[2], e[1]).scale(3) - commutator(e[3], e[0]);
                 r += serre_const(ctx) * commutator(e[1], e[0]);
                 r += htht(ctx) * (e[0] * e[0]);
                 return r;
               });
    c.add_zero("yangian/" + tag + "-serre-f",
               "3[f_2,f_1] - [f_3,f_0] + (ħ²+t(ħ+t))[f_1,f_0] - ħt(ħ+t) f_0² = 0",
               [ctx, conv] {
                 std::vector<DiffOp> f;
                 for (int n = 0; n <= 3; ++n) f.push_back(yangian_f(ctx, conv, n));
                 DiffOp r = commutator(f[2], f[1]).scale(3) - commutator(f[3], f[0]);
                 r += serre_const(ctx) * commutator(f[1], f[0]);
                 r -= htht(ctx) * (f[0] * f[0]);
                 return r;
               });
    c.add_zero("yangian/" + tag + "-tri-e", "[e_0, [e_0, e_1]] = 0",
               [ctx, conv] {
                 DiffOp e0 = yangian_e(ctx, conv, 0);
                 return commutator(e0, commutator(e0, yangian_e(ctx, conv, 1)));
               });
    c.add_zero("yangian/" + tag + "-tri-f", "[f_0, [f_0, f_1]] = 0",
               [ctx, conv] {
                 DiffOp f0 = yangian_f(ctx, conv, 0);
                 return commutator(f0, commutator(f0, yangian_f(ctx, conv, 1)));
               });

    c.add("yangian/" + tag + "-h0", "diagonal level h_0 = 0",
          [ctx, conv, K] {
            auto hs = cartan_levels(product_current(ctx, conv, K, false), 0);
            return poly_residual(hs[0]);
          });
    c.add("yangian/" + tag + "-h1", "diagonal level h_1 = N",
          [ctx, conv, K, N] {
            auto hs = cartan_levels(product_current(ctx, conv, K, false), 0);
            return poly_residual(hs[1] - MultiPoly::constant(ctx, N));
          });
    c.add("yangian/" + tag + "-h2", "diagonal level h_2 = 2 D_1 + N(ħ + (1-N)t)",
          [ctx, conv, K, N] {
            auto hs = cartan_levels(product_current(ctx, conv, K, false), 0);
            MultiPoly want = rat(2) * cartan_poly(ctx, conv, 1) +
                             rat(N) * (MultiPoly::h(ctx) + rat(1 - N) * MultiPoly::t(ctx));
            return poly_residual(hs[2] - want);
          });
    for (int m = 2; m <= std::min(M + 1, K - 2); ++m)
      c.add_cond("yangian/" + tag + "-h-lead-" + std::to_string(m),
                 "h_{m+1} = m(m+1) D_m + terms of lower degree in w",
                 [ctx, conv, K, m] {
                   auto hs = cartan_levels(product_current(ctx, conv, K, false), 0);
                   MultiPoly d = hs[static_cast<size_t>(m) + 1] -
                                 rat(m * (m + 1)) * cartan_poly(ctx, conv, m);
                   return d.is_zero() || d.degree_w() < m;
                 });

    int mn_max = std::min(M, K - 2);
    for (int m = 0; m <= mn_max; ++m)
      for (int n = 0; m + n <= mn_max; ++n) {
        std::string mn = std::to_string(m) + "-" + std::to_string(n);
        c.add_eq("yangian/" + tag + "-ef-h-" + mn,
                 "[e_m, f_n] = ħ h_{m+n} with h extracted from the product current",
                 [ctx, conv, m, n] {
                   return commutator(yangian_e(ctx, conv, m), yangian_f(ctx, conv, n));
                 },
                 [ctx, conv, m, n] {
                   auto hs = cartan_levels(product_current(ctx, conv, m + n + 2, false), 0);
                   return DiffOp::mult(MultiPoly::h(ctx) * hs[static_cast<size_t>(m) + static_cast<size_t>(n)]);
                 });
        c.add_eq("yangian/" + tag + "-ef-closed-" + mn,
                 "[e_m, f_n] equals the closed-form x^{m+n+1} product coefficient",
                 [ctx, conv, m, n] {
                   return commutator(yangian_e(ctx, conv, m), yangian_f(ctx, conv, n));
                 },
                 [ctx, conv, m, n] { return ef_commutator_closed(ctx, conv, m, n); });
      }

    c.add("yangian/" + tag + "-de-product",
          "prefactor · exp(-sum_n D_{n+1} phi_n/ħ) equals the product current at ω = N",
          [ctx, conv, K, N] {
            TruncSeries lhs = cartan_current(ctx, conv, MultiPoly::constant(ctx, N), K, false);
            return series_residual(lhs - product_current(ctx, conv, K, false));
          });
    c.add("yangian/" + tag + "-de-product-z",
          "the same identity with the prod_k (1-(z_k+ħ)x) prefactor on both sides",
          [ctx, conv, K, N] {
            TruncSeries lhs = cartan_current(ctx, conv, MultiPoly::constant(ctx, N), K, true);
            return series_residual(lhs - product_current(ctx, conv, K, true));
          });
  }

  c.add("yangian/log-product",
        "product current = exp(sum_{n>=1} sum_i (s_i^n - (s_i-t)^n + (s_i+ħ)^n - (s_i+ħ+t)^n) x^n/n)",
        [ctx, K] {
          MultiPoly h = MultiPoly::h(ctx);
          MultiPoly t = MultiPoly::t(ctx);
          TruncSeries arg = TruncSeries::zero(ctx, K);
          for (int n = 1; n <= K; ++n) {
            MultiPoly cn = MultiPoly::zero(ctx);
            for (int i = 1; i <= ctx->N(); ++i) {
              MultiPoly s = conv_w(ctx, ShiftConv::barred, i);
              cn += s.pow(n) - (s - t).pow(n) + (s + h).pow(n) - (s + h + t).pow(n);
            }
            arg.set_coeff(n, cn.scale(rat(1, n)));
          }
          return series_residual(arg.exp() - product_current(ctx, ShiftConv::barred, K, false));
        });

  for (int n = 0; n <= 2; ++n) {
    std::string ns = std::to_string(n);
    c.add("yangian/phi-hzero-" + ns, "phi_n vanishes at ħ = 0",
          [ctx, K, n] {
            TruncSeries s = phi_series(ctx, n, K);
            for (int k = 0; k <= K; ++k) {
              MultiPoly v = substitute_symbol(s.coeff(k), ctx->h(), MultiPoly::zero(ctx));
              if (!v.is_zero()) return std::optional<std::string>("x^" + std::to_string(k) + ": " + v.render());
            }
            return std::optional<std::string>();
          });
    c.add("yangian/phi-tzero-" + ns, "phi_n vanishes at t = 0",
          [ctx, K, n] {
            TruncSeries s = phi_series(ctx, n, K);
            for (int k = 0; k <= K; ++k) {
              MultiPoly v = substitute_symbol(s.coeff(k), ctx->t(), MultiPoly::zero(ctx));
              if (!v.is_zero()) return std::optional<std::string>("x^" + std::to_string(k) + ": " + v.render());
            }
            return std::optional<std::string>();
          });
    c.add("yangian/phi-sumzero-" + ns, "phi_n vanishes at ħ + t = 0",
          [ctx, K, n] {
            TruncSeries s = phi_series(ctx, n, K);
            for (int k = 0; k <= K; ++k) {
              MultiPoly v = substitute_symbol(s.coeff(k), ctx->h(), -MultiPoly::t(ctx));
              if (!v.is_zero()) return std::optional<std::string>("x^" + std::to_string(k) + ": " + v.render());
            }
            return std::optional<std::string>();
          });
  }

  c.add("yangian/cubic-shift",
        "3(b²(b-ħ) - b(b-ħ)²) - (b³ - (b-ħ)³) + (ħ²+t(ħ+t))ħ - ħt(ħ+t) = 0",
        [] {
          auto c1 = Context::make(1, 0);
          MultiPoly b = MultiPoly::w(c1, 1);
          MultiPoly h = MultiPoly::h(c1);
          MultiPoly bm = b - h;
          MultiPoly r = rat(3) * (b * b * bm - b * bm * bm) - (b.pow(3) - bm.pow(3));
          r += serre_const(c1) * h - htht(c1);
          return poly_residual(r);
        });
  c.add("yangian/cubic-pair",
        "3(P²Q - PQ²) - (P³ - Q³) + (P-Q)³ = 0 for independent P, Q",
        [] {
          auto c2 = Context::make(2, 0);
          MultiPoly P = MultiPoly::w(c2, 1);
          MultiPoly Q = MultiPoly::w(c2, 2);
          MultiPoly r = rat(3) * (P * P * Q - P * Q * Q) - (P.pow(3) - Q.pow(3)) + (P - Q).pow(3);
          return poly_residual(r);
        });
  c.add("yangian/triple-factored",
        "the six-factor antisymmetrized product equals 2ħt(ħ+t) z (X³ - Y³ - c(X-Y)) "
        "for independent X, Y, z",
        [] {
          auto c3 = Context::make(3, 0);
          MultiPoly X = MultiPoly::w(c3, 1);
          MultiPoly Y = MultiPoly::w(c3, 2);
          MultiPoly Z = MultiPoly::w(c3, 3);
          MultiPoly h = MultiPoly::h(c3);
          MultiPoly t = MultiPoly::t(c3);
          MultiPoly A =
              Z * ((X + h) * (X + t) * (X - h - t) * (Y - h) * (Y - t) * (Y + h + t) -
                   (X - h) * (X - t) * (X + h + t) * (Y + h) * (Y + t) * (Y - h - t));
          MultiPoly want =
              rat(2) * htht(c3) * Z * (X.pow(3) - Y.pow(3) - serre_const(c3) * (X - Y));
          return poly_residual(A - want);
        });
  c.add("yangian/triple-cyclic",
        "the cyclic sum of the antisymmetrized products vanishes when "
        "x_{ij} = w_i - w_j",
        [] {
          auto c3 = Context::make(3, 0);
          MultiPoly h = MultiPoly::h(c3);
          MultiPoly t = MultiPoly::t(c3);
          auto wv = [&](int i) { return MultiPoly::w(c3, i); };
          auto A = [&](int i, int j, int k) {
            MultiPoly X = wv(i) - wv(j);   // x_{ij}
            MultiPoly Y = wv(k) - wv(i);   // x_{ki}
            MultiPoly Z = wv(j) - wv(k);   // x_{jk}
            return Z * ((X + h) * (X + t) * (X - h - t) * (Y - h) * (Y - t) * (Y + h + t) -
                        (X - h) * (X - t) * (X + h + t) * (Y + h) * (Y + t) * (Y - h - t));
          };
          return poly_residual(A(1, 2, 3) + A(2, 3, 1) + A(3, 1, 2));
        });
}

/// The generating-series form of the degreewise relations: closed forms for
/// the bracket of the diagonal current with raising generators, the cubic
/// current relations for both raising and shifted lowering generators, and
/// the scalar cancellations behind them.
inline void suite_tsy(Checker& c, const SuiteParams& p) {
  using namespace detail;
  if (p.order < p.max_degree + 4)
    throw domain_error("suite_tsy: requires order >= max_degree + 4");
  auto ctx = Context::make(p.N, p.l);
  int K = p.order;
  int M = p.max_degree;
  int N = p.N;
  int l = p.l;
  ShiftConv conv = ShiftConv::unbarred;

  c.add("tsy/h-product-vs-exp",
        "the z-prefactored exponential current equals the z-prefactored product current",
        [ctx, K, N, conv] {
          TruncSeries lhs = cartan_current(ctx, conv, MultiPoly::constant(ctx, N), K, true);
          return series_residual(lhs - product_current(ctx, conv, K, true));
        });

  c.add("tsy/h-div",
        "every product-current coefficient from level l on is divisible by t(ħ+t)",
        [ctx, K, l] {
          auto hs = cartan_levels(product_current(ctx, ShiftConv::unbarred, K, true), l);
          (void)hs;
          return std::optional<std::string>();
        });

  c.add_zero("tsy/h-comm", "extracted diagonal levels commute as operators",
             [ctx, K, l] {
               auto hs = cartan_levels(product_current(ctx, ShiftConv::unbarred, K, true), l);
               return commutator(DiffOp::mult(hs[static_cast<size_t>(l)]),
                                 DiffOp::mult(hs[static_cast<size_t>(l) + 1]));
             });

  for (int n = 0; n <= M; ++n)
    c.add("tsy/h-e-closed-" + std::to_string(n),
          "[h(x), e_n] = sum_i (site kernel) · (site coefficient of e_n)",
          [ctx, K, n, conv] {
            OpSeries Hop = OpSeries::from_scalar(product_current(ctx, conv, K, true));
            OpSeries lhs = commutator(Hop, yangian_e(ctx, conv, n));
            OpSeries rhs(ctx, K);
            for (int i = 1; i <= ctx->N(); ++i)
              rhs += OpSeries::from_scalar(site_bracket_kernel(ctx, i, K)) *
                     site_raise(ctx, conv, i, n);
            return series_residual(lhs - rhs);
          });

  for (int n = 0; n <= std::min(M, 2); ++n)
    c.add("tsy/anticomm-" + std::to_string(n),
          "{h(x), e_n} = sum_i (site kernel with the cubic (1-λx)³ - cx²(1-λx)) · e_n-site",
          [ctx, K, n, conv] {
            OpSeries Hop = OpSeries::from_scalar(product_current(ctx, conv, K, true));
            OpSeries lhs = anticommutator(Hop, yangian_e(ctx, conv, n));
            OpSeries rhs(ctx, K);
            for (int i = 1; i <= ctx->N(); ++i)
              rhs += OpSeries::from_scalar(site_anticomm_kernel(ctx, i, K)) *
                     site_raise(ctx, conv, i, n);
            return series_residual(lhs - rhs);
          });

  for (int n = 0; n <= 2; ++n)
    c.add("tsy/p-cancel-" + std::to_string(n),
          "λ^n(1 - 3λx + 3λ²x² - λ³x³ - c(x² - λx³)) = λ^n((1-λx)³ - cx²(1-λx))",
          [ctx, K, n] {
            MultiPoly lam = MultiPoly::w(ctx, 1) + MultiPoly::h(ctx);
            MultiPoly cc = serre_const(ctx);
            TruncSeries s = TruncSeries::zero(ctx, K);
            s.set_coeff(0, lam.pow(n));
            s.set_coeff(1, rat(-3) * lam.pow(n + 1));
            s.set_coeff(2, rat(3) * lam.pow(n + 2) - cc * lam.pow(n));
            s.set_coeff(3, -lam.pow(n + 3) + cc * lam.pow(n + 1));
            TruncSeries lin = TruncSeries::linear(ctx, K, -lam);
            TruncSeries pcub = lin.pow(3) - (cc * lin).shifted(2);
            return series_residual(s - lam.pow(n) * pcub);
          });

  for (int k = l; k <= std::min(2, K - 1); ++k)
    for (int n = 0; n <= std::min(M, 2); ++n) {
      std::string kn = std::to_string(k) + "-" + std::to_string(n);
      c.add_eq("tsy/h-level-e-" + kn,
               "[h_k, e_n] = 0 for k < 2 and -2ħ e_n for k = 2",
               [ctx, K, k, n, l, conv] {
                 auto hs = cartan_levels(product_current(ctx, conv, K, true), l);
                 return commutator(DiffOp::mult(hs[static_cast<size_t>(k)]),
                                   yangian_e(ctx, conv, n));
               },
               [ctx, k, n, conv] {
                 if (k < 2) return DiffOp::zero(ctx);
                 return (rat(-2) * MultiPoly::h(ctx)) * yangian_e(ctx, conv, n);
               });
      c.add_eq("tsy/h-level-f-" + kn,
               "[h_k, f_{k'}] = 0 for k < 2 and +2ħ f_{k'} for k = 2 (shifted lowering)",
               [ctx, K, k, n, l, conv] {
                 auto hs = cartan_levels(product_current(ctx, conv, K, true), l);
                 return commutator(DiffOp::mult(hs[static_cast<size_t>(k)]),
                                   yangian_f_shifted(ctx, n));
               },
               [ctx, k, n] {
                 if (k < 2) return DiffOp::zero(ctx);
                 return (rat(2) * MultiPoly::h(ctx)) * yangian_f_shifted(ctx, n);
               });
    }

  for (int n = 0; n <= std::max(0, M - 3); ++n) {
    c.add("tsy/cubic-e-" + std::to_string(n),
          "C_n - 3xC_{n+1} + 3x²C_{n+2} - x³C_{n+3} - c(x²C_n - x³C_{n+1}) "
          "= ħt(ħ+t)x³ {h(x), e_n} with C_k = [h(x), e_k]",
          [ctx, K, n, conv] {
            OpSeries Hop = OpSeries::from_scalar(product_current(ctx, conv, K, true));
            auto C = [&](int k) { return commutator(Hop, yangian_e(ctx, conv, k)); };
            MultiPoly cc = serre_const(ctx);
            OpSeries r = C(n) - rat(3) * C(n + 1).shifted(1) + rat(3) * C(n + 2).shifted(2) -
                         C(n + 3).shifted(3);
            r -= cc * (C(n).shifted(2) - C(n + 1).shifted(3));
            r -= htht(ctx) * anticommutator(Hop, yangian_e(ctx, conv, n)).shifted(3);
            return series_residual(r);
          });
    c.add("tsy/cubic-f-" + std::to_string(n),
          "the mirrored cubic current relation for the shifted lowering generators, "
          "with + ħt(ħ+t)x³ {h(x), f_n}",
          [ctx, K, n, conv] {
            OpSeries Hop = OpSeries::from_scalar(product_current(ctx, conv, K, true));
            auto D = [&](int k) { return commutator(Hop, yangian_f_shifted(ctx, k)); };
            MultiPoly cc = serre_const(ctx);
            OpSeries r = D(n) - rat(3) * D(n + 1).shifted(1) + rat(3) * D(n + 2).shifted(2) -
                         D(n + 3).shifted(3);
            r -= cc * (D(n).shifted(2) - D(n + 1).shifted(3));
            r += htht(ctx) * anticommutator(Hop, yangian_f_shifted(ctx, n)).shifted(3);
            return series_residual(r);
          });
  }
}

/// The one-parameter automorphism that maps each degreewise generator to its
/// binomial transform: invariance of the defining relations, the composition
/// law for the phi series, and the central corrections to the Cartan images.
inline void suite_tau(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int K = p.order;
  int M = p.max_degree;
  int N = p.N;
  ShiftConv conv = ShiftConv::unbarred;

  // tau(g)_n = sum_k C(n,k) a^{n-k} g_k for a family of operators g.
  auto tau_of = [ctx](const std::vector<DiffOp>& g, int n) {
    MultiPoly a = MultiPoly::a(ctx);
    DiffOp r = DiffOp::zero(ctx);
    for (int k = 0; k <= n; ++k)
      r += (binomial(n, k) * a.pow(n - k)) * g[static_cast<size_t>(k)];
    return r;
  };
  auto tau_poly = [ctx](const std::vector<MultiPoly>& g, int n) {
    MultiPoly a = MultiPoly::a(ctx);
    MultiPoly r = MultiPoly::zero(ctx);
    for (int k = 0; k <= n; ++k)
      r += binomial(n, k) * (a.pow(n - k) * g[static_cast<size_t>(k)]);
    return r;
  };
  auto raise_family = [ctx, conv](int top) {
    std::vector<DiffOp> e;
    for (int n = 0; n <= top; ++n) e.push_back(yangian_e(ctx, conv, n));
    return e;
  };
  auto lower_family = [ctx, conv](int top) {
    std::vector<DiffOp> f;
    for (int n = 0; n <= top; ++n) f.push_back(yangian_f(ctx, conv, n));
    return f;
  };

  int mn_max = std::min(M, K - 2);
  for (int m = 0; m <= mn_max; ++m)
    for (int n = 0; m + n <= mn_max; ++n)
      c.add_eq("tau/ef-" + std::to_string(m) + "-" + std::to_string(n),
               "[τ(e)_m, τ(f)_n] = ħ τ(h)_{m+n}",
               [=] {
                 auto e = raise_family(m);
                 auto f = lower_family(n);
                 return commutator(tau_of(e, m), tau_of(f, n));
               },
               [=] {
                 auto hs = cartan_levels(product_current(ctx, conv, m + n + 2, false), 0);
                 return DiffOp::mult(MultiPoly::h(ctx) * tau_poly(hs, m + n));
               });

  c.add_zero("tau/serre-e",
             "3[τe_2,τe_1] - [τe_3,τe_0] + (ħ²+t(ħ+t))[τe_1,τe_0] + ħt(ħ+t) τe_0² = 0",
             [=] {
               auto e = raise_family(3);
               std::vector<DiffOp> te;
               for (int n = 0; n <= 3; ++n) te.push_back(tau_of(e, n));
               DiffOp r = commutator(te[2], te[1]).scale(3) - commutator(te[3], te[0]);
               r += serre_const(ctx) * commutator(te[1], te[0]);
               r += htht(ctx) * (te[0] * te[0]);
               return r;
             });
  c.add_zero("tau/serre-f",
             "3[τf_2,τf_1] - [τf_3,τf_0] + (ħ²+t(ħ+t))[τf_1,τf_0] - ħt(ħ+t) τf_0² = 0",
             [=] {
               auto f = lower_family(3);
               std::vector<DiffOp> tf;
               for (int n = 0; n <= 3; ++n) tf.push_back(tau_of(f, n));
               DiffOp r = commutator(tf[2], tf[1]).scale(3) - commutator(tf[3], tf[0]);
               r += serre_const(ctx) * commutator(tf[1], tf[0]);
               r -= htht(ctx) * (tf[0] * tf[0]);
               return r;
             });
  c.add_zero("tau/tri-e", "[τe_0, [τe_0, τe_1]] = 0",
             [=] {
               auto e = raise_family(1);
               DiffOp t0 = tau_of(e, 0);
               return commutator(t0, commutator(t0, tau_of(e, 1)));
             });
  c.add_zero("tau/tri-f", "[τf_0, [τf_0, τf_1]] = 0",
             [=] {
               auto f = lower_family(1);
               DiffOp t0 = tau_of(f, 0);
               return commutator(t0, commutator(t0, tau_of(f, 1)));
             });

  for (int k = 0; k <= std::min(2, K - 3); ++k)
    c.add("tau/phi-comp-" + std::to_string(k),
          "sum_{n>=k} C(n,k) a^{n-k} phi_n(x) = phi_k(x/(1-ax))",
          [ctx, K, k] {
            MultiPoly a = MultiPoly::a(ctx);
            TruncSeries lhs = TruncSeries::zero(ctx, K);
            for (int n = k; n + 3 <= K; ++n)
              lhs += binomial(n, k) * (a.pow(n - k) * phi_series(ctx, n, K));
            TruncSeries inner = TruncSeries::x(ctx, K) * inv_one_minus(ctx, K, a);
            return series_residual(lhs - phi_series(ctx, k, K).compose(inner));
          });

  // Symbolic central corrections: the log of the conjugated prefactor ratio
  // decomposes over phi_n/ħ with parameter-only coefficients C_1, C_2, ...
  auto central_terms = [ctx, K]() {
    MultiPoly a = MultiPoly::a(ctx);
    MultiPoly h = MultiPoly::h(ctx);
    MultiPoly t = MultiPoly::t(ctx);
    MultiPoly om = MultiPoly::omega(ctx);
    TruncSeries ratio = TruncSeries::linear(ctx, K, -(a + h + t));
    ratio = ratio * TruncSeries::linear(ctx, K, -(a - om * t));
    ratio = ratio * inv_one_minus(ctx, K, a);
    ratio = ratio * inv_one_minus(ctx, K, a + h + (MultiPoly::one(ctx) - om) * t);
    TruncSeries g = (ratio * cartan_prefactor(ctx, om, K).reciprocal()).log();
    std::vector<MultiPoly> cs;  // cs[m] = C_{m+1}
    TruncSeries res = g;
    for (int n = 0; n + 3 <= K; ++n) {
      MultiPoly den = t * (h + t);
      MultiPoly cn = (-res.coeff(n + 3)).exact_divide(den).scale(rat(1, (n + 1) * (n + 2)));
      res += cn * phi_over_h(ctx, n, K);
      cs.push_back(cn);
    }
    return std::pair<std::vector<MultiPoly>, TruncSeries>(cs, res);
  };

  c.add("tau/c-low", "the conjugated prefactor log has no x or x² term",
        [=] {
          auto [cs, res] = central_terms();
          (void)cs;
          MultiPoly a = MultiPoly::a(ctx);
          MultiPoly h = MultiPoly::h(ctx);
          MultiPoly t = MultiPoly::t(ctx);
          MultiPoly om = MultiPoly::omega(ctx);
          TruncSeries ratio = TruncSeries::linear(ctx, K, -(a + h + t));
          ratio = ratio * TruncSeries::linear(ctx, K, -(a - om * t));
          ratio = ratio * inv_one_minus(ctx, K, a);
          ratio = ratio * inv_one_minus(ctx, K, a + h + (MultiPoly::one(ctx) - om) * t);
          TruncSeries g = (ratio * cartan_prefactor(ctx, om, K).reciprocal()).log();
          if (!g.coeff(1).is_zero()) return std::optional<std::string>("x: " + g.coeff(1).render());
          if (!g.coeff(2).is_zero()) return std::optional<std::string>("x²: " + g.coeff(2).render());
          return std::optional<std::string>();
        });
  c.add("tau/c-complete",
        "the central decomposition over phi_n/ħ is exact to the truncation order",
        [=] {
          auto [cs, res] = central_terms();
          (void)cs;
          return series_residual(res);
        });
  c.add("tau/c1-sym", "C_1 = a ω",
        [=] {
          auto [cs, res] = central_terms();
          (void)res;
          MultiPoly want = MultiPoly::a(ctx) * MultiPoly::omega(ctx);
          return poly_residual(cs[0] - want);
        });
  c.add("tau/c2-sym", "C_2 = (ω(a² + ħ a) - a t ω(ω-1)) / 2",
        [=] {
          auto [cs, res] = central_terms();
          (void)res;
          MultiPoly a = MultiPoly::a(ctx);
          MultiPoly om = MultiPoly::omega(ctx);
          MultiPoly want = -(a * MultiPoly::t(ctx) * om * (om - MultiPoly::one(ctx))) +
                           om * (a * a + MultiPoly::h(ctx) * a);
          return poly_residual(cs[1] - want.scale(rat(1, 2)));
        });
  for (int m = 1; m <= std::min(M, K - 2); ++m)
    c.add("tau/c-def-" + std::to_string(m),
          "C_m at ω = N' equals sum_{i<=N'} Bber_m(a-(i-1)t) - Bber_m(-(i-1)t) for "
          "N' = 1, 2, 3",
          [=] {
            auto [cs, res] = central_terms();
            (void)res;
            MultiPoly a = MultiPoly::a(ctx);
            MultiPoly t = MultiPoly::t(ctx);
            for (int np = 1; np <= 3; ++np) {
              MultiPoly got = substitute_symbol(cs[static_cast<size_t>(m) - 1],
                                                ctx->omega(), MultiPoly::constant(ctx, np));
              MultiPoly want = MultiPoly::zero(ctx);
              for (int i = 1; i <= np; ++i) {
                MultiPoly s = rat(-(i - 1)) * t;
                want += bbar(m, a + s) - bbar(m, s);
              }
              if (!(got == want))
                return std::optional<std::string>("N' = " + std::to_string(np) + ": " +
                                                  (got - want).render());
            }
            return std::optional<std::string>();
          });

  // Representation side: compose the product current with x/(1-ax), peel off
  // the fixed prefactor, and decompose over phi_n/ħ to extract the images of
  // the conjugated Cartan generators.
  auto tau_cartan = [ctx, K, N]() {
    MultiPoly a = MultiPoly::a(ctx);
    MultiPoly h = MultiPoly::h(ctx);
    MultiPoly t = MultiPoly::t(ctx);
    TruncSeries inner = TruncSeries::x(ctx, K) * inv_one_minus(ctx, K, a);
    TruncSeries S = product_current(ctx, ShiftConv::unbarred, K, false).compose(inner);
    TruncSeries g =
        (S * cartan_prefactor(ctx, MultiPoly::constant(ctx, N), K).reciprocal()).log();
    std::vector<MultiPoly> ds;  // ds[m] = image of τ(D_{m+1})
    TruncSeries res = g;
    for (int n = 0; n + 3 <= K; ++n) {
      MultiPoly den = t * (h + t);
      MultiPoly dn = (-res.coeff(n + 3)).exact_divide(den).scale(rat(1, (n + 1) * (n + 2)));
      res += dn * phi_over_h(ctx, n, K);
      ds.push_back(dn);
    }
    return std::pair<std::vector<MultiPoly>, TruncSeries>(ds, res);
  };

  c.add("tau/d-complete",
        "the conjugated current decomposes exactly over phi_n/ħ at ω = N",
        [=] {
          auto [ds, res] = tau_cartan();
          (void)ds;
          return series_residual(res);
        });
  for (int m = 1; m <= std::min(M, K - 2); ++m) {
    c.add_cond("tau/d-central-" + std::to_string(m),
               "τ(D_m) - sum_k C(m-1,k-1) a^{m-k} D_k is independent of w",
               [=] {
                 auto [ds, res] = tau_cartan();
                 (void)res;
                 MultiPoly delta = ds[static_cast<size_t>(m) - 1];
                 MultiPoly a = MultiPoly::a(ctx);
                 for (int k = 1; k <= m; ++k)
                   delta -= binomial(m - 1, k - 1) *
                            (a.pow(m - k) * cartan_poly(ctx, ShiftConv::unbarred, k));
                 return delta.is_zero() || delta.degree_w() <= 0;
               });
    c.add("tau/c-match-" + std::to_string(m),
          "the w-free remainder of τ(D_m) equals C_m at ω = N",
          [=] {
            auto [ds, res] = tau_cartan();
            (void)res;
            auto [cs, res2] = central_terms();
            (void)res2;
            MultiPoly delta = ds[static_cast<size_t>(m) - 1];
            MultiPoly a = MultiPoly::a(ctx);
            for (int k = 1; k <= m; ++k)
              delta -= binomial(m - 1, k - 1) *
                       (a.pow(m - k) * cartan_poly(ctx, ShiftConv::unbarred, k));
            MultiPoly cm = substitute_symbol(cs[static_cast<size_t>(m) - 1], ctx->omega(),
                                             MultiPoly::constant(ctx, N));
            return poly_residual(delta - cm);
          });
  }

  c.add("tau/subst-w",
        "at sites a - (i-1)t the exponential current telescopes to a seven-factor "
        "rational function",
        [ctx, K, N] {
          MultiPoly a = MultiPoly::a(ctx);
          MultiPoly h = MultiPoly::h(ctx);
          MultiPoly t = MultiPoly::t(ctx);
          TruncSeries arg = TruncSeries::zero(ctx, K);
          for (int k = 1; k + 2 <= K; ++k) {
            MultiPoly dk = MultiPoly::zero(ctx);
            for (int i = 1; i <= N; ++i) {
              MultiPoly shift = rat(-(i - 1)) * t;
              dk += bbar(k, a + shift) - bbar(k, shift);
            }
            arg += dk * phi_over_h(ctx, k - 1, K);
          }
          TruncSeries lhs = (-arg).exp();
          TruncSeries rhs = TruncSeries::linear(ctx, K, -(a - rat(N) * t));
          rhs = rhs * TruncSeries::linear(ctx, K, -(a + h + t));
          rhs = rhs * TruncSeries::linear(ctx, K, -(h + rat(1 - N) * t));
          rhs = rhs * inv_one_minus(ctx, K, a);
          rhs = rhs * inv_one_minus(ctx, K, a + h + rat(1 - N) * t);
          rhs = rhs * inv_one_minus(ctx, K, h + t);
          rhs = rhs * inv_one_minus(ctx, K, rat(-N) * t);
          return series_residual(lhs - rhs);
        });
}

/// The lowering generators dressed with the prod_k (w - ħ - z_k) site factor:
/// expansion over the undressed family, the z-prefactored diagonal levels
/// they pair with, and the defining relations they satisfy verbatim.
inline void suite_shifted(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int K = p.order;
  int M = p.max_degree;
  int l = p.l;
  ShiftConv conv = ShiftConv::unbarred;

  auto zplus = [ctx]() {
    std::vector<MultiPoly> v;
    for (int k = 1; k <= ctx->l(); ++k)
      v.push_back(MultiPoly::z(ctx, k) + MultiPoly::h(ctx));
    return v;
  };

  for (int n = 0; n <= 2; ++n)
    c.add_eq("shifted/expand-" + std::to_string(n),
             "F^(l)[(w+ħ)^n] = sum_i (-1)^{l-i} e_{l-i}(z+ħ) F^(0)[(w+ħ)^{n+i}]",
             [ctx, n] { return yangian_f_shifted(ctx, n); },
             [=] {
               auto zp = zplus();
               DiffOp r = DiffOp::zero(ctx);
               for (int i = 0; i <= l; ++i) {
                 MultiPoly coef = esym_list(ctx, zp, l - i);
                 if ((l - i) % 2 == 1) coef = -coef;
                 r += coef * yangian_f(ctx, conv, n + i);
               }
               return r;
             });

  c.add("shifted/h-div",
        "the z-prefactored current has levels divisible by t(ħ+t) from index l on",
        [ctx, K, l] {
          auto hs = cartan_levels(product_current(ctx, ShiftConv::unbarred, K, true), l);
          (void)hs;
          return std::optional<std::string>();
        });

  int mn_max = std::min(M, K - 1 - l);
  for (int m = 0; m <= mn_max; ++m)
    for (int n = 0; m + n <= mn_max; ++n)
      c.add_eq("shifted/ef-" + std::to_string(m) + "-" + std::to_string(n),
               "[e_m, F^(l)[(w+ħ)^n]] = ħ h~_{m+n+l} with h~ from the z-prefactored current",
               [ctx, conv, m, n] {
                 return commutator(yangian_e(ctx, conv, m), yangian_f_shifted(ctx, n));
               },
               [ctx, conv, m, n, l] {
                 auto hs = cartan_levels(product_current(ctx, conv, m + n + l + 2, true), l);
                 return DiffOp::mult(MultiPoly::h(ctx) *
                                     hs[static_cast<size_t>(m + n + l)]);
               });

  for (int m = 1; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      std::string mn = std::to_string(m) + "-" + std::to_string(n);
      c.add_eq("shifted/d-e-" + mn, "[D_m, e_n] = -ħ e_{m+n-1}",
               [ctx, conv, m, n] {
                 return commutator(cartan_op(ctx, conv, m), yangian_e(ctx, conv, n));
               },
               [ctx, conv, m, n] {
                 return (-MultiPoly::h(ctx)) * yangian_e(ctx, conv, m + n - 1);
               });
      c.add_eq("shifted/d-f-" + mn,
               "[D_m, F^(l)[(w+ħ)^n]] = +ħ F^(l)[(w+ħ)^{m+n-1}]",
               [ctx, conv, m, n] {
                 return commutator(cartan_op(ctx, conv, m), yangian_f_shifted(ctx, n));
               },
               [ctx, m, n] { return MultiPoly::h(ctx) * yangian_f_shifted(ctx, m + n - 1); });
    }

  c.add_zero("shifted/serre-f",
             "3[F_2,F_1] - [F_3,F_0] + (ħ²+t(ħ+t))[F_1,F_0] - ħt(ħ+t) F_0² = 0 for the "
             "dressed lowering family",
             [ctx] {
               std::vector<DiffOp> f;
               for (int n = 0; n <= 3; ++n) f.push_back(yangian_f_shifted(ctx, n));
               DiffOp r = commutator(f[2], f[1]).scale(3) - commutator(f[3], f[0]);
               r += serre_const(ctx) * commutator(f[1], f[0]);
               r -= htht(ctx) * (f[0] * f[0]);
               return r;
             });
  c.add_zero("shifted/tri-f", "[F_0, [F_0, F_1]] = 0 for the dressed lowering family",
             [ctx] {
               DiffOp f0 = yangian_f_shifted(ctx, 0);
               return commutator(f0, commutator(f0, yangian_f_shifted(ctx, 1)));
             });

  for (int n = l; n <= std::min(l + 2, K - 1); ++n)
    c.add("shifted/tilde-h-" + std::to_string(n),
          "h~_n = sum_i (-1)^i e_i(z+ħ) h_{n-i}",
          [=] {
            auto ht = cartan_levels(product_current(ctx, conv, K, true), l);
            auto hs = cartan_levels(product_current(ctx, conv, K, false), 0);
            auto zp = zplus();
            MultiPoly want = MultiPoly::zero(ctx);
            for (int i = 0; i <= std::min(l, n); ++i) {
              MultiPoly coef = esym_list(ctx, zp, i);
              if (i % 2 == 1) coef = -coef;
              want += coef * hs[static_cast<size_t>(n - i)];
            }
            return poly_residual(ht[static_cast<size_t>(n)] - want);
          });

  for (int n = l; n <= std::min(l + 2, K - 1); ++n)
    c.add("shifted/z-neutral-" + std::to_string(n),
          "setting every z_k = -ħ removes the dressing: h~_n reduces to h_n",
          [=] {
            auto ht = cartan_levels(product_current(ctx, conv, K, true), l);
            auto hs = cartan_levels(product_current(ctx, conv, K, false), 0);
            MultiPoly v = ht[static_cast<size_t>(n)];
            for (int k = 1; k <= ctx->l(); ++k)
              v = substitute_symbol(v, ctx->z(k), -MultiPoly::h(ctx));
            return poly_residual(v - hs[static_cast<size_t>(n)]);
          });
}

}  // namespace shiftop

#endif  // SHIFTOP_SUITES_YANGIAN_HPP
