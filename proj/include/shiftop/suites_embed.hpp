#ifndef SHIFTOP_SUITES_EMBED_HPP
#define SHIFTOP_SUITES_EMBED_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "shiftop/check.hpp"
#include "shiftop/ops.hpp"

namespace shiftop {

namespace detail {

/// The dressed coordinate w_i + t sum_{k>i} s_(i k).
inline DiffOp dressed_w(const CtxPtr& ctx, int i) {
  DiffOp r = DiffOp::w_mult(ctx, i);
  MultiPoly tt = MultiPoly::t(ctx);
  for (int k = i + 1; k <= ctx->N(); ++k) r += tt * dl_transposition(ctx, i, k);
  return r;
}

/// Descending step chain s_(i_{p-1} i_p) s_(i_{p-2} i_{p-1}) ... s_(i_0 i_1)
/// for an ascending tuple i_0 < i_1 < ... < i_p (empty product for p = 0).
inline DiffOp step_chain(const CtxPtr& ctx, const std::vector<int>& tup) {
  DiffOp r = DiffOp::one(ctx);
  for (int q = static_cast<int>(tup.size()) - 1; q >= 1; --q)
    r = r * dl_transposition(ctx, tup[static_cast<size_t>(q) - 1],
                             tup[static_cast<size_t>(q)]);
  return r;
}

inline std::string tuple_tag(const std::vector<int>& tup) {
  std::string s;
  for (size_t q = 0; q < tup.size(); ++q) {
    if (q) s += "-";
    s += std::to_string(tup[q]);
  }
  return s;
}

/// Layered expansion of prod_{k=1..l} (w_i - ħ - z_k + t sum_{j>i} s_(i j)):
/// sum over p >= 0, cut positions 0 = k_0 < k_1 < ... < k_p <= l, and chains
/// i = i_0 < i_1 < ... < i_p <= N of
///   t^p  prod_{q=0..p} prod_{k in segment q} (w_{i_q} - ħ - z_k)
///        [X_{i_p}^{-1} when requested]  s_(i_{p-1} i_p) ... s_(i_0 i_1),
/// where segment q runs k_q < k < k_{q+1} (k <= l for the last segment).
inline DiffOp layered_sum(const CtxPtr& ctx, int i, bool with_x_inv) {
  int N = ctx->N();
  int l = ctx->l();
  MultiPoly hh = MultiPoly::h(ctx);
  MultiPoly tt = MultiPoly::t(ctx);
  DiffOp total = DiffOp::zero(ctx);
  int pmax = std::min(l, N - i);
  for (int p = 0; p <= pmax; ++p) {
    for (const auto& cuts : k_subsets(l, p)) {
      std::vector<int> kk;
      kk.reserve(static_cast<size_t>(p) + 1);
      kk.push_back(0);
      kk.insert(kk.end(), cuts.begin(), cuts.end());
      for (const auto& steps : k_subsets(N - i, p)) {
        std::vector<int> ii;
        ii.reserve(static_cast<size_t>(p) + 1);
        ii.push_back(i);
        for (int v : steps) ii.push_back(i + v);
        MultiPoly coef = tt.pow(p);
        for (int q = 0; q <= p; ++q) {
          int lo = kk[static_cast<size_t>(q)] + 1;
          int hi = q < p ? kk[static_cast<size_t>(q) + 1] - 1 : l;
          for (int k = lo; k <= hi; ++k)
            coef *= MultiPoly::w(ctx, ii[static_cast<size_t>(q)]) - hh -
                    MultiPoly::z(ctx, k);
        }
        DiffOp term = DiffOp::mult(coef);
        if (with_x_inv) term = term * dl_X_inv(ctx, ii.back());
        total += term * step_chain(ctx, ii);
      }
    }
  }
  return total;
}

/// Shift supports of the symmetric restriction: every shift is a signed unit
/// vector sign*e_j with (lo <= j <= hi).
inline bool unit_support_within(const DiffOp& A, int sign, int lo, int hi) {
  for (const auto& [k, g] : A.terms()) {
    int hits = 0;
    bool ok = true;
    for (size_t j = 0; j < k.lam.size(); ++j) {
      int v = k.lam[j];
      if (v == 0) continue;
      int idx = static_cast<int>(j) + 1;
      if (v != sign || idx < lo || idx > hi) ok = false;
      ++hits;
    }
    if (!ok || hits != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Exchange relations between deformed transpositions and the w's, including
/// the telescoped chain form.
inline void suite_exchange(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      std::string ij = std::to_string(i) + "-" + std::to_string(j);
      std::string sij =
          "s_(" + std::to_string(i) + " " + std::to_string(j) + ")";
      c.add_eq("exchange/step-" + ij,
               sij + " w_" + std::to_string(i) + " = w_" + std::to_string(j) +
                   " " + sij + " - t (1 + sum_{i<k<j} s_(i k) s_(k j))",
               [ctx, i, j] {
                 return dl_transposition(ctx, i, j) * DiffOp::w_mult(ctx, i);
               },
               [ctx, i, j] {
                 DiffOp r = DiffOp::w_mult(ctx, j) * dl_transposition(ctx, i, j);
                 MultiPoly tt = MultiPoly::t(ctx);
                 DiffOp corr = DiffOp::one(ctx);
                 for (int k = i + 1; k < j; ++k)
                   corr += dl_transposition(ctx, i, k) * dl_transposition(ctx, k, j);
                 return r - tt * corr;
               });
      c.add_eq("exchange/dressed-" + ij,
               sij + " (w_" + std::to_string(i) + " + t sum_{k>i} s_(i k)) = (w_" +
                   std::to_string(j) + " + t sum_{k>j} s_(j k)) " + sij,
               [ctx, i, j] {
                 return dl_transposition(ctx, i, j) * dressed_w(ctx, i);
               },
               [ctx, i, j] {
                 return dressed_w(ctx, j) * dl_transposition(ctx, i, j);
               });
    }

  for (int m = 2; m <= N; ++m)
    for (const auto& tup : k_subsets(N, m))
      c.add_eq("exchange/chain-" + tuple_tag(tup),
               "step chain moves the dressed coordinate from the lowest to the "
               "highest index",
               [ctx, tup] { return step_chain(ctx, tup) * dressed_w(ctx, tup.front()); },
               [ctx, tup] { return dressed_w(ctx, tup.back()) * step_chain(ctx, tup); });
}

/// Layered expansion of the ordered product of lowering factors, and the
/// matching expansion of the cyclotomic lowering generators.
inline void suite_reorder(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;

  for (int i = 1; i <= N; ++i) {
    c.add_eq("reorder/product-" + std::to_string(i),
             "prod_k (w_i - ħ - z_k + t sum_{j>i} s_(i j)) equals its layered "
             "expansion",
             [ctx, i] {
               MultiPoly hh = MultiPoly::h(ctx);
               MultiPoly tt = MultiPoly::t(ctx);
               DiffOp spart = DiffOp::zero(ctx);
               for (int j = i + 1; j <= ctx->N(); ++j)
                 spart += tt * dl_transposition(ctx, i, j);
               DiffOp r = DiffOp::one(ctx);
               for (int k = 1; k <= ctx->l(); ++k)
                 r = r * (DiffOp::mult(MultiPoly::w(ctx, i) - hh -
                                       MultiPoly::z(ctx, k)) +
                          spart);
               return r;
             },
             [ctx, i] { return layered_sum(ctx, i, false); });
    if (p.l >= 1)
      c.add_eq("reorder/lowering-" + std::to_string(i),
               "Y_i equals the layered expansion with X^{-1} inserted before "
               "the step chain",
               [ctx, i] { return oblomkov_Y(ctx, i); },
               [ctx, i] { return layered_sum(ctx, i, true); });
  }
}

/// Triangularity and leading terms of the symmetric restrictions of X_i,
/// X_i^{-1}, and Y_i.
inline void suite_leading(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;

  auto ratio_prod = [ctx](int i, int sgn) {
    RatFunc r = RatFunc::one(ctx);
    MultiPoly tt = MultiPoly::t(ctx);
    for (int j = 1; j <= ctx->N(); ++j) {
      if (j == i) continue;
      MultiPoly d = MultiPoly::w(ctx, i) - MultiPoly::w(ctx, j);
      r *= RatFunc::fraction(d + sgn * tt, {d});
    }
    return r;
  };

  for (int i = 1; i <= N; ++i) {
    std::string is = std::to_string(i);
    c.add_cond("leading/X-support-" + is,
               "Res X_" + is + " is a combination of g_j u_j with j ≤ " + is,
               [ctx, i] {
                 return unit_support_within(dl_X(ctx, i).res(), +1, 1, i);
               },
               "stray shift outside {e_j : j <= i}");
    c.add_cond("leading/X-top-" + is,
               "the leading term of Res X_" + is + " sits at shift e_" + is,
               [ctx, i] {
                 std::vector<int> e(static_cast<size_t>(ctx->N()), 0);
                 e[static_cast<size_t>(i - 1)] = 1;
                 return leading_term(dl_X(ctx, i).res()).lam == e;
               },
               "unexpected maximal shift");
    c.add_cond("leading/Xinv-support-" + is,
               "Res X_" + is + "^-1 is a combination of g_j u_j^-1 with j ≥ " + is,
               [ctx, i] {
                 return unit_support_within(dl_X_inv(ctx, i).res(), -1, i, ctx->N());
               },
               "stray shift outside {-e_j : j >= i}");
    c.add_cond("leading/Xinv-top-" + is,
               "the leading term of Res X_" + is + "^-1 sits at shift -e_" + is,
               [ctx, i] {
                 std::vector<int> e(static_cast<size_t>(ctx->N()), 0);
                 e[static_cast<size_t>(i - 1)] = -1;
                 return leading_term(dl_X_inv(ctx, i).res()).lam == e;
               },
               "unexpected maximal shift");
    if (p.l >= 1) {
      c.add_cond("leading/Y-support-" + is,
                 "Res Y_" + is + " is a combination of g_j u_j^-1 with j ≥ " + is,
                 [ctx, i] {
                   return unit_support_within(oblomkov_Y(ctx, i).res(), -1, i,
                                              ctx->N());
                 },
                 "stray shift outside {-e_j : j >= i}");
      c.add_cond("leading/Y-top-" + is,
                 "the leading term of Res Y_" + is + " sits at shift -e_" + is,
                 [ctx, i] {
                   std::vector<int> e(static_cast<size_t>(ctx->N()), 0);
                   e[static_cast<size_t>(i - 1)] = -1;
                   return leading_term(oblomkov_Y(ctx, i).res()).lam == e;
                 },
                 "unexpected maximal shift");
    }
  }

  c.add_eq("leading/X-last",
           "leading term of Res X_N is prod_{j≠N} (w_N - w_j - t)/(w_N - w_j) u_N",
           [ctx, N] { return leading_term(dl_X(ctx, N).res()).part; },
           [ctx, N, ratio_prod] { return ratio_prod(N, -1) * DiffOp::u(ctx, N); });
  c.add_eq("leading/Xinv-first",
           "leading term of Res X_1^-1 is prod_{j≠1} (w_1 - w_j + t)/(w_1 - w_j) u_1^-1",
           [ctx] { return leading_term(dl_X_inv(ctx, 1).res()).part; },
           [ctx, ratio_prod] { return ratio_prod(1, +1) * DiffOp::u_inv(ctx, 1); });
  if (p.l >= 1)
    c.add_eq("leading/Y-first",
             "leading term of Res Y_1 is prod_k (w_1 - ħ - z_k) prod_{j≠1} "
             "(w_1 - w_j + t)/(w_1 - w_j) u_1^-1",
             [ctx] { return leading_term(oblomkov_Y(ctx, 1).res()).part; },
             [ctx, ratio_prod] {
               MultiPoly zfac = MultiPoly::one(ctx);
               for (int k = 1; k <= ctx->l(); ++k)
                 zfac *= MultiPoly::w(ctx, 1) - MultiPoly::h(ctx) -
                         MultiPoly::z(ctx, k);
               return RatFunc(zfac) * ratio_prod(1, +1) * DiffOp::u_inv(ctx, 1);
             });
}

/// The symmetric restrictions of the generator families sum to the spherical
/// raising/lowering operators.
inline void suite_spherical(Checker& c, const SuiteParams& p) {
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;

  c.add_eq("spherical/raising", "sum_i Res X_i = E_1[1]",
           [ctx, N] {
             DiffOp r = DiffOp::zero(ctx);
             for (int i = 1; i <= N; ++i) r += dl_X(ctx, i).res();
             return r;
           },
           [ctx] { return E_op(SymPoly::one(1, ctx->l()), ctx); });

  if (p.l == 0) {
    c.add_eq("spherical/lowering-plain", "sum_i Res X_i^-1 = F_1[1]",
             [ctx, N] {
               DiffOp r = DiffOp::zero(ctx);
               for (int i = 1; i <= N; ++i) r += dl_X_inv(ctx, i).res();
               return r;
             },
             [ctx] { return F_op(SymPoly::one(1, 0), ctx); });
    c.add_eq("spherical/lowering-weighted", "sum_i Res y_i = F_1[w]",
             [ctx, N] {
               DiffOp r = DiffOp::zero(ctx);
               for (int i = 1; i <= N; ++i) r += suzuki_y(ctx, i).res();
               return r;
             },
             [ctx] {
               return F_op(SymPoly::single(MultiPoly::w(Context::make(1, 0), 1)),
                           ctx);
             });
  } else {
    c.add_eq("spherical/lowering", "sum_i Res Y_i = F_1[1]",
             [ctx, N] {
               DiffOp r = DiffOp::zero(ctx);
               for (int i = 1; i <= N; ++i) r += oblomkov_Y(ctx, i).res();
               return r;
             },
             [ctx] { return F_op(SymPoly::one(1, ctx->l()), ctx); });
  }
}

/// Commutators of power sums in the w's against the raising operators.
inline void suite_powersum(Checker& c, const SuiteParams& p) {
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;
  int kmax = std::min(3, p.max_degree);

  // [u^I, w_j] = ħ u^I for j in I and 0 otherwise, on a sample subset.
  c.add_eq("powersum/shift-step", "[u_1, w_1] = ħ u_1",
           [ctx] {
             return commutator(DiffOp::u(ctx, 1), DiffOp::w_mult(ctx, 1));
           },
           [ctx] { return MultiPoly::h(ctx) * DiffOp::u(ctx, 1); });
  if (N >= 2)
    c.add_zero("powersum/shift-skip", "[u_1, w_2] = 0", [ctx] {
      return commutator(DiffOp::u(ctx, 1), DiffOp::w_mult(ctx, 2));
    });

  for (int n = 1; n <= std::min(2, N); ++n)
    for (int k = 1; k <= kmax; ++k)
      for (int fsel = 0; fsel <= 1; ++fsel) {
        SymPoly f = fsel == 0 ? SymPoly::one(n, p.l)
                              : SymPoly::power_sum_f(n, p.l, 1);
        std::string id = "powersum/raising-" + std::to_string(n) + "-" +
                         std::to_string(k) + (fsel == 0 ? "-one" : "-p1");
        c.add_eq(id,
                 "[p_k(w), E_n[f]] = -sum_I (p_k(w_I + ħ) - p_k(w_I)) f(w_I) "
                 "prod (w_i - w_j - t)/(w_i - w_j) u_I",
                 [ctx, k, f] {
                   return commutator(DiffOp::mult(power_sum(ctx, k)), E_op(f, ctx));
                 },
                 [ctx, k, f, n] {
                   MultiPoly hh = MultiPoly::h(ctx);
                   MultiPoly tt = MultiPoly::t(ctx);
                   int NN = ctx->N();
                   DiffOp r = DiffOp::zero(ctx);
                   for (const auto& I : k_subsets(NN, n)) {
                     MultiPoly weight = MultiPoly::zero(ctx);
                     for (int i : I)
                       weight += (MultiPoly::w(ctx, i) + hh).pow(k) -
                                 MultiPoly::w(ctx, i).pow(k);
                     RatFunc coef(-weight);
                     coef *= RatFunc(f.eval(ctx, I, MultiPoly::zero(ctx)));
                     std::vector<bool> in(static_cast<size_t>(NN + 1), false);
                     for (int i : I) in[static_cast<size_t>(i)] = true;
                     std::vector<int> lam(static_cast<size_t>(NN), 0);
                     for (int i : I) {
                       lam[static_cast<size_t>(i - 1)] = 1;
                       for (int j = 1; j <= NN; ++j) {
                         if (in[static_cast<size_t>(j)]) continue;
                         MultiPoly d = MultiPoly::w(ctx, i) - MultiPoly::w(ctx, j);
                         coef *= RatFunc::fraction(d - tt, {d});
                       }
                     }
                     r += DiffOp::term(coef, lam, Perm::identity(NN));
                   }
                   return r;
                 });
      }
}

/// Classical limits: the bracket identities of the symmetric-power surface
/// coordinates, plus their exact quantum precursors.
inline void suite_poisson(Checker& c, const SuiteParams& p) {
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;
  int l = p.l;

  // Site operator y_i = (w_i - ħ)^l u_i^{-1}; classically w_i^l u_i^{-1}.
  auto site_y = [ctx, l](int i) {
    return DiffOp::mult((MultiPoly::w(ctx, i) - MultiPoly::h(ctx)).pow(l)) *
           DiffOp::u_inv(ctx, i);
  };
  auto cl_power = [ctx, l](int i, int m) {
    // classical image of y_i^m: w_i^{l m} u_i^{-m}
    std::vector<int> lam(static_cast<size_t>(ctx->N()), 0);
    lam[static_cast<size_t>(i - 1)] = -m;
    return DiffOp::term(RatFunc(MultiPoly::w(ctx, i).pow(l * m)), lam,
                        Perm::identity(ctx->N()));
  };
  auto sum_sites = [ctx, N](auto f) {
    DiffOp r = DiffOp::zero(ctx);
    for (int i = 1; i <= N; ++i) r += f(i);
    return r;
  };

  DiffOp W2 = DiffOp::mult(power_sum(ctx, 2));
  DiffOp Y1 = sum_sites(site_y);
  DiffOp WY = sum_sites([ctx, l](int i) {
    return DiffOp::mult((MultiPoly::w(ctx, i) - MultiPoly::h(ctx)).pow(l + 1)) *
           DiffOp::u_inv(ctx, i);
  });

  c.add_eq("poisson/w2-y", "{sum w_i^2, sum y_j} = 2 sum w_i y_i",
           [W2, Y1] { return classical_bracket(W2, Y1); },
           [ctx, sum_sites, cl_power] {
             return sum_sites([&](int i) {
                      return DiffOp::mult(MultiPoly::w(ctx, i)) * cl_power(i, 1);
                    })
                 .scale(2);
           });

  c.add_eq("poisson/quantum-step",
           "[sum (w-ħ)^l u^-1, sum w(w-ħ)] = -2ħ sum (w-ħ)^{l+1} u^-1",
           [ctx, Y1, N] {
             DiffOp s = DiffOp::zero(ctx);
             for (int i = 1; i <= N; ++i)
               s += DiffOp::mult(MultiPoly::w(ctx, i) *
                                 (MultiPoly::w(ctx, i) - MultiPoly::h(ctx)));
             return commutator(Y1, s);
           },
           [ctx, WY] { return (MultiPoly::h(ctx) * WY).scale(-2); });

  for (int n = 1; n <= 3; ++n) {
    std::string ns = std::to_string(n);
    c.add_eq("poisson/ladder-exact-" + ns,
             "[sum (w-ħ)^{l+1} u^-1, sum y_j^" + ns + "] = " + ns +
                 "ħ sum y_i^" + std::to_string(n + 1),
             [ctx, WY, site_y, sum_sites, n] {
               DiffOp Yn = sum_sites([&](int i) {
                 DiffOp t = DiffOp::one(ctx);
                 for (int m = 0; m < n; ++m) t = t * site_y(i);
                 return t;
               });
               return commutator(WY, Yn);
             },
             [ctx, site_y, sum_sites, n] {
               DiffOp s = sum_sites([&](int i) {
                 DiffOp t = DiffOp::one(ctx);
                 for (int m = 0; m < n + 1; ++m) t = t * site_y(i);
                 return t;
               });
               return (MultiPoly::h(ctx) * s).scale(n);
             });
    c.add_eq("poisson/ladder-" + ns,
             "{sum w_i y_i, sum y_j^" + ns + "} = " + ns + " sum y_i^" +
                 std::to_string(n + 1),
             [ctx, WY, site_y, sum_sites, n] {
               DiffOp Yn = sum_sites([&](int i) {
                 DiffOp t = DiffOp::one(ctx);
                 for (int m = 0; m < n; ++m) t = t * site_y(i);
                 return t;
               });
               return classical_bracket(WY, Yn);
             },
             [cl_power, sum_sites, n] {
               return sum_sites([&](int i) { return cl_power(i, n + 1); })
                   .scale(n);
             });
  }
}

}  // namespace shiftop

#endif  // SHIFTOP_SUITES_EMBED_HPP
