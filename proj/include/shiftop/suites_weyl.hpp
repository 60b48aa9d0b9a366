#ifndef SHIFTOP_SUITES_WEYL_HPP
#define SHIFTOP_SUITES_WEYL_HPP

#include <string>

#include "shiftop/check.hpp"
#include "shiftop/ops.hpp"

namespace shiftop {

namespace detail {
/// Generator s_i of the affine presentation; index 0 is the affine one.
inline DiffOp affine_gen(const CtxPtr& ctx, int i) {
  return i == 0 ? dl_s0(ctx) : dl_s(ctx, i);
}
inline std::string si(int i) { return "s_" + std::to_string(i); }
inline std::string wi(int i) { return "w_" + std::to_string(i); }
inline std::string Xi(int i) { return "X_" + std::to_string(i); }
}  // namespace detail

/// Presentation by w_1..w_N, the cyclic shift π, and reflections s_0..s_{N-1}.
inline void suite_hgr1(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;
  auto W = [ctx](int i) { return DiffOp::w_mult(ctx, i); };

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      c.add_zero("hgr1/w-comm-" + std::to_string(i) + "-" + std::to_string(j),
                 "[" + wi(i) + ", " + wi(j) + "] = 0",
                 [ctx, i, j, W] { return commutator(W(i), W(j)); });

  if (N >= 2) {
    for (int i = 0; i < N; ++i)
      c.add_eq("hgr1/s-square-" + std::to_string(i), si(i) + "^2 = 1",
               [ctx, i] {
                 auto s = affine_gen(ctx, i);
                 return s * s;
               },
               [ctx] { return DiffOp::one(ctx); });

    // π s_i π^{-1} = s_{i+1}, indices mod N.
    for (int i = 0; i < N; ++i) {
      int ip = (i + 1) % N;
      c.add_eq("hgr1/pi-conj-" + std::to_string(i),
               "π " + si(i) + " = " + si(ip) + " π",
               [ctx, i] { return dl_pi(ctx) * affine_gen(ctx, i); },
               [ctx, ip] { return affine_gen(ctx, ip) * dl_pi(ctx); });
    }

    if (N >= 3) {
      for (int i = 0; i < N; ++i) {
        int ip = (i + 1) % N;
        c.add_eq("hgr1/braid-" + std::to_string(i),
                 si(i) + " " + si(ip) + " " + si(i) + " = " + si(ip) + " " + si(i) +
                     " " + si(ip),
                 [ctx, i, ip] {
                   auto a = affine_gen(ctx, i);
                   auto b = affine_gen(ctx, ip);
                   return a * b * a;
                 },
                 [ctx, i, ip] {
                   auto a = affine_gen(ctx, i);
                   auto b = affine_gen(ctx, ip);
                   return b * a * b;
                 });
      }
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
          int d = j - i;
          if (d == 1 || d == N - 1) continue;  // adjacent in the cycle
          c.add_zero("hgr1/s-comm-" + std::to_string(i) + "-" + std::to_string(j),
                     "[" + si(i) + ", " + si(j) + "] = 0", [ctx, i, j] {
                       return commutator(affine_gen(ctx, i), affine_gen(ctx, j));
                     });
        }
    }
  }

  // π w_i = w_{i+1} π for i < N; π w_N = (w_1 + ħ) π.
  for (int i = 1; i < N; ++i)
    c.add_eq("hgr1/pi-w-" + std::to_string(i), "π " + wi(i) + " = " + wi(i + 1) + " π",
             [ctx, i, W] { return dl_pi(ctx) * W(i); },
             [ctx, i, W] { return W(i + 1) * dl_pi(ctx); });
  c.add_eq("hgr1/pi-w-" + std::to_string(N), "π " + wi(N) + " = (" + wi(1) + " + ħ) π",
           [ctx, N, W] { return dl_pi(ctx) * W(N); },
           [ctx] {
             return DiffOp::mult(MultiPoly::w(ctx, 1) + MultiPoly::h(ctx)) * dl_pi(ctx);
           });

  // Cross relations of the finite reflections with the w's.
  for (int i = 1; i < N; ++i) {
    c.add_eq("hgr1/s-w-lower-" + std::to_string(i),
             si(i) + " " + wi(i) + " = " + wi(i + 1) + " " + si(i) + " - t",
             [ctx, i, W] { return dl_s(ctx, i) * W(i); },
             [ctx, i, W] {
               return W(i + 1) * dl_s(ctx, i) - DiffOp::mult(MultiPoly::t(ctx));
             });
    c.add_eq("hgr1/s-w-upper-" + std::to_string(i),
             si(i) + " " + wi(i + 1) + " = " + wi(i) + " " + si(i) + " + t",
             [ctx, i, W] { return dl_s(ctx, i) * W(i + 1); },
             [ctx, i, W] {
               return W(i) * dl_s(ctx, i) + DiffOp::mult(MultiPoly::t(ctx));
             });
    for (int j = 1; j <= N; ++j) {
      if (j == i || j == i + 1) continue;
      c.add_zero("hgr1/s-w-fix-" + std::to_string(i) + "-" + std::to_string(j),
                 "[" + si(i) + ", " + wi(j) + "] = 0",
                 [ctx, i, j, W] { return commutator(dl_s(ctx, i), W(j)); });
    }
  }

  if (N >= 2) {
    c.add_eq("hgr1/s0-w-first", "s_0 " + wi(1) + " = (" + wi(N) + " - ħ) s_0 + t",
             [ctx, W] { return dl_s0(ctx) * W(1); },
             [ctx, N, W] {
               return DiffOp::mult(MultiPoly::w(ctx, N) - MultiPoly::h(ctx)) *
                          dl_s0(ctx) +
                      DiffOp::mult(MultiPoly::t(ctx));
             });
    c.add_eq("hgr1/s0-w-last", "s_0 " + wi(N) + " = (" + wi(1) + " + ħ) s_0 - t",
             [ctx, N, W] { return dl_s0(ctx) * W(N); },
             [ctx, W] {
               return DiffOp::mult(MultiPoly::w(ctx, 1) + MultiPoly::h(ctx)) *
                          dl_s0(ctx) -
                      DiffOp::mult(MultiPoly::t(ctx));
             });
    for (int i = 2; i < N; ++i)
      c.add_zero("hgr1/s0-w-fix-" + std::to_string(i),
                 "[s_0, " + wi(i) + "] = 0",
                 [ctx, i, W] { return commutator(dl_s0(ctx), W(i)); });
  }
}

/// Presentation by w_1..w_N, commuting invertible X_1..X_N, and s_1..s_{N-1}.
inline void suite_hgr2(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;
  auto W = [ctx](int i) { return DiffOp::w_mult(ctx, i); };

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      c.add_zero("hgr2/w-comm-" + std::to_string(i) + "-" + std::to_string(j),
                 "[" + wi(i) + ", " + wi(j) + "] = 0",
                 [ctx, i, j, W] { return commutator(W(i), W(j)); });
      c.add_zero("hgr2/X-comm-" + std::to_string(i) + "-" + std::to_string(j),
                 "[" + Xi(i) + ", " + Xi(j) + "] = 0",
                 [ctx, i, j] { return commutator(dl_X(ctx, i), dl_X(ctx, j)); });
    }

  for (int i = 1; i <= N; ++i)
    c.add_eq("hgr2/X-inverse-" + std::to_string(i), Xi(i) + " " + Xi(i) + "^-1 = 1",
             [ctx, i] { return dl_X(ctx, i) * dl_X_inv(ctx, i); },
             [ctx] { return DiffOp::one(ctx); });

  for (int i = 1; i < N; ++i)
    c.add_eq("hgr2/s-square-" + std::to_string(i), si(i) + "^2 = 1",
             [ctx, i] { return dl_s(ctx, i) * dl_s(ctx, i); },
             [ctx] { return DiffOp::one(ctx); });
  for (int i = 1; i + 1 < N; ++i)
    c.add_eq("hgr2/braid-" + std::to_string(i),
             si(i) + " " + si(i + 1) + " " + si(i) + " = " + si(i + 1) + " " + si(i) +
                 " " + si(i + 1),
             [ctx, i] { return dl_s(ctx, i) * dl_s(ctx, i + 1) * dl_s(ctx, i); },
             [ctx, i] { return dl_s(ctx, i + 1) * dl_s(ctx, i) * dl_s(ctx, i + 1); });
  for (int i = 1; i < N; ++i)
    for (int j = i + 2; j < N; ++j)
      c.add_zero("hgr2/s-comm-" + std::to_string(i) + "-" + std::to_string(j),
                 "[" + si(i) + ", " + si(j) + "] = 0",
                 [ctx, i, j] { return commutator(dl_s(ctx, i), dl_s(ctx, j)); });

  // Cross relations with the w's (same as the affine presentation).
  for (int i = 1; i < N; ++i) {
    c.add_eq("hgr2/s-w-lower-" + std::to_string(i),
             si(i) + " " + wi(i) + " = " + wi(i + 1) + " " + si(i) + " - t",
             [ctx, i, W] { return dl_s(ctx, i) * W(i); },
             [ctx, i, W] {
               return W(i + 1) * dl_s(ctx, i) - DiffOp::mult(MultiPoly::t(ctx));
             });
    c.add_eq("hgr2/s-w-upper-" + std::to_string(i),
             si(i) + " " + wi(i + 1) + " = " + wi(i) + " " + si(i) + " + t",
             [ctx, i, W] { return dl_s(ctx, i) * W(i + 1); },
             [ctx, i, W] {
               return W(i) * dl_s(ctx, i) + DiffOp::mult(MultiPoly::t(ctx));
             });
    for (int j = 1; j <= N; ++j) {
      if (j == i || j == i + 1) continue;
      c.add_zero("hgr2/s-w-fix-" + std::to_string(i) + "-" + std::to_string(j),
                 "[" + si(i) + ", " + wi(j) + "] = 0",
                 [ctx, i, j, W] { return commutator(dl_s(ctx, i), W(j)); });
    }
  }

  // s_j permutes the X's: s_j X_i^{±1} s_j = X_{s_j(i)}^{±1}.
  for (int j = 1; j < N; ++j)
    for (int i = 1; i <= N; ++i) {
      int im = i == j ? j + 1 : (i == j + 1 ? j : i);
      c.add_eq("hgr2/s-X-" + std::to_string(j) + "-" + std::to_string(i),
               si(j) + " " + Xi(i) + " = " + Xi(im) + " " + si(j),
               [ctx, j, i] { return dl_s(ctx, j) * dl_X(ctx, i); },
               [ctx, j, im] { return dl_X(ctx, im) * dl_s(ctx, j); });
      c.add_eq("hgr2/s-Xinv-" + std::to_string(j) + "-" + std::to_string(i),
               si(j) + " " + Xi(i) + "^-1 = " + Xi(im) + "^-1 " + si(j),
               [ctx, j, i] { return dl_s(ctx, j) * dl_X_inv(ctx, i); },
               [ctx, j, im] { return dl_X_inv(ctx, im) * dl_s(ctx, j); });
    }

  // Weighted commutators of w's and X's.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      std::string id =
          "hgr2/w-X-" + std::to_string(i) + "-" + std::to_string(j);
      if (i > j) {
        c.add_eq(id,
                 "[" + wi(i) + ", " + Xi(j) + "] = -t " + Xi(j) + " s_(" +
                     std::to_string(j) + " " + std::to_string(i) + ")",
                 [ctx, i, j, W] { return commutator(W(i), dl_X(ctx, j)); },
                 [ctx, i, j] {
                   return (MultiPoly::t(ctx) * dl_X(ctx, j) *
                           dl_transposition(ctx, j, i))
                       .scale(-1);
                 });
      } else if (i < j) {
        c.add_eq(id,
                 "[" + wi(i) + ", " + Xi(j) + "] = -t " + Xi(i) + " s_(" +
                     std::to_string(i) + " " + std::to_string(j) + ")",
                 [ctx, i, j, W] { return commutator(W(i), dl_X(ctx, j)); },
                 [ctx, i, j] {
                   return (MultiPoly::t(ctx) * dl_X(ctx, i) *
                           dl_transposition(ctx, i, j))
                       .scale(-1);
                 });
      } else {
        c.add_eq(id,
                 "[" + wi(i) + ", " + Xi(i) + "] = -ħ " + Xi(i) +
                     " + t sum_{k<i} X_k s_(k i) + t sum_{k>i} X_i s_(i k)",
                 [ctx, i, W] { return commutator(W(i), dl_X(ctx, i)); },
                 [ctx, i] {
                   auto tt = MultiPoly::t(ctx);
                   DiffOp r = (MultiPoly::h(ctx) * dl_X(ctx, i)).scale(-1);
                   for (int k = 1; k < i; ++k)
                     r += tt * dl_X(ctx, k) * dl_transposition(ctx, k, i);
                   for (int k = i + 1; k <= ctx->N(); ++k)
                     r += tt * dl_X(ctx, i) * dl_transposition(ctx, i, k);
                   return r;
                 });
      }
    }

  // Dictionary between the two presentations.
  if (N >= 2) {
    c.add_eq("hgr2/pi-word", "π = X_1 s_1 ... s_{N-1}",
             [ctx] { return dl_pi(ctx); },
             [ctx, N] {
               DiffOp r = dl_X(ctx, 1);
               for (int k = 1; k < N; ++k) r = r * dl_s(ctx, k);
               return r;
             });
    c.add_eq("hgr2/s0-word", "s_0 = π^-1 s_1 π",
             [ctx] { return dl_s0(ctx); },
             [ctx] { return dl_pi_inv(ctx) * dl_s(ctx, 1) * dl_pi(ctx); });
  }
}

/// Degenerate double-coset relations for x_i the shift generators X_i and
/// y_i = X_i^{-1}(w_i - t sum_{j<i} s_{ji}) the lowering generators.
inline void suite_rat(Checker& c, const SuiteParams& p) {
  using namespace detail;
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;
  auto X = [ctx](int i) { return dl_X(ctx, i); };
  auto Y = [ctx](int i) { return suzuki_y(ctx, i); };

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      c.add_zero("rat/x-comm-" + std::to_string(i) + "-" + std::to_string(j),
                 "[x_" + std::to_string(i) + ", x_" + std::to_string(j) + "] = 0",
                 [X, i, j] { return commutator(X(i), X(j)); });
      c.add_zero("rat/y-comm-" + std::to_string(i) + "-" + std::to_string(j),
                 "[y_" + std::to_string(i) + ", y_" + std::to_string(j) + "] = 0",
                 [Y, i, j] { return commutator(Y(i), Y(j)); });
    }

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      std::string id = "rat/y-x-" + std::to_string(i) + "-" + std::to_string(j);
      if (i == j) {
        c.add_eq(id,
                 "[y_" + std::to_string(i) + ", x_" + std::to_string(i) +
                     "] = -ħ + t sum_{k≠i} s_(i k)",
                 [X, Y, i] { return commutator(Y(i), X(i)); },
                 [ctx, i] {
                   DiffOp r = DiffOp::mult(-MultiPoly::h(ctx));
                   auto tt = MultiPoly::t(ctx);
                   for (int k = 1; k <= ctx->N(); ++k) {
                     if (k == i) continue;
                     r += tt * dl_transposition(ctx, std::min(i, k), std::max(i, k));
                   }
                   return r;
                 });
      } else {
        c.add_eq(id,
                 "[y_" + std::to_string(i) + ", x_" + std::to_string(j) +
                     "] = -t s_(i j)",
                 [X, Y, i, j] { return commutator(Y(i), X(j)); },
                 [ctx, i, j] {
                   return (MultiPoly::t(ctx) *
                           dl_transposition(ctx, std::min(i, j), std::max(i, j)))
                       .scale(-1);
                 });
      }
    }
}

}  // namespace shiftop

#endif  // SHIFTOP_SUITES_WEYL_HPP
