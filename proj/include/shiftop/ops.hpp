#ifndef SHIFTOP_OPS_HPP
#define SHIFTOP_OPS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "shiftop/diffop.hpp"

namespace shiftop {

/// All size-k subsets of {1..N}, each ascending, in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int N, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > N) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back(idx);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<size_t>(p)] == N - (k - 1 - p)) --p;
    if (p < 0) break;
    ++idx[static_cast<size_t>(p)];
    for (int q = p + 1; q < k; ++q)
      idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
  }
  return out;
}

/// Symmetric polynomial in n "slot" variables, used as the functional
/// argument of the raising/lowering operators: slots are instantiated at a
/// chosen subset of the ambient w-variables (plus a common offset).
class SymPoly {
 public:
  explicit SymPoly(MultiPoly p) : p_(std::move(p)) {
    if (!p_.is_symmetric_in_w())
      throw domain_error("SymPoly: polynomial is not symmetric in its slots");
  }
  static SymPoly one(int slots, int l) {
    return SymPoly(MultiPoly::one(Context::make(slots, l)));
  }
  /// Power sum p_k over the slots.
  static SymPoly power_sum_f(int slots, int l, int k) {
    return SymPoly(power_sum(Context::make(slots, l), k));
  }
  /// Single slot, (w + ħ)^n.
  static SymPoly shifted_power(int l, int n) {
    auto c = Context::make(1, l);
    return SymPoly((MultiPoly::w(c, 1) + MultiPoly::h(c)).pow(n));
  }
  /// Single slot, arbitrary polynomial.
  static SymPoly single(MultiPoly p) {
    if (p.ctx()->N() != 1) throw domain_error("SymPoly::single: one slot expected");
    return SymPoly(std::move(p));
  }

  int slots() const { return p_.ctx()->N(); }
  int l() const { return p_.ctx()->l(); }
  const MultiPoly& poly() const { return p_; }

  /// Instantiate slot_j at w_{subset[j-1]} + offset inside the target
  /// context; parameters map to themselves.
  MultiPoly eval(const CtxPtr& target, const std::vector<int>& subset,
                 const MultiPoly& offset) const {
    const CtxPtr& sc = p_.ctx();
    if (static_cast<int>(subset.size()) != sc->N())
      throw domain_error("SymPoly::eval: subset size must equal slot count");
    if (sc->l() != target->l())
      throw context_error("SymPoly::eval: parameter counts differ");
    std::vector<MultiPoly> im;
    im.reserve(static_cast<size_t>(sc->nsym()));
    for (int j = 1; j <= sc->N(); ++j)
      im.push_back(MultiPoly::w(target, subset[static_cast<size_t>(j - 1)]) + offset);
    im.push_back(MultiPoly::h(target));
    im.push_back(MultiPoly::t(target));
    for (int k = 1; k <= sc->l(); ++k) im.push_back(MultiPoly::z(target, k));
    im.push_back(MultiPoly::a(target));
    im.push_back(MultiPoly::omega(target));
    return p_.substituted(im);
  }

 private:
  MultiPoly p_;
};

/// Raising operator: sum over n-subsets I of
///   f(w_I) prod_{i in I, j notin I} (w_i-w_j-t)/(w_i-w_j) prod_{i in I} u_i.
inline DiffOp E_op(const SymPoly& f, const CtxPtr& ctx) {
  int N = ctx->N();
  if (f.slots() < 1 || f.slots() > N)
    throw domain_error("E_op: slot count out of range 1..N");
  DiffOp r = DiffOp::zero(ctx);
  MultiPoly tt = MultiPoly::t(ctx);
  for (const auto& I : k_subsets(N, f.slots())) {
    RatFunc c(f.eval(ctx, I, MultiPoly::zero(ctx)));
    std::vector<bool> in(static_cast<size_t>(N + 1), false);
    for (int i : I) in[static_cast<size_t>(i)] = true;
    std::vector<int> lam(static_cast<size_t>(N), 0);
    for (int i : I) {
      lam[static_cast<size_t>(i - 1)] = 1;
      for (int j = 1; j <= N; ++j) {
        if (in[static_cast<size_t>(j)]) continue;
        MultiPoly d = MultiPoly::w(ctx, i) - MultiPoly::w(ctx, j);
        c *= RatFunc::fraction(d - tt, {d});
      }
    }
    r += DiffOp::term(c, lam, Perm::identity(N));
  }
  return r;
}

/// Lowering operator with an explicit list of z-values (one per factor):
///   sum over n-subsets I of  f(w_I - ħ)
///     prod_{i in I, j notin I} (w_i-w_j+t)/(w_i-w_j)
///     prod_{i in I} [ prod_k (w_i - ħ - z_k) ] u_i^{-1}.
inline DiffOp F_op(const SymPoly& f, const CtxPtr& ctx,
                   const std::vector<MultiPoly>& z_values) {
  int N = ctx->N();
  if (f.slots() < 1 || f.slots() > N)
    throw domain_error("F_op: slot count out of range 1..N");
  DiffOp r = DiffOp::zero(ctx);
  MultiPoly tt = MultiPoly::t(ctx);
  MultiPoly hh = MultiPoly::h(ctx);
  for (const auto& I : k_subsets(N, f.slots())) {
    RatFunc c(f.eval(ctx, I, -hh));
    std::vector<bool> in(static_cast<size_t>(N + 1), false);
    for (int i : I) in[static_cast<size_t>(i)] = true;
    std::vector<int> lam(static_cast<size_t>(N), 0);
    for (int i : I) {
      lam[static_cast<size_t>(i - 1)] = -1;
      for (int j = 1; j <= N; ++j) {
        if (in[static_cast<size_t>(j)]) continue;
        MultiPoly d = MultiPoly::w(ctx, i) - MultiPoly::w(ctx, j);
        c *= RatFunc::fraction(d + tt, {d});
      }
      for (const auto& zk : z_values)
        c *= RatFunc(MultiPoly::w(ctx, i) - hh - zk);
    }
    r += DiffOp::term(c, lam, Perm::identity(N));
  }
  return r;
}

/// Lowering operator with the context's own symbolic z_1..z_l.
inline DiffOp F_op(const SymPoly& f, const CtxPtr& ctx) {
  std::vector<MultiPoly> zv;
  for (int k = 1; k <= ctx->l(); ++k) zv.push_back(MultiPoly::z(ctx, k));
  return F_op(f, ctx, zv);
}

// ---------------------------------------------------------------------------
// Partial order on shift exponents and leading terms.

inline std::vector<int> dominant_sort(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

/// Dominance order on equal-sum vectors (callers pass sorted vectors).
inline bool dominance_less(const std::vector<int>& x, const std::vector<int>& y) {
  if (x == y) return false;
  if (std::accumulate(x.begin(), x.end(), 0) != std::accumulate(y.begin(), y.end(), 0))
    return false;
  int pref = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    pref += y[i] - x[i];
    if (pref < 0) return false;
  }
  return true;
}

/// Root order: x > y when x - y is a nonnegative combination of the vectors
/// e_i - e_j with i < j (equal sums, nonnegative prefix sums of x - y).
inline bool root_greater(const std::vector<int>& x, const std::vector<int>& y) {
  if (x == y) return false;
  if (std::accumulate(x.begin(), x.end(), 0) != std::accumulate(y.begin(), y.end(), 0))
    return false;
  int pref = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    pref += x[i] - y[i];
    if (pref < 0) return false;
  }
  return true;
}

/// Strict partial order on shifts: lam below mu when the dominant
/// rearrangements are strictly dominance-ordered, or the rearrangements agree
/// and lam is above mu in root order.
inline bool shift_less(const std::vector<int>& lam, const std::vector<int>& mu) {
  if (lam.size() != mu.size()) throw domain_error("shift_less: size mismatch");
  auto lp = dominant_sort(lam);
  auto mp = dominant_sort(mu);
  if (lp != mp) return dominance_less(lp, mp);
  return root_greater(lam, mu);
}

struct Leading {
  std::vector<int> lam;
  DiffOp part;
};

/// The terms at the unique maximal shift; error when no shift dominates all
/// others.
inline Leading leading_term(const DiffOp& A) {
  if (A.is_zero()) throw domain_error("leading_term: zero operator");
  std::vector<std::vector<int>> lams;
  for (const auto& [k, g] : A.terms())
    if (std::find(lams.begin(), lams.end(), k.lam) == lams.end()) lams.push_back(k.lam);
  for (const auto& cand : lams) {
    bool top = true;
    for (const auto& other : lams)
      if (other != cand && !shift_less(other, cand)) {
        top = false;
        break;
      }
    if (top) {
      DiffOp part(A.ctx());
      for (const auto& [k, g] : A.terms())
        if (k.lam == cand) part += DiffOp::term(g, k.lam, k.sigma);
      return Leading{cand, part};
    }
  }
  throw domain_error("leading_term: no maximal shift");
}

// ---------------------------------------------------------------------------
// Deformed reflection representation on functions of w_1..w_N.

/// Deformed adjacent reflection: s_i^w + (t/(w_i - w_{i+1})) (s_i^w - 1).
inline DiffOp dl_s(const CtxPtr& ctx, int i) {
  if (i < 1 || i >= ctx->N()) throw domain_error("dl_s: index out of range");
  MultiPoly d = MultiPoly::w(ctx, i) - MultiPoly::w(ctx, i + 1);
  MultiPoly tt = MultiPoly::t(ctx);
  return RatFunc::fraction(d + tt, {d}) * DiffOp::swap_w(ctx, i) +
         DiffOp::mult(RatFunc::fraction(-tt, {d}));
}

/// Affine reflection s_0^w = u^{e_1 - e_N} (1 N): w_1 -> w_N - ħ, w_N -> w_1 + ħ.
inline DiffOp affine_swap_w(const CtxPtr& ctx) {
  int N = ctx->N();
  if (N < 2) throw domain_error("affine_swap_w: need N >= 2");
  std::vector<int> lam(static_cast<size_t>(N), 0);
  lam[0] = 1;
  lam[static_cast<size_t>(N - 1)] = -1;
  return DiffOp::term(RatFunc::one(ctx), lam, Perm::transposition(N, 1, N));
}

/// Deformed affine reflection: s_0^w - (t/(ħ + w_1 - w_N)) (s_0^w - 1).
inline DiffOp dl_s0(const CtxPtr& ctx) {
  int N = ctx->N();
  MultiPoly d = MultiPoly::h(ctx) + MultiPoly::w(ctx, 1) - MultiPoly::w(ctx, N);
  MultiPoly tt = MultiPoly::t(ctx);
  return RatFunc::fraction(d - tt, {d}) * affine_swap_w(ctx) +
         DiffOp::mult(RatFunc::fraction(tt, {d}));
}

/// Cyclic shift: u^{e_1} (1 2 ... N).
inline DiffOp dl_pi(const CtxPtr& ctx) {
  int N = ctx->N();
  std::vector<int> lam(static_cast<size_t>(N), 0);
  lam[0] = 1;
  return DiffOp::term(RatFunc::one(ctx), lam, Perm::cycle(N));
}

inline DiffOp dl_pi_inv(const CtxPtr& ctx) {
  int N = ctx->N();
  std::vector<int> lam(static_cast<size_t>(N), 0);
  lam[static_cast<size_t>(N - 1)] = -1;
  return DiffOp::term(RatFunc::one(ctx), lam, Perm::cycle(N).inverse());
}

/// Deformed transposition (i j), i < j, via the palindromic word
/// s_i s_{i+1} ... s_{j-1} s_{j-2} ... s_i.
inline DiffOp dl_transposition(const CtxPtr& ctx, int i, int j) {
  if (i < 1 || j <= i || j > ctx->N()) throw domain_error("dl_transposition: bad indices");
  DiffOp r = dl_s(ctx, j - 1);
  for (int k = j - 2; k >= i; --k) {
    DiffOp s = dl_s(ctx, k);
    r = s * r * s;
  }
  return r;
}

/// X_1 = pi s_{N-1} ... s_1; X_{i+1} = s_i X_i s_i.
inline DiffOp dl_X(const CtxPtr& ctx, int i) {
  if (i < 1 || i > ctx->N()) throw domain_error("dl_X: index out of range");
  DiffOp x = dl_pi(ctx);
  for (int k = ctx->N() - 1; k >= 1; --k) x = x * dl_s(ctx, k);
  for (int k = 1; k < i; ++k) {
    DiffOp s = dl_s(ctx, k);
    x = s * x * s;
  }
  return x;
}

/// X_1^{-1} = s_1 s_2 ... s_{N-1} pi^{-1}; X_{i+1}^{-1} = s_i X_i^{-1} s_i.
inline DiffOp dl_X_inv(const CtxPtr& ctx, int i) {
  if (i < 1 || i > ctx->N()) throw domain_error("dl_X_inv: index out of range");
  DiffOp x = dl_pi_inv(ctx);
  for (int k = ctx->N() - 1; k >= 1; --k) x = dl_s(ctx, k) * x;
  for (int k = 1; k < i; ++k) {
    DiffOp s = dl_s(ctx, k);
    x = s * x * s;
  }
  return x;
}

/// Dunkl-type lowering generator: y_i = X_i^{-1} (w_i - t sum_{j<i} s_{ji}).
inline DiffOp suzuki_y(const CtxPtr& ctx, int i) {
  DiffOp inner = DiffOp::w_mult(ctx, i);
  MultiPoly tt = MultiPoly::t(ctx);
  for (int j = 1; j < i; ++j) inner -= tt * dl_transposition(ctx, j, i);
  return dl_X_inv(ctx, i) * inner;
}

/// Cyclotomic lowering generator with explicit z-values (one per factor):
///   Y_i = prod_k (w_i - ħ - z_k + t sum_{j>i} s_{ij}) X_i^{-1},
/// factors multiplied left to right.
inline DiffOp oblomkov_Y(const CtxPtr& ctx, int i,
                         const std::vector<MultiPoly>& z_values) {
  if (z_values.empty())
    throw domain_error("oblomkov_Y: needs at least one cyclotomic factor");
  MultiPoly tt = MultiPoly::t(ctx);
  MultiPoly hh = MultiPoly::h(ctx);
  DiffOp spart = DiffOp::zero(ctx);
  for (int j = i + 1; j <= ctx->N(); ++j) spart += tt * dl_transposition(ctx, i, j);
  DiffOp r = DiffOp::one(ctx);
  for (const auto& zk : z_values) {
    DiffOp factor = DiffOp::mult(MultiPoly::w(ctx, i) - hh - zk) + spart;
    r = r * factor;
  }
  return r * dl_X_inv(ctx, i);
}

/// Cyclotomic lowering generator with the context's symbolic z_1..z_l.
inline DiffOp oblomkov_Y(const CtxPtr& ctx, int i) {
  std::vector<MultiPoly> zv;
  for (int k = 1; k <= ctx->l(); ++k) zv.push_back(MultiPoly::z(ctx, k));
  return oblomkov_Y(ctx, i, zv);
}

}  // namespace shiftop

#endif  // SHIFTOP_OPS_HPP
