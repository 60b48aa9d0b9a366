#ifndef SHIFTOP_YANGIAN_HPP
#define SHIFTOP_YANGIAN_HPP

#include <utility>
#include <vector>

#include "shiftop/bernoulli.hpp"
#include "shiftop/diffop.hpp"
#include "shiftop/ops.hpp"
#include "shiftop/series.hpp"

namespace shiftop {

/// Substitute a single symbol by the given image, leaving all others fixed.
inline MultiPoly substitute_symbol(const MultiPoly& p, int sym, const MultiPoly& image) {
  const CtxPtr& ctx = p.ctx();
  std::vector<MultiPoly> im;
  im.reserve(static_cast<size_t>(ctx->nsym()));
  for (int s = 0; s < ctx->nsym(); ++s)
    im.push_back(s == sym ? image : MultiPoly::sym(ctx, s));
  return p.substituted(im);
}

/// The geometric series 1/(1 - P x) truncated at the context order.
inline TruncSeries inv_one_minus(const CtxPtr& ctx, int K, const MultiPoly& P) {
  return TruncSeries::linear(ctx, K, -P).reciprocal();
}

/// x^n * (G_n(1 - q x) - G_n(1 + q x)) where G_0(v) = -log v and
/// G_n(v) = (v^{-n} - 1)/n for n >= 1. Only odd powers of q survive the
/// difference, so the result is an odd series in (q x) shifted by x^n.
inline TruncSeries g_difference(const CtxPtr& ctx, int n, const MultiPoly& q, int K) {
  TruncSeries plus = TruncSeries::linear(ctx, K, q);    // 1 + q x
  TruncSeries minus = TruncSeries::linear(ctx, K, -q);  // 1 - q x
  if (n == 0) return plus.log() - minus.log();
  TruncSeries diff = minus.reciprocal().pow(n) - plus.reciprocal().pow(n);
  return rat(1, n) * diff.shifted(n);
}

/// phi_n(x): the sum of x^n (G_n(1 - q x) - G_n(1 + q x)) over the three
/// structure parameters q in {-ħ, ħ+t, -t}. The x^{n+1} and x^{n+2}
/// coefficients cancel, so phi_n starts at x^{n+3} with leading coefficient
/// ħ t (ħ+t) (n+1)(n+2); every coefficient vanishes at ħ=0, t=0, and ħ+t=0.
inline TruncSeries phi_series(const CtxPtr& ctx, int n, int K) {
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  TruncSeries r = g_difference(ctx, n, -h, K);
  r += g_difference(ctx, n, h + t, K);
  r += g_difference(ctx, n, -t, K);
  return r;
}

/// phi_n(x) / ħ, exact in every coefficient.
inline TruncSeries phi_over_h(const CtxPtr& ctx, int n, int K) {
  return phi_series(ctx, n, K).coeff_divided(MultiPoly::h(ctx));
}

/// Which additive normalization of the difference variables a realization
/// uses: `barred` sites sit at w_i - (N-1) t, `unbarred` sites at w_i.
enum class ShiftConv { barred, unbarred };

/// The site variable of slot i under the given convention.
inline MultiPoly conv_w(const CtxPtr& ctx, ShiftConv conv, int i) {
  MultiPoly w = MultiPoly::w(ctx, i);
  if (conv == ShiftConv::barred)
    w -= rat(ctx->N() - 1) * MultiPoly::t(ctx);
  return w;
}

/// The degree-m Cartan generator as a symmetric polynomial:
/// sum_i Bber_m(site_i) - Bber_m(-(i-1) t), built from the balanced
/// Bernoulli sums Bber_m(P) = (1/m) sum_k C(m,k) B_k (-ħ)^k P^{m-k}.
inline MultiPoly cartan_poly(const CtxPtr& ctx, ShiftConv conv, int m) {
  MultiPoly t = MultiPoly::t(ctx);
  MultiPoly r = MultiPoly::zero(ctx);
  for (int i = 1; i <= ctx->N(); ++i) {
    r += bbar(m, conv_w(ctx, conv, i));
    r -= bbar(m, rat(-(i - 1)) * t);
  }
  return r;
}

/// The Cartan generator as a multiplication operator.
inline DiffOp cartan_op(const CtxPtr& ctx, ShiftConv conv, int m) {
  return DiffOp::mult(cartan_poly(ctx, conv, m));
}

/// One-variable symbol (w + ħ - shift)^n fed to the raising/lowering sums,
/// where the shift is (N-1) t under the barred convention and 0 otherwise.
inline SymPoly yangian_slot(const CtxPtr& ctx, ShiftConv conv, int n) {
  CtxPtr one = Context::make(1, ctx->l());
  MultiPoly arg = MultiPoly::w(one, 1) + MultiPoly::h(one);
  if (conv == ShiftConv::barred)
    arg -= rat(ctx->N() - 1) * MultiPoly::t(one);
  return SymPoly::single(arg.pow(n));
}

/// Raising generator e_n: the one-row raising sum applied to the slot symbol.
inline DiffOp yangian_e(const CtxPtr& ctx, ShiftConv conv, int n) {
  return E_op(yangian_slot(ctx, conv, n), ctx);
}

/// Lowering generator f_n in the unshifted realization (no z factors).
inline DiffOp yangian_f(const CtxPtr& ctx, ShiftConv conv, int n) {
  return F_op(yangian_slot(ctx, conv, n), ctx, {});
}

/// Shifted lowering generator: the lowering sum with the symbolic z factors
/// prod_k (w - ħ - z_k) attached at each site, realizing f_{n+l}.
inline DiffOp yangian_f_shifted(const CtxPtr& ctx, int n) {
  return F_op(yangian_slot(ctx, ShiftConv::unbarred, n), ctx);
}

/// The rational prefactor of the Cartan generating identity:
/// (1 - (ħ+t) x)(1 + ω t x) / (1 - (ħ + (1-ω) t) x), with ω passed in so the
/// same code serves both the symbolic parameter and its numeric value N.
inline TruncSeries cartan_prefactor(const CtxPtr& ctx, const MultiPoly& omega, int K) {
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  TruncSeries r = TruncSeries::linear(ctx, K, -(h + t));
  r = r * TruncSeries::linear(ctx, K, omega * t);
  r = r * inv_one_minus(ctx, K, h + (MultiPoly::one(ctx) - omega) * t);
  return r;
}

/// prod_k (1 - (z_k + ħ) x) over the given shift parameters.
inline TruncSeries z_prefactor(const CtxPtr& ctx, int K, const std::vector<MultiPoly>& zs) {
  MultiPoly h = MultiPoly::h(ctx);
  TruncSeries r = TruncSeries::one(ctx, K);
  for (const MultiPoly& zk : zs) r = r * TruncSeries::linear(ctx, K, -(zk + h));
  return r;
}

/// The l symbolic shift parameters z_1..z_l of a context.
inline std::vector<MultiPoly> symbolic_z(const CtxPtr& ctx) {
  std::vector<MultiPoly> zs;
  for (int k = 1; k <= ctx->l(); ++k) zs.push_back(MultiPoly::z(ctx, k));
  return zs;
}

/// The exponential side of the Cartan generating identity:
/// prefactor(x) * exp(- sum_n cartan_{n+1} phi_n(x)/ħ), optionally multiplied
/// by the z prefactor (the shifted variant of the identity).
inline TruncSeries cartan_current(const CtxPtr& ctx, ShiftConv conv, const MultiPoly& omega,
                                  int K, bool with_z) {
  TruncSeries arg = TruncSeries::zero(ctx, K);
  for (int n = 0; n + 3 <= K; ++n)
    arg += cartan_poly(ctx, conv, n + 1) * phi_over_h(ctx, n, K);
  TruncSeries r = cartan_prefactor(ctx, omega, K) * (-arg).exp();
  if (with_z) r = z_prefactor(ctx, K, symbolic_z(ctx)) * r;
  return r;
}

/// The product side of the Cartan generating identity:
/// prod_i (1 - (s_i - t) x)(1 - (s_i + ħ + t) x) / [(1 - s_i x)(1 - (s_i + ħ) x)]
/// over the sites s_i, optionally with the z prefactor.
inline TruncSeries product_current(const CtxPtr& ctx, ShiftConv conv, int K, bool with_z) {
  MultiPoly h = MultiPoly::h(ctx);
  MultiPoly t = MultiPoly::t(ctx);
  TruncSeries r = TruncSeries::one(ctx, K);
  for (int i = 1; i <= ctx->N(); ++i) {
    MultiPoly s = conv_w(ctx, conv, i);
    r = r * TruncSeries::linear(ctx, K, -(s - t));
    r = r * TruncSeries::linear(ctx, K, -(s + h + t));
    r = r * inv_one_minus(ctx, K, s);
    r = r * inv_one_minus(ctx, K, s + h);
  }
  if (with_z) r = z_prefactor(ctx, K, symbolic_z(ctx)) * r;
  return r;
}

/// Extract the diagonal generators h_n from a Cartan generating series S with
/// S = 1 - t (ħ+t) sum_{n >= first} h_n x^{n+1}: the entry at index n holds
/// h_n for n >= first (zero below), up to n = order-1. Divisions are exact
/// and throw division_error if a coefficient is not a multiple of t (ħ+t).
inline std::vector<MultiPoly> cartan_levels(const TruncSeries& S, int first) {
  const CtxPtr& ctx = S.ctx();
  MultiPoly den = MultiPoly::t(ctx) * (MultiPoly::h(ctx) + MultiPoly::t(ctx));
  std::vector<MultiPoly> hs;
  for (int n = 0; n + 1 <= S.order(); ++n) {
    if (n < first)
      hs.push_back(MultiPoly::zero(ctx));
    else
      hs.push_back((-S.coeff(n + 1)).exact_divide(den));
  }
  return hs;
}

/// Closed form of the raising/lowering commutator [e_m, f_n] as a
/// multiplication operator: -ħ times the x^{m+n+1} coefficient of the product
/// current divided by t (ħ+t).
inline DiffOp ef_commutator_closed(const CtxPtr& ctx, ShiftConv conv, int m, int n) {
  TruncSeries P = product_current(ctx, conv, m + n + 2, false);
  MultiPoly den = MultiPoly::t(ctx) * (MultiPoly::h(ctx) + MultiPoly::t(ctx));
  MultiPoly q = P.coeff(m + n + 1).exact_divide(den);
  return DiffOp::mult(-(MultiPoly::h(ctx) * q));
}

/// Power series in one formal variable whose coefficients are
/// difference-reflection operators, truncated at a fixed order.
class OpSeries {
 public:
  OpSeries(CtxPtr ctx, int order)
      : ctx_(std::move(ctx)),
        order_(order),
        c_(static_cast<size_t>(order) + 1, DiffOp::zero(ctx_)) {
    if (order < 0) throw domain_error("OpSeries: negative order");
  }

  /// Promote a scalar series to a series of multiplication operators.
  static OpSeries from_scalar(const TruncSeries& s) {
    OpSeries r(s.ctx(), s.order());
    for (int n = 0; n <= s.order(); ++n)
      r.c_[static_cast<size_t>(n)] = DiffOp::mult(s.coeff(n));
    return r;
  }

  const CtxPtr& ctx() const { return ctx_; }
  int order() const { return order_; }
  const DiffOp& coeff(int n) const {
    if (n < 0 || n > order_) throw domain_error("OpSeries::coeff: index");
    return c_[static_cast<size_t>(n)];
  }
  void set_coeff(int n, DiffOp v) {
    if (n < 0 || n > order_) throw domain_error("OpSeries::set_coeff: index");
    c_[static_cast<size_t>(n)] = std::move(v);
  }
  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  OpSeries& operator+=(const OpSeries& o) {
    check(o);
    for (int n = 0; n <= order_; ++n) c_[static_cast<size_t>(n)] += o.c_[static_cast<size_t>(n)];
    return *this;
  }
  OpSeries& operator-=(const OpSeries& o) {
    check(o);
    for (int n = 0; n <= order_; ++n) c_[static_cast<size_t>(n)] -= o.c_[static_cast<size_t>(n)];
    return *this;
  }
  friend OpSeries operator+(OpSeries a, const OpSeries& b) { return a += b; }
  friend OpSeries operator-(OpSeries a, const OpSeries& b) { return a -= b; }
  OpSeries operator-() const {
    OpSeries r(ctx_, order_);
    for (int n = 0; n <= order_; ++n)
      r.c_[static_cast<size_t>(n)] = DiffOp::zero(ctx_) - c_[static_cast<size_t>(n)];
    return r;
  }

  /// Multiply by x^k (dropping overflow beyond the truncation order).
  OpSeries shifted(int k) const {
    OpSeries r(ctx_, order_);
    for (int n = 0; n + k <= order_; ++n)
      if (n + k >= 0) r.c_[static_cast<size_t>(n + k)] = c_[static_cast<size_t>(n)];
    return r;
  }

  /// Scale every coefficient on the left by a fixed polynomial.
  friend OpSeries operator*(const MultiPoly& p, OpSeries s) {
    for (auto& v : s.c_) v = p * v;
    return s;
  }
  friend OpSeries operator*(const Rat& c, OpSeries s) {
    for (auto& v : s.c_) v = v.scale(c);
    return s;
  }
  /// Compose every coefficient with a fixed operator on the right/left.
  friend OpSeries operator*(OpSeries s, const DiffOp& A) {
    for (auto& v : s.c_) v = v * A;
    return s;
  }
  friend OpSeries operator*(const DiffOp& A, OpSeries s) {
    for (auto& v : s.c_) v = A * v;
    return s;
  }
  friend bool operator==(const OpSeries& a, const OpSeries& b) {
    a.check(b);
    for (int n = 0; n <= a.order_; ++n)
      if (!(a.c_[static_cast<size_t>(n)] == b.c_[static_cast<size_t>(n)])) return false;
    return true;
  }
  friend bool operator!=(const OpSeries& a, const OpSeries& b) { return !(a == b); }

 private:
  void check(const OpSeries& o) const {
    require_same(ctx_, o.ctx_);
    if (order_ != o.order_) throw domain_error("OpSeries: mixed truncation orders");
  }

  CtxPtr ctx_;
  int order_;
  std::vector<DiffOp> c_;
};

/// Coefficientwise commutator [S(x), A].
inline OpSeries commutator(const OpSeries& s, const DiffOp& A) {
  return s * A - A * s;
}

/// Coefficientwise anticommutator {S(x), A}.
inline OpSeries anticommutator(const OpSeries& s, const DiffOp& A) {
  return s * A + A * s;
}

}  // namespace shiftop

#endif  // SHIFTOP_YANGIAN_HPP
