#ifndef SHIFTOP_DIFFOP_HPP
#define SHIFTOP_DIFFOP_HPP

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shiftop/perm.hpp"
#include "shiftop/ratfunc.hpp"

namespace shiftop {

inline MultiPoly elementary_symmetric(const CtxPtr& ctx, int k) {
  int N = ctx->N();
  if (k < 0 || k > N) throw domain_error("elementary_symmetric: k out of range");
  if (k == 0) return MultiPoly::one(ctx);
  // Coefficient extraction from prod (y + w_i), done directly: sum over all
  // k-subsets of {1..N}.
  MultiPoly r = MultiPoly::zero(ctx);
  std::vector<int> idx(static_cast<size_t>(k));
  // First subset 1..k.
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
  while (true) {
    MultiPoly m = MultiPoly::one(ctx);
    for (int i : idx) m = m * MultiPoly::w(ctx, i);
    r += m;
    int p = k - 1;
    while (p >= 0 && idx[static_cast<size_t>(p)] == N - (k - 1 - p)) --p;
    if (p < 0) break;
    ++idx[static_cast<size_t>(p)];
    for (int q = p + 1; q < k; ++q)
      idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
  }
  return r;
}

inline MultiPoly power_sum(const CtxPtr& ctx, int k) {
  if (k < 1) throw domain_error("power_sum: k must be >= 1");
  MultiPoly r = MultiPoly::zero(ctx);
  for (int i = 1; i <= ctx->N(); ++i) r += MultiPoly::w(ctx, i).pow(k);
  return r;
}

/// One composite index of a difference-reflection term: the shift exponent
/// u^lam and the permutation part.
struct OpKey {
  std::vector<int> lam;
  Perm sigma;
  bool operator<(const OpKey& o) const {
    if (lam != o.lam) return lam < o.lam;
    return sigma < o.sigma;
  }
  bool operator==(const OpKey& o) const { return lam == o.lam && sigma == o.sigma; }
};

/// Operator of the form  sum_k  g_k(w) u^{lam_k} sigma_k  acting on functions
/// of w_1..w_N, where u_i shifts w_i by ħ and sigma permutes the w's.
/// Coefficients are kept to the left of the shifts (normal form), so the
/// product rule is
///   (g1 u^{l1} s1)(g2 u^{l2} s2) = g1 * S_{l1}(s1.g2) u^{l1 + s1.l2} s1 s2,
/// with (s.g)(w_i) = g relabeled by w_i -> w_{s(i)} and S_l the shift
/// w_i -> w_i + ħ l_i.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static DiffOp zero(CtxPtr ctx) { return DiffOp(std::move(ctx)); }
  static DiffOp term(const RatFunc& g, std::vector<int> lam, const Perm& sigma) {
    const CtxPtr& ctx = g.ctx();
    if (static_cast<int>(lam.size()) != ctx->N() || sigma.n() != ctx->N())
      throw domain_error("DiffOp::term: shape mismatch with context");
    DiffOp r(ctx);
    if (!g.is_zero()) r.terms_.emplace(OpKey{std::move(lam), sigma}, g);
    return r;
  }
  static DiffOp one(const CtxPtr& ctx) {
    return term(RatFunc::one(ctx), std::vector<int>(static_cast<size_t>(ctx->N()), 0),
                Perm::identity(ctx->N()));
  }
  /// Multiplication by a rational function.
  static DiffOp mult(const RatFunc& g) {
    const CtxPtr& ctx = g.ctx();
    return term(g, std::vector<int>(static_cast<size_t>(ctx->N()), 0),
                Perm::identity(ctx->N()));
  }
  static DiffOp mult(const MultiPoly& p) { return mult(RatFunc(p)); }
  /// Pure permutation operator.
  static DiffOp perm(const CtxPtr& ctx, const Perm& s) {
    return term(RatFunc::one(ctx), std::vector<int>(static_cast<size_t>(ctx->N()), 0), s);
  }
  /// Plain adjacent swap of w_i, w_{i+1} (no deformation).
  static DiffOp swap_w(const CtxPtr& ctx, int i) {
    return perm(ctx, Perm::simple(ctx->N(), i));
  }
  static DiffOp u_pow(const CtxPtr& ctx, std::vector<int> lam) {
    return term(RatFunc::one(ctx), std::move(lam), Perm::identity(ctx->N()));
  }
  static DiffOp u(const CtxPtr& ctx, int i) {
    ctx->w(i);  // range check
    std::vector<int> lam(static_cast<size_t>(ctx->N()), 0);
    lam.at(static_cast<size_t>(i - 1)) = 1;
    return u_pow(ctx, std::move(lam));
  }
  static DiffOp u_inv(const CtxPtr& ctx, int i) {
    ctx->w(i);  // range check
    std::vector<int> lam(static_cast<size_t>(ctx->N()), 0);
    lam.at(static_cast<size_t>(i - 1)) = -1;
    return u_pow(ctx, std::move(lam));
  }
  static DiffOp w_mult(const CtxPtr& ctx, int i) { return mult(MultiPoly::w(ctx, i)); }

  const CtxPtr& ctx() const { return ctx_; }
  const std::map<OpKey, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  DiffOp operator-() const {
    DiffOp r(*this);
    for (auto& [k, g] : r.terms_) g = -g;
    return r;
  }
  DiffOp& operator+=(const DiffOp& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [k, g] : o.terms_) add_term(k, g);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [k, g] : o.terms_) add_term(k, -g);
    return *this;
  }
  friend DiffOp operator+(DiffOp x, const DiffOp& y) { return x += y; }
  friend DiffOp operator-(DiffOp x, const DiffOp& y) { return x -= y; }

  friend DiffOp operator*(const DiffOp& x, const DiffOp& y) {
    require_same(x.ctx_, y.ctx_);
    DiffOp r(x.ctx_);
    for (const auto& [k1, g1] : x.terms_)
      for (const auto& [k2, g2] : y.terms_) {
        RatFunc g = g1 * g2.permuted_w(k1.sigma.images1()).shifted_w(k1.lam);
        std::vector<int> lam = k1.sigma.act_tuple(k2.lam);
        for (size_t i = 0; i < lam.size(); ++i) lam[i] += k1.lam[i];
        r.add_term(OpKey{std::move(lam), k1.sigma * k2.sigma}, g);
      }
    return r;
  }
  DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }
  friend DiffOp operator*(const RatFunc& g, const DiffOp& x) { return mult(g) * x; }
  friend DiffOp operator*(const DiffOp& x, const RatFunc& g) { return x * mult(g); }
  friend DiffOp operator*(const MultiPoly& p, const DiffOp& x) { return mult(p) * x; }
  friend DiffOp operator*(const DiffOp& x, const MultiPoly& p) { return x * mult(p); }
  DiffOp scale(const Rat& c) const {
    DiffOp r(ctx_);
    if (c == 0) return r;
    r = *this;
    for (auto& [k, g] : r.terms_) g = g.scale(c);
    return r;
  }
  DiffOp pow(int n) const {
    if (n < 0) throw domain_error("DiffOp::pow: negative exponent");
    DiffOp r = one(ctx_);
    DiffOp base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r = r * base;
      if (n > 1) base = base * base;
    }
    return r;
  }

  bool operator==(const DiffOp& o) const {
    require_same(ctx_, o.ctx_);
    auto ix = terms_.begin();
    auto iy = o.terms_.begin();
    for (; ix != terms_.end() && iy != o.terms_.end(); ++ix, ++iy) {
      if (!(ix->first == iy->first)) return false;
      if (ix->second != iy->second) return false;
    }
    return ix == terms_.end() && iy == o.terms_.end();
  }
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  /// Action on a function: each term contributes g * S_lam(sigma.f).
  RatFunc apply(const RatFunc& f) const {
    require_same(ctx_, f.ctx());
    RatFunc r = RatFunc::zero(ctx_);
    for (const auto& [k, g] : terms_)
      r += g * f.permuted_w(k.sigma.images1()).shifted_w(k.lam);
    return r;
  }
  RatFunc apply(const MultiPoly& f) const { return apply(RatFunc(f)); }

  /// Forget the permutation parts, merging coefficients with equal shifts
  /// (the image of the operator on symmetric functions).
  DiffOp res() const {
    DiffOp r(ctx_);
    Perm e = Perm::identity(ctx_->N());
    for (const auto& [k, g] : terms_) r.add_term(OpKey{k.lam, e}, g);
    return r;
  }

  /// Check that the operator maps symmetric polynomials to symmetric
  /// rational functions, on all products of elementary symmetric polynomials
  /// of combined w-degree <= d.
  bool preserves_symmetric(int d) const {
    std::vector<MultiPoly> basis;
    build_sym_basis(d, 1, MultiPoly::one(ctx_), basis);
    for (const auto& b : basis)
      if (!apply(b).is_symmetric_in_w()) return false;
    return true;
  }

  /// Substitute the listed symbols by zero in every coefficient. The shift
  /// and permutation structure is untouched.
  DiffOp coeffs_zeroed(const std::vector<int>& syms) const {
    DiffOp r(ctx_);
    for (const auto& [k, g] : terms_) r.add_term(k, g.specialize_zero(syms));
    return r;
  }

  /// Divide every coefficient by ħ, requiring exactness (no coefficient may
  /// acquire ħ in its denominator).
  DiffOp divided_by_h() const {
    MultiPoly hh = MultiPoly::h(ctx_);
    DiffOp r(ctx_);
    for (const auto& [k, g] : terms_) {
      RatFunc q = g.divided_by(hh);
      if (q.den_factors().count(hh) > 0)
        throw division_error("divided_by_h: coefficient not divisible by ħ");
      r.add_term(k, q);
    }
    return r;
  }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, g] = *it;
      std::string piece = render_term(k, g);
      if (first) {
        out << piece;
        first = false;
      } else if (piece.size() > 1 && piece[0] == '-') {
        out << " - " << piece.substr(1);
      } else {
        out << " + " << piece;
      }
    }
    return out.str();
  }

 private:
  void add_term(const OpKey& k, const RatFunc& g) {
    if (g.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, g);
    if (!fresh) {
      it->second += g;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void build_sym_basis(int remaining, int k, const MultiPoly& acc,
                       std::vector<MultiPoly>& out) const {
    if (!acc.is_one()) out.push_back(acc);
    for (int j = k; j <= ctx_->N() && j <= remaining; ++j)
      build_sym_basis(remaining - j, j, acc * elementary_symmetric(ctx_, j), out);
  }

  std::string render_term(const OpKey& k, const RatFunc& g) const {
    std::vector<std::string> parts;
    bool neg = false;
    std::string gs = g.render();
    if (!g.is_one()) {
      if (gs == "-1") {
        neg = true;
      } else if (g.den_trivial() && g.num().term_count() > 1) {
        parts.push_back("(" + gs + ")");
      } else {
        parts.push_back(gs);
      }
    }
    for (int i = 1; i <= ctx_->N(); ++i) {
      int e = k.lam[static_cast<size_t>(i - 1)];
      if (e == 0) continue;
      std::string p = "u_" + std::to_string(i);
      if (e != 1) p += "^" + std::to_string(e);
      parts.push_back(p);
    }
    if (!k.sigma.is_identity()) parts.push_back(k.sigma.render());
    if (parts.empty()) parts.push_back("1");
    std::string joined;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) joined += "*";
      joined += parts[i];
    }
    return neg ? "-" + joined : joined;
  }

  CtxPtr ctx_;
  std::map<OpKey, RatFunc> terms_;
};

inline DiffOp commutator(const DiffOp& x, const DiffOp& y) { return x * y - y * x; }
inline DiffOp anticommutator(const DiffOp& x, const DiffOp& y) { return x * y + y * x; }

/// Classical limit bracket: zero out the listed symbols (typically t and all
/// z_k) in both operands, take the commutator, divide by ħ exactly, then send
/// ħ -> 0 in the coefficients.
inline DiffOp classical_bracket(const DiffOp& x, const DiffOp& y,
                                const std::vector<int>& zero_syms) {
  DiffOp x0 = x.coeffs_zeroed(zero_syms);
  DiffOp y0 = y.coeffs_zeroed(zero_syms);
  DiffOp c = commutator(x0, y0).divided_by_h();
  return c.coeffs_zeroed({x.ctx()->h()});
}
inline DiffOp classical_bracket(const DiffOp& x, const DiffOp& y) {
  std::vector<int> syms{x.ctx()->t()};
  for (int k = 1; k <= x.ctx()->l(); ++k) syms.push_back(x.ctx()->z(k));
  return classical_bracket(x, y, syms);
}

}  // namespace shiftop

#endif  // SHIFTOP_DIFFOP_HPP
