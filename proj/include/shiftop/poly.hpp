#ifndef SHIFTOP_POLY_HPP
#define SHIFTOP_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftop/context.hpp"

namespace shiftop {

/// Sparse exact multivariate polynomial over Q in the symbols of a Context.
/// Terms are kept in graded-lexicographic order (purely internal); no zero
/// coefficients are ever stored, so equality is structural.
class MultiPoly {
 public:
  using Exp = std::vector<int>;

  struct GrLex {
    bool operator()(const Exp& x, const Exp& y) const {
      int dx = std::accumulate(x.begin(), x.end(), 0);
      int dy = std::accumulate(y.begin(), y.end(), 0);
      if (dx != dy) return dx < dy;
      return x < y;
    }
  };
  using TermMap = std::map<Exp, Rat, GrLex>;

  MultiPoly() = default;
  explicit MultiPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static MultiPoly zero(CtxPtr ctx) { return MultiPoly(std::move(ctx)); }
  static MultiPoly constant(CtxPtr ctx, const Rat& c) {
    MultiPoly p(std::move(ctx));
    if (c != 0) p.terms_.emplace(Exp(static_cast<size_t>(p.ctx_->nsym()), 0), c);
    return p;
  }
  static MultiPoly one(CtxPtr ctx) { return constant(std::move(ctx), 1); }
  static MultiPoly sym(CtxPtr ctx, int s) {
    MultiPoly p(std::move(ctx));
    Exp e(static_cast<size_t>(p.ctx_->nsym()), 0);
    e.at(static_cast<size_t>(s)) = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
  }
  static MultiPoly h(const CtxPtr& ctx) { return sym(ctx, ctx->h()); }
  static MultiPoly t(const CtxPtr& ctx) { return sym(ctx, ctx->t()); }
  static MultiPoly z(const CtxPtr& ctx, int k) { return sym(ctx, ctx->z(k)); }
  static MultiPoly a(const CtxPtr& ctx) { return sym(ctx, ctx->a()); }
  static MultiPoly omega(const CtxPtr& ctx) { return sym(ctx, ctx->omega()); }
  static MultiPoly w(const CtxPtr& ctx, int i) { return sym(ctx, ctx->w(i)); }

  const CtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_deg(terms_.begin()->first) == 0);
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw domain_error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }

  size_t term_count() const { return terms_.size(); }

  int degree_in(int s) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(static_cast<size_t>(s)));
    return d;
  }
  int degree_total() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_deg(e));
    return d;
  }
  /// Combined degree in the w-variables only.
  int degree_w() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int i = 1; i <= ctx_->N(); ++i) s += e.at(static_cast<size_t>(ctx_->w(i)));
      d = std::max(d, s);
    }
    return d;
  }
  bool depends_on(int s) const { return degree_in(s) > 0; }
  bool depends_on_w() const {
    for (int i = 1; i <= ctx_->N(); ++i)
      if (depends_on(ctx_->w(i))) return true;
    return false;
  }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    require_same(x.ctx_, y.ctx_);
    MultiPoly r(x.ctx_);
    Exp e(static_cast<size_t>(x.ctx_->nsym()), 0);
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
        r.add_term(e, cx * cy);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator*(const Rat& c, MultiPoly p) { return p.scale(c); }
  MultiPoly scale(const Rat& c) const {
    if (c == 0) return zero(ctx_);
    MultiPoly r(*this);
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
  }
  MultiPoly pow(int n) const {
    if (n < 0) throw domain_error("pow: negative exponent");
    MultiPoly r = one(ctx_);
    MultiPoly base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r = r * base;
      if (n > 1) base = base * base;
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    require_same(ctx_, o.ctx_);
    return terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Total order usable as a container key: graded-lex on the term lists.
  static int cmp(const MultiPoly& x, const MultiPoly& y) {
    require_same(x.ctx_, y.ctx_);
    auto ix = x.terms_.rbegin(), iy = y.terms_.rbegin();
    GrLex lt;
    for (; ix != x.terms_.rend() && iy != y.terms_.rend(); ++ix, ++iy) {
      if (lt(ix->first, iy->first)) return -1;
      if (lt(iy->first, ix->first)) return 1;
      int c = ::cmp(ix->second, iy->second);
      if (c != 0) return c;
    }
    if (ix != x.terms_.rend()) return 1;
    if (iy != y.terms_.rend()) return -1;
    return 0;
  }
  bool operator<(const MultiPoly& o) const { return cmp(*this, o) < 0; }

  /// Simultaneous substitution: symbol s is replaced by images[s]. All images
  /// must share one target context (which may differ from this one).
  MultiPoly substituted(const std::vector<MultiPoly>& images) const {
    if (images.size() != static_cast<size_t>(ctx_->nsym()))
      throw domain_error("substituted: one image per symbol required");
    CtxPtr target = images.empty() ? ctx_ : images.front().ctx_;
    for (const auto& im : images) require_same(target, im.ctx_);
    // Cache successive powers of each image.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    for (size_t s = 0; s < images.size(); ++s) powers[s].push_back(one(target));
    MultiPoly r = zero(target);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(target, c);
      for (size_t s = 0; s < images.size(); ++s) {
        int k = e[s];
        while (static_cast<int>(powers[s].size()) <= k)
          powers[s].push_back(powers[s].back() * images[s]);
        if (k > 0) term = term * powers[s][static_cast<size_t>(k)];
      }
      r += term;
    }
    return r;
  }

  /// Identity images for this context (basis for one-off substitutions).
  std::vector<MultiPoly> identity_images() const {
    std::vector<MultiPoly> im;
    im.reserve(static_cast<size_t>(ctx_->nsym()));
    for (int s = 0; s < ctx_->nsym(); ++s) im.push_back(sym(ctx_, s));
    return im;
  }

  MultiPoly subst_sym(int s, const MultiPoly& image) const {
    require_same(ctx_, image.ctx_);
    if (!depends_on(s)) return *this;
    auto im = identity_images();
    im[static_cast<size_t>(s)] = image;
    return substituted(im);
  }

  /// Set the listed symbols to zero (drops every term using them).
  MultiPoly specialize_zero(const std::vector<int>& syms) const {
    MultiPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
      bool keep = true;
      for (int s : syms)
        if (e.at(static_cast<size_t>(s)) != 0) {
          keep = false;
          break;
        }
      if (keep) r.terms_.emplace(e, c);
    }
    return r;
  }

  /// w_i -> w_i + lambda_i * ħ for each i (lambda has length N).
  MultiPoly shifted_w(const std::vector<int>& lambda) const {
    if (lambda.size() != static_cast<size_t>(ctx_->N()))
      throw domain_error("shifted_w: lambda must have length N");
    bool trivial = true;
    for (size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] != 0 && depends_on(ctx_->w(static_cast<int>(i) + 1))) trivial = false;
    if (trivial) return *this;
    auto im = identity_images();
    for (int i = 1; i <= ctx_->N(); ++i) {
      int li = lambda[static_cast<size_t>(i - 1)];
      if (li != 0) im[static_cast<size_t>(ctx_->w(i))] = w(ctx_, i) + h(ctx_).scale(Rat(li));
    }
    return substituted(im);
  }

  /// w_i -> w_{image_of[i-1]} (1-based images; a pure exponent relabeling).
  MultiPoly permuted_w(const std::vector<int>& image_of) const {
    if (image_of.size() != static_cast<size_t>(ctx_->N()))
      throw domain_error("permuted_w: image table must have length N");
    MultiPoly r(ctx_);
    Exp e2(static_cast<size_t>(ctx_->nsym()), 0);
    for (const auto& [e, c] : terms_) {
      e2 = e;
      for (int i = 1; i <= ctx_->N(); ++i) e2[static_cast<size_t>(ctx_->w(image_of[static_cast<size_t>(i - 1)]))] =
          e[static_cast<size_t>(ctx_->w(i))];
      auto [it, fresh] = r.terms_.emplace(e2, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  bool is_symmetric_in_w() const {
    for (int i = 1; i < ctx_->N(); ++i) {
      std::vector<int> img(static_cast<size_t>(ctx_->N()));
      for (int j = 1; j <= ctx_->N(); ++j) img[static_cast<size_t>(j - 1)] = j;
      std::swap(img[static_cast<size_t>(i - 1)], img[static_cast<size_t>(i)]);
      if (permuted_w(img) != *this) return false;
    }
    return true;
  }

  MultiPoly derivative(int s) const {
    MultiPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
      int k = e.at(static_cast<size_t>(s));
      if (k == 0) continue;
      Exp e2 = e;
      e2[static_cast<size_t>(s)] = k - 1;
      r.add_term(e2, c * k);
    }
    return r;
  }

  /// Terms whose exponent of s equals k, with that exponent removed.
  MultiPoly coeff_of(int s, int k) const {
    MultiPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
      if (e.at(static_cast<size_t>(s)) != k) continue;
      Exp e2 = e;
      e2[static_cast<size_t>(s)] = 0;
      r.terms_.emplace(std::move(e2), c);
    }
    return r;
  }

  /// Leading term under graded-lex (throws on zero).
  std::pair<Exp, Rat> leading() const {
    if (terms_.empty()) throw domain_error("leading: zero polynomial");
    return *terms_.rbegin();
  }

  /// Quotient of the exact division *this / d, or nullopt when d does not
  /// divide exactly. Single-divisor long division in graded-lex order; the
  /// remainder of such a division is unique, so a nonzero remainder proves
  /// indivisibility.
  std::optional<MultiPoly> try_divide(const MultiPoly& d) const {
    require_same(ctx_, d.ctx_);
    if (d.is_zero()) throw domain_error("try_divide: division by zero");
    MultiPoly q(ctx_);
    MultiPoly r(*this);
    const auto& [de, dc] = *d.terms_.rbegin();
    Exp qe(static_cast<size_t>(ctx_->nsym()), 0);
    while (!r.terms_.empty()) {
      const auto& [re, rc] = *r.terms_.rbegin();
      for (size_t i = 0; i < qe.size(); ++i) {
        qe[i] = re[i] - de[i];
        if (qe[i] < 0) return std::nullopt;
      }
      Rat qc = rc / dc;
      MultiPoly qt(ctx_);
      qt.terms_.emplace(qe, qc);
      q.add_term(qe, qc);
      r -= qt * d;
    }
    return q;
  }

  MultiPoly exact_divide(const MultiPoly& d) const {
    auto q = try_divide(d);
    if (!q) throw division_error("exact_divide: nonzero remainder");
    return *q;
  }

  /// Deterministic rendering, highest term first, e.g. "w_1^2*w_2 - 2*ħ*t".
  std::string render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rat ac = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      std::string mono = render_monomial(e);
      if (mono.empty()) {
        out << ac.get_str();
      } else {
        if (ac != 1) out << ac.get_str() << "*";
        out << mono;
      }
    }
    return out.str();
  }

 private:
  static int total_deg(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

  void add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string render_monomial(const Exp& e) const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ctx_->name(static_cast<int>(i));
      if (e[i] >= 2) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  CtxPtr ctx_;
  TermMap terms_;
};

}  // namespace shiftop

#endif  // SHIFTOP_POLY_HPP
