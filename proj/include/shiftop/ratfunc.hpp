#ifndef SHIFTOP_RATFUNC_HPP
#define SHIFTOP_RATFUNC_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftop/poly.hpp"

namespace shiftop {

/// Exact rational function: a polynomial numerator over a denominator kept in
/// factored form — a multiset of monic linear forms plus a (rarely used)
/// residual polynomial factor. Keeping denominators factored makes the
/// cancellations that pervade difference-operator arithmetic cheap: they only
/// ever require trial division by linear forms.
class RatFunc {
 public:
  struct LessPoly {
    bool operator()(const MultiPoly& x, const MultiPoly& y) const {
      return MultiPoly::cmp(x, y) < 0;
    }
  };
  using FactorMap = std::map<MultiPoly, int, LessPoly>;

  RatFunc() = default;
  explicit RatFunc(MultiPoly num)
      : num_(std::move(num)), res_(MultiPoly::one(num_.ctx())) {}

  static RatFunc zero(const CtxPtr& ctx) { return RatFunc(MultiPoly::zero(ctx)); }
  static RatFunc one(const CtxPtr& ctx) { return RatFunc(MultiPoly::one(ctx)); }
  static RatFunc constant(const CtxPtr& ctx, const Rat& c) {
    return RatFunc(MultiPoly::constant(ctx, c));
  }
  /// num / prod(den_linear), each den factor a linear polynomial.
  static RatFunc fraction(MultiPoly num, const std::vector<MultiPoly>& den_linear) {
    RatFunc r(std::move(num));
    for (const auto& f : den_linear) r.divide_by_poly(f, 1);
    r.cancel();
    return r;
  }

  const CtxPtr& ctx() const { return num_.ctx(); }
  const MultiPoly& num() const { return num_; }
  const FactorMap& den_factors() const { return den_; }
  const MultiPoly& den_residual() const { return res_; }

  bool is_zero() const { return num_.is_zero(); }
  bool den_trivial() const { return den_.empty() && res_.is_one(); }
  bool is_one() const { return den_trivial() && num_.is_one(); }

  MultiPoly den_expanded() const {
    MultiPoly d = res_;
    for (const auto& [f, m] : den_) d = d * f.pow(m);
    return d;
  }

  /// True when the value is a polynomial (clearing the denominator exactly).
  bool is_polynomial() const {
    if (den_trivial()) return true;
    return num_.try_divide(den_expanded()).has_value();
  }
  MultiPoly as_poly() const {
    if (den_trivial()) return num_;
    auto q = num_.try_divide(den_expanded());
    if (!q) throw domain_error("as_poly: value is not a polynomial");
    return *q;
  }

  RatFunc operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    require_same(x.ctx(), y.ctx());
    RatFunc r(x.num_ * y.num_);
    r.den_ = x.den_;
    for (const auto& [f, m] : y.den_) r.den_[f] += m;
    r.res_ = x.res_ * y.res_;
    r.cancel();
    return r;
  }
  friend RatFunc operator*(const MultiPoly& p, const RatFunc& y) { return RatFunc(p) * y; }
  friend RatFunc operator*(const RatFunc& x, const MultiPoly& p) { return x * RatFunc(p); }
  RatFunc scale(const Rat& c) const {
    if (c == 0) return zero(ctx());
    RatFunc r(*this);
    r.num_ = r.num_.scale(c);
    return r;
  }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    require_same(x.ctx(), y.ctx());
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    // Common denominator: factor-wise max multiplicity, residuals multiplied.
    FactorMap common = x.den_;
    for (const auto& [f, m] : y.den_) {
      auto it = common.find(f);
      if (it == common.end())
        common.emplace(f, m);
      else if (it->second < m)
        it->second = m;
    }
    MultiPoly nx = x.num_ * y.res_;
    MultiPoly ny = y.num_ * x.res_;
    for (const auto& [f, m] : common) {
      auto ix = x.den_.find(f);
      int mx = ix == x.den_.end() ? 0 : ix->second;
      auto iy = y.den_.find(f);
      int my = iy == y.den_.end() ? 0 : iy->second;
      if (m > mx) nx = nx * f.pow(m - mx);
      if (m > my) ny = ny * f.pow(m - my);
    }
    RatFunc r(nx + ny);
    r.den_ = std::move(common);
    r.res_ = x.res_ * y.res_;
    r.cancel();
    return r;
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this + (-o); }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  /// Divide by a polynomial (pushed into the factored denominator).
  RatFunc divided_by(const MultiPoly& p) const {
    RatFunc r(*this);
    r.divide_by_poly(p, 1);
    r.cancel();
    return r;
  }

  RatFunc inverse() const {
    if (is_zero()) throw domain_error("inverse: division by zero");
    MultiPoly n = res_;
    for (const auto& [f, m] : den_) n = n * f.pow(m);
    RatFunc r(std::move(n));
    r.divide_by_poly(num_, 1);
    r.cancel();
    return r;
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

  bool operator==(const RatFunc& o) const { return (*this - o).is_zero(); }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Simultaneous substitution; a denominator factor may change nature
  /// (vanish: error; become constant: absorbed; stay linear: re-normalized;
  /// grow nonlinear: moved to the residual).
  RatFunc substituted(const std::vector<MultiPoly>& images) const {
    RatFunc r(num_.substituted(images));
    for (const auto& [f, m] : den_) r.divide_by_poly(f.substituted(images), m);
    MultiPoly rs = res_.substituted(images);
    r.divide_by_poly(rs, 1);
    r.cancel();
    return r;
  }
  RatFunc subst_sym(int s, const MultiPoly& image) const {
    auto im = MultiPoly::zero(ctx()).identity_images();
    im[static_cast<size_t>(s)] = image;
    return substituted(im);
  }
  RatFunc specialize_zero(const std::vector<int>& syms) const {
    auto im = MultiPoly::zero(ctx()).identity_images();
    for (int s : syms) im[static_cast<size_t>(s)] = MultiPoly::zero(ctx());
    return substituted(im);
  }

  /// w_i -> w_i + lambda_i ħ.
  RatFunc shifted_w(const std::vector<int>& lambda) const {
    RatFunc r(num_.shifted_w(lambda));
    for (const auto& [f, m] : den_) r.divide_by_poly(f.shifted_w(lambda), m);
    r.divide_by_poly(res_.shifted_w(lambda), 1);
    r.cancel();
    return r;
  }
  /// w_i -> w_{image_of[i-1]}.
  RatFunc permuted_w(const std::vector<int>& image_of) const {
    RatFunc r(num_.permuted_w(image_of));
    for (const auto& [f, m] : den_) r.divide_by_poly(f.permuted_w(image_of), m);
    r.divide_by_poly(res_.permuted_w(image_of), 1);
    r.cancel();
    return r;
  }

  bool is_symmetric_in_w() const {
    int N = ctx()->N();
    for (int i = 1; i < N; ++i) {
      std::vector<int> img(static_cast<size_t>(N));
      for (int j = 1; j <= N; ++j) img[static_cast<size_t>(j - 1)] = j;
      std::swap(img[static_cast<size_t>(i - 1)], img[static_cast<size_t>(i)]);
      if (permuted_w(img) != *this) return false;
    }
    return true;
  }

  std::string render() const {
    if (den_trivial()) return num_.render();
    std::ostringstream out;
    if (num_.term_count() > 1)
      out << "(" << num_.render() << ")";
    else
      out << num_.render();
    out << " / ";
    std::ostringstream d;
    bool first = true;
    int pieces = static_cast<int>(den_.size()) + (res_.is_one() ? 0 : 1);
    for (const auto& [f, m] : den_) {
      if (!first) d << "*";
      first = false;
      d << "(" << f.render() << ")";
      if (m >= 2) d << "^" << m;
    }
    if (!res_.is_one()) {
      if (!first) d << "*";
      d << "(" << res_.render() << ")";
    }
    if (pieces > 1)
      out << "(" << d.str() << ")";
    else
      out << d.str();
    return out.str();
  }

 private:
  /// Multiply the denominator by p^m, classifying p. Does not cancel.
  void divide_by_poly(const MultiPoly& p, int m) {
    if (m == 0 || p.is_one()) return;
    if (p.is_zero()) throw division_error("denominator factor vanished");
    if (p.is_constant()) {
      Rat c = p.constant_value();
      Rat cm(1);
      for (int k = 0; k < m; ++k) cm *= c;
      num_ = num_.scale(Rat(1) / cm);
      return;
    }
    if (p.degree_total() == 1) {
      Rat lead = p.leading().second;
      if (lead != 1) {
        Rat cm(1);
        for (int k = 0; k < m; ++k) cm *= lead;
        num_ = num_.scale(Rat(1) / cm);
      }
      den_[p.scale(Rat(1) / lead)] += m;
      return;
    }
    for (int k = 0; k < m; ++k) res_ = res_ * p;
  }

  void cancel() {
    if (num_.is_zero()) {
      den_.clear();
      res_ = MultiPoly::one(ctx());
      return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
      while (it->second > 0) {
        auto q = num_.try_divide(it->first);
        if (!q) break;
        num_ = std::move(*q);
        --it->second;
      }
      it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    if (!res_.is_one()) {
      if (auto q = num_.try_divide(res_)) {
        num_ = std::move(*q);
        res_ = MultiPoly::one(ctx());
      }
    }
  }

  MultiPoly num_;
  FactorMap den_;
  MultiPoly res_;
};

}  // namespace shiftop

#endif  // SHIFTOP_RATFUNC_HPP
