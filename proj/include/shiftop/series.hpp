#ifndef SHIFTOP_SERIES_HPP
#define SHIFTOP_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "shiftop/poly.hpp"

namespace shiftop {

/// Power series in one formal variable x, truncated at a fixed order, with
/// exact polynomial coefficients. A series keeps coefficients of x^0..x^K.
class TruncSeries {
 public:
  TruncSeries(CtxPtr ctx, int order)
      : ctx_(std::move(ctx)),
        order_(order),
        c_(static_cast<size_t>(order) + 1, MultiPoly::zero(ctx_)) {
    if (order < 0) throw domain_error("TruncSeries: negative order");
  }

  static TruncSeries zero(const CtxPtr& ctx, int order) {
    return TruncSeries(ctx, order);
  }
  static TruncSeries one(const CtxPtr& ctx, int order) {
    TruncSeries s(ctx, order);
    s.c_[0] = MultiPoly::one(ctx);
    return s;
  }
  static TruncSeries x(const CtxPtr& ctx, int order) {
    TruncSeries s(ctx, order);
    if (order >= 1) s.c_[1] = MultiPoly::one(ctx);
    return s;
  }
  /// The linear series 1 + P x.
  static TruncSeries linear(const CtxPtr& ctx, int order, MultiPoly P) {
    TruncSeries s = one(ctx, order);
    if (order >= 1) s.c_[1] = std::move(P);
    return s;
  }

  const CtxPtr& ctx() const { return ctx_; }
  int order() const { return order_; }
  const MultiPoly& coeff(int n) const {
    if (n < 0 || n > order_) throw domain_error("TruncSeries::coeff: index");
    return c_[static_cast<size_t>(n)];
  }
  void set_coeff(int n, MultiPoly v) {
    if (n < 0 || n > order_) throw domain_error("TruncSeries::set_coeff: index");
    c_[static_cast<size_t>(n)] = std::move(v);
  }
  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (int n = 0; n <= order_; ++n) c_[static_cast<size_t>(n)] += o.c_[static_cast<size_t>(n)];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (int n = 0; n <= order_; ++n) c_[static_cast<size_t>(n)] -= o.c_[static_cast<size_t>(n)];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    a += b;
    return a;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    a -= b;
    return a;
  }
  TruncSeries operator-() const {
    TruncSeries r(ctx_, order_);
    for (int n = 0; n <= order_; ++n) r.c_[static_cast<size_t>(n)] = -c_[static_cast<size_t>(n)];
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.ctx_, a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= a.order_; ++j)
        r.c_[static_cast<size_t>(i + j)] +=
            a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return r;
  }
  friend TruncSeries operator*(const MultiPoly& s, TruncSeries p) {
    for (auto& v : p.c_) v = s * v;
    return p;
  }
  friend TruncSeries operator*(const Rat& s, TruncSeries p) {
    for (auto& v : p.c_) v = s * v;
    return p;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) {
    return !(a == b);
  }

  /// Multiply by x^k (dropping overflow beyond the truncation order).
  TruncSeries shifted(int k) const {
    TruncSeries r(ctx_, order_);
    for (int n = 0; n + k <= order_; ++n)
      if (n + k >= 0) r.c_[static_cast<size_t>(n + k)] = c_[static_cast<size_t>(n)];
    return r;
  }

  /// Inverse of a series with constant term 1.
  TruncSeries reciprocal() const {
    if (!c_[0].is_one())
      throw domain_error("TruncSeries::reciprocal: constant term must be 1");
    TruncSeries r = one(ctx_, order_);
    for (int n = 1; n <= order_; ++n) {
      MultiPoly s = MultiPoly::zero(ctx_);
      for (int k = 1; k <= n; ++k)
        s += c_[static_cast<size_t>(k)] * r.c_[static_cast<size_t>(n - k)];
      r.c_[static_cast<size_t>(n)] = -s;
    }
    return r;
  }

  /// log of a series with constant term 1.
  TruncSeries log() const {
    if (!c_[0].is_one())
      throw domain_error("TruncSeries::log: constant term must be 1");
    // log(1 + u) = sum_{m>=1} (-1)^{m+1} u^m / m with u = *this - 1.
    TruncSeries u = *this - one(ctx_, order_);
    TruncSeries r = zero(ctx_, order_);
    TruncSeries upow = u;
    for (int m = 1; m <= order_; ++m) {
      r += rat(m % 2 == 1 ? 1 : -1, m) * upow;
      if (m < order_) upow = upow * u;
    }
    return r;
  }

  /// exp of a series with constant term 0.
  TruncSeries exp() const {
    if (!c_[0].is_zero())
      throw domain_error("TruncSeries::exp: constant term must be 0");
    TruncSeries r = one(ctx_, order_);
    TruncSeries pw = one(ctx_, order_);
    Rat fact(1);
    for (int m = 1; m <= order_; ++m) {
      pw = pw * *this;
      fact *= m;
      r += (Rat(1) / fact) * pw;
    }
    return r;
  }

  TruncSeries pow(int k) const {
    if (k < 0) throw domain_error("TruncSeries::pow: negative exponent");
    TruncSeries r = one(ctx_, order_);
    for (int q = 0; q < k; ++q) r = r * *this;
    return r;
  }

  /// Substitute another series (with constant term 0) for x.
  TruncSeries compose(const TruncSeries& inner) const {
    check(inner);
    if (!inner.c_[0].is_zero())
      throw domain_error("TruncSeries::compose: inner constant term must be 0");
    TruncSeries r = zero(ctx_, order_);
    TruncSeries pw = one(ctx_, order_);
    for (int n = 0; n <= order_; ++n) {
      r += c_[static_cast<size_t>(n)] * pw;
      if (n < order_) pw = pw * inner;
    }
    return r;
  }

  /// Divide every coefficient exactly by a polynomial.
  TruncSeries coeff_divided(const MultiPoly& d) const {
    TruncSeries r(ctx_, order_);
    for (int n = 0; n <= order_; ++n)
      r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)].exact_divide(d);
    return r;
  }

  std::string render() const {
    std::string out;
    bool first = true;
    for (int n = 0; n <= order_; ++n) {
      if (c_[static_cast<size_t>(n)].is_zero()) continue;
      if (!first) out += " + ";
      out += "(" + c_[static_cast<size_t>(n)].render() + ")";
      if (n >= 1) out += "*x" + (n > 1 ? "^" + std::to_string(n) : "");
      first = false;
    }
    if (first) return "0";
    out += " + O(x^" + std::to_string(order_ + 1) + ")";
    return out;
  }

 private:
  void check(const TruncSeries& o) const {
    require_same(ctx_, o.ctx_);
    if (order_ != o.order_)
      throw domain_error("TruncSeries: truncation orders differ");
  }

  CtxPtr ctx_;
  int order_;
  std::vector<MultiPoly> c_;
};

}  // namespace shiftop

#endif  // SHIFTOP_SERIES_HPP
