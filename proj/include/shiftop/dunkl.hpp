#ifndef SHIFTOP_DUNKL_HPP
#define SHIFTOP_DUNKL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shiftop/check.hpp"
#include "shiftop/poly.hpp"

namespace shiftop {

/// Sparse Laurent polynomial in X_1..X_N whose coefficients are polynomials
/// in the parameters only (no w's). Exponents may be negative.
class LaurentPoly {
 public:
  using Key = std::vector<int>;

  explicit LaurentPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static LaurentPoly zero(const CtxPtr& ctx) { return LaurentPoly(ctx); }
  static LaurentPoly one(const CtxPtr& ctx) {
    return monomial(ctx, Key(static_cast<size_t>(ctx->N()), 0),
                    MultiPoly::one(ctx));
  }
  /// X_i^e.
  static LaurentPoly X(const CtxPtr& ctx, int i, int e = 1) {
    if (i < 1 || i > ctx->N()) throw domain_error("LaurentPoly::X: index");
    Key k(static_cast<size_t>(ctx->N()), 0);
    k[static_cast<size_t>(i - 1)] = e;
    return monomial(ctx, k, MultiPoly::one(ctx));
  }
  static LaurentPoly monomial(const CtxPtr& ctx, Key key, MultiPoly coef) {
    if (static_cast<int>(key.size()) != ctx->N())
      throw domain_error("LaurentPoly::monomial: key size");
    if (coef.degree_w() > 0)
      throw domain_error("LaurentPoly::monomial: coefficient must be w-free");
    LaurentPoly p(ctx);
    if (!coef.is_zero()) p.terms_.emplace(std::move(key), std::move(coef));
    return p;
  }

  const CtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, MultiPoly>& terms() const { return terms_; }

  bool has_negative_exponent() const {
    for (const auto& [k, c] : terms_)
      for (int e : k)
        if (e < 0) return true;
    return false;
  }

  int total_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      int s = 0;
      for (int e : k) s += e;
      if (first || s > d) d = s;
      first = false;
    }
    return d;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    require_same(ctx_, o.ctx_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same(a.ctx_, b.ctx_);
    LaurentPoly r(a.ctx_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k = ka;
        for (size_t q = 0; q < k.size(); ++q) k[q] += kb[q];
        r.add_term(k, ca * cb);
      }
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r(ctx_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  /// Multiply every coefficient by a parameter polynomial.
  friend LaurentPoly operator*(const MultiPoly& s, const LaurentPoly& p) {
    LaurentPoly r(p.ctx_);
    for (const auto& [k, c] : p.terms_) r.add_term(k, s * c);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    require_same(a.ctx_, b.ctx_);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  /// Exchange the exponents of X_i and X_j (the reflection s_(i j)).
  LaurentPoly swapped(int i, int j) const {
    LaurentPoly r(ctx_);
    for (const auto& [k, c] : terms_) {
      Key k2 = k;
      std::swap(k2[static_cast<size_t>(i - 1)], k2[static_cast<size_t>(j - 1)]);
      r.add_term(k2, c);
    }
    return r;
  }

  /// The Euler-type operator X_i d/dX_i: scales each term by its exponent.
  LaurentPoly euler(int i) const {
    LaurentPoly r(ctx_);
    for (const auto& [k, c] : terms_) {
      int e = k[static_cast<size_t>(i - 1)];
      if (e != 0) r.add_term(k, Rat(e) * c);
    }
    return r;
  }

  /// d/dX_i, valid on any Laurent term (kills exponent 0).
  LaurentPoly derivative(int i) const {
    LaurentPoly r(ctx_);
    for (const auto& [k, c] : terms_) {
      int e = k[static_cast<size_t>(i - 1)];
      if (e == 0) continue;
      Key k2 = k;
      k2[static_cast<size_t>(i - 1)] = e - 1;
      r.add_term(k2, Rat(e) * c);
    }
    return r;
  }

  /// Multiply by X_i^e.
  LaurentPoly shifted(int i, int e) const {
    LaurentPoly r(ctx_);
    for (const auto& [k, c] : terms_) {
      Key k2 = k;
      k2[static_cast<size_t>(i - 1)] += e;
      r.terms_.emplace(std::move(k2), c);
    }
    return r;
  }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (size_t q = 0; q < it->first.size(); ++q) {
        int e = it->first[q];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "X_" + std::to_string(q + 1);
        if (e != 1) mono += "^" + std::to_string(e);
      }
      std::string coef = it->second.render();
      std::string piece;
      if (mono.empty()) {
        piece = coef;
      } else if (coef == "1") {
        piece = mono;
      } else if (coef == "-1") {
        piece = "-" + mono;
      } else {
        bool sum = coef.find(" + ") != std::string::npos ||
                   coef.find(" - ") != std::string::npos;
        piece = (sum ? "(" + coef + ")" : coef) + "*" + mono;
      }
      if (first) {
        out = piece;
        first = false;
      } else if (!piece.empty() && piece[0] == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    }
    return out;
  }

 private:
  void add_term(const Key& k, MultiPoly c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  CtxPtr ctx_;
  std::map<Key, MultiPoly> terms_;
};

/// Exact quotient p / (X_i - X_j), by synthetic division on the X_i slices.
/// Throws division_error when the division leaves a remainder.
inline LaurentPoly laurent_exact_quotient(const LaurentPoly& p, int i, int j) {
  if (p.is_zero()) return p;
  if (i == j) throw domain_error("laurent_exact_quotient: equal indices");
  // Slice by the X_i exponent, recording each slice with that exponent zeroed.
  std::map<int, LaurentPoly> slices;
  for (const auto& [k, c] : p.terms()) {
    int e = k[static_cast<size_t>(i - 1)];
    LaurentPoly::Key k2 = k;
    k2[static_cast<size_t>(i - 1)] = 0;
    auto it = slices.find(e);
    if (it == slices.end())
      it = slices.emplace(e, LaurentPoly::zero(p.ctx())).first;
    it->second += LaurentPoly::monomial(p.ctx(), k2, c);
  }
  int hi = slices.rbegin()->first;
  int lo = slices.begin()->first;
  auto slice = [&](int e) {
    auto it = slices.find(e);
    return it == slices.end() ? LaurentPoly::zero(p.ctx()) : it->second;
  };
  // p = sum_e slice(e) X_i^e; the quotient q satisfies
  // q_{hi-1} = slice(hi), q_{e-1} = slice(e) + X_j q_e, and exactness means
  // slice(lo) + X_j q_lo = 0.
  LaurentPoly result(p.ctx());
  LaurentPoly carry = slice(hi);  // becomes q_{hi-1}
  for (int e = hi - 1; e >= lo; --e) {
    result += carry.shifted(i, e);
    carry = slice(e) + carry.shifted(j, 1);
  }
  // carry now holds slice(lo) + X_j q_lo, the obstruction to exactness.
  if (!carry.is_zero())
    throw division_error("laurent_exact_quotient: remainder " + carry.render());
  return result;
}

/// The divided difference (p - s_(i j) p) / (X_i - X_j); always exact.
inline LaurentPoly divided_difference(const LaurentPoly& p, int i, int j) {
  LaurentPoly num = p - p.swapped(i, j);
  if (num.is_zero()) return num;
  return laurent_exact_quotient(num, i, j);
}

/// Trigonometric Dunkl operator
/// -ħ X_i d/dX_i + t sum_{k≠i} X_i/(X_i - X_k) (1 - s_(i k))
///              + t sum_{k<i} s_(i k).
inline LaurentPoly trig_dunkl(int i, const LaurentPoly& p) {
  const CtxPtr& ctx = p.ctx();
  if (i < 1 || i > ctx->N()) throw domain_error("trig_dunkl: index");
  MultiPoly hh = MultiPoly::h(ctx);
  MultiPoly tt = MultiPoly::t(ctx);
  LaurentPoly r = (-hh) * p.euler(i);
  for (int k = 1; k <= ctx->N(); ++k) {
    if (k == i) continue;
    r += tt * divided_difference(p, i, k).shifted(i, 1);
  }
  for (int k = 1; k < i; ++k) r += tt * p.swapped(i, k);
  return r;
}

/// Rational Dunkl operator -ħ d/dx_i + t sum_{k≠i} 1/(x_i - x_k) (1 - s_(i k)),
/// on true polynomials (nonnegative exponents).
inline LaurentPoly rat_dunkl(int i, const LaurentPoly& p) {
  const CtxPtr& ctx = p.ctx();
  if (i < 1 || i > ctx->N()) throw domain_error("rat_dunkl: index");
  if (p.has_negative_exponent())
    throw domain_error("rat_dunkl: argument must be a polynomial");
  MultiPoly hh = MultiPoly::h(ctx);
  MultiPoly tt = MultiPoly::t(ctx);
  LaurentPoly r = (-hh) * p.derivative(i);
  for (int k = 1; k <= ctx->N(); ++k) {
    if (k == i) continue;
    r += tt * divided_difference(p, i, k);
  }
  return r;
}

/// All exponent vectors a in Z^N with sum |a_q| <= d.
inline std::vector<std::vector<int>> laurent_monomial_keys(int N, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(N), 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == N) {
      out.push_back(cur);
      return;
    }
    for (int e = -budget; e <= budget; ++e) {
      cur[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, budget - std::abs(e));
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// All exponent vectors a >= 0 with sum a_q <= d.
inline std::vector<std::vector<int>> poly_monomial_keys(int N, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(N), 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == N) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      cur[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, budget - e);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Relations of the Dunkl realizations, checked on every monomial up to the
/// configured degree.
inline void suite_dunkl(Checker& c, const SuiteParams& p) {
  auto ctx = Context::make(p.N, p.l);
  int N = p.N;
  int d = p.max_degree;

  auto mono = [ctx](const std::vector<int>& key) {
    return LaurentPoly::monomial(ctx, key, MultiPoly::one(ctx));
  };
  auto first_failure = [mono](const std::vector<std::vector<int>>& keys,
                              auto&& residual) -> std::optional<std::string> {
    for (const auto& key : keys) {
      LaurentPoly m = mono(key);
      LaurentPoly r = residual(m);
      if (!r.is_zero())
        return "on " + m.render() + ": " + r.render();
    }
    return std::nullopt;
  };

  auto lkeys = laurent_monomial_keys(N, d);
  auto pkeys = poly_monomial_keys(N, d);

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      std::string ij = std::to_string(i) + "-" + std::to_string(j);
      c.add("dunkl/trig-comm-" + ij,
            "[Dw_" + std::to_string(i) + ", Dw_" + std::to_string(j) +
                "] = 0 on Laurent monomials",
            [i, j, lkeys, first_failure] {
              return first_failure(lkeys, [i, j](const LaurentPoly& m) {
                return trig_dunkl(i, trig_dunkl(j, m)) -
                       trig_dunkl(j, trig_dunkl(i, m));
              });
            });
      c.add("dunkl/rat-comm-" + ij,
            "[y_" + std::to_string(i) + ", y_" + std::to_string(j) +
                "] = 0 on monomials",
            [i, j, pkeys, first_failure] {
              return first_failure(pkeys, [i, j](const LaurentPoly& m) {
                return rat_dunkl(i, rat_dunkl(j, m)) -
                       rat_dunkl(j, rat_dunkl(i, m));
              });
            });
    }

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      std::string ij = std::to_string(i) + "-" + std::to_string(j);
      if (i == j) {
        c.add("dunkl/rat-step-" + ij,
              "[y_" + std::to_string(i) + ", x_" + std::to_string(i) +
                  "] = -ħ + t sum_{k≠i} s_(i k) on monomials",
              [ctx, i, pkeys, first_failure] {
                return first_failure(pkeys, [ctx, i](const LaurentPoly& m) {
                  LaurentPoly x = LaurentPoly::X(ctx, i);
                  LaurentPoly lhs =
                      rat_dunkl(i, x * m) - x * rat_dunkl(i, m);
                  LaurentPoly rhs = (-MultiPoly::h(ctx)) * m;
                  for (int k = 1; k <= ctx->N(); ++k) {
                    if (k == i) continue;
                    rhs += MultiPoly::t(ctx) * m.swapped(i, k);
                  }
                  return lhs - rhs;
                });
              });
      } else {
        c.add("dunkl/rat-step-" + ij,
              "[y_" + std::to_string(i) + ", x_" + std::to_string(j) +
                  "] = -t s_(i j) on monomials",
              [ctx, i, j, pkeys, first_failure] {
                return first_failure(pkeys, [ctx, i, j](const LaurentPoly& m) {
                  LaurentPoly x = LaurentPoly::X(ctx, j);
                  LaurentPoly lhs =
                      rat_dunkl(i, x * m) - x * rat_dunkl(i, m);
                  return lhs + MultiPoly::t(ctx) * m.swapped(i, j);
                });
              });
      }
    }

  // Compatibility of the two realizations through the lowering dictionary:
  // y_i acts as X_i^{-1} (Dw_i - t sum_{j<i} s_(j i)).
  for (int i = 1; i <= N; ++i)
    c.add("dunkl/compat-" + std::to_string(i),
          "rational y_" + std::to_string(i) +
              " = X^-1 (Dw - t sum_{j<i} s_(j i)) on monomials",
          [ctx, i, pkeys, first_failure] {
            return first_failure(pkeys, [ctx, i](const LaurentPoly& m) {
              LaurentPoly trig = trig_dunkl(i, m);
              for (int j = 1; j < i; ++j)
                trig -= MultiPoly::t(ctx) * m.swapped(j, i);
              return rat_dunkl(i, m) - trig.shifted(i, -1);
            });
          });
}

}  // namespace shiftop

#endif  // SHIFTOP_DUNKL_HPP
