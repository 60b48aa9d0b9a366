#ifndef SHIFTOP_CYCLOTOMIC_HPP
#define SHIFTOP_CYCLOTOMIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "shiftop/context.hpp"

namespace shiftop {

namespace cycdetail {

using Poly = std::vector<Rat>;  // dense, index = power, no trailing zeros

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly scale(Poly a, const Rat& c) {
  for (auto& v : a) v *= c;
  trim(a);
  return a;
}

/// Quotient and remainder of a by a nonzero divisor b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw division_error("cyclotomic: polynomial division by zero");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {Poly{}, rem};
  Poly quo(rem.size() - b.size() + 1, Rat(0));
  Rat lead = b.back();
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Rat q = rem.back() / lead;
    quo[shift] = q;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= q * b[i];
    trim(rem);
    if (rem.empty()) break;
  }
  return {quo, rem};
}

/// The l-th cyclotomic polynomial: x^l - 1 divided exactly by the product of
/// the cyclotomic polynomials of all proper divisors of l.
inline Poly cyclotomic_poly(int l) {
  if (l < 1) throw domain_error("cyclotomic: order must be >= 1");
  Poly num(static_cast<size_t>(l) + 1, Rat(0));
  num[0] = Rat(-1);
  num[static_cast<size_t>(l)] = Rat(1);
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    auto [quo, rem] = divmod(num, cyclotomic_poly(d));
    if (!rem.empty())
      throw division_error("cyclotomic: inexact divisor product");
    num = std::move(quo);
  }
  return num;
}

/// Extended Euclid: returns (g, s, t) with s a + t b = g, g the monic gcd.
inline std::pair<Poly, std::pair<Poly, Poly>> ext_euclid(Poly a, Poly b) {
  Poly s0{Rat(1)}, s1{};
  Poly t0{}, t1{Rat(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!a.empty() && a.back() != 1) {
    Rat inv = Rat(1) / a.back();
    s0 = scale(std::move(s0), inv);
    t0 = scale(std::move(t0), inv);
    a = scale(std::move(a), inv);
  }
  return {a, {s0, t0}};
}

}  // namespace cycdetail

/// An element of ℚ(ε_l) = ℚ[x]/Φ_l(x) with ε a primitive l-th root of unity,
/// stored as the canonical residue of degree < deg Φ_l.
class CycNum {
 public:
  explicit CycNum(int l) : l_(l) {
    if (l < 1) throw domain_error("CycNum: order must be >= 1");
  }

  static CycNum zero(int l) { return CycNum(l); }
  static CycNum one(int l) { return from_rat(l, Rat(1)); }
  static CycNum from_rat(int l, const Rat& c) {
    CycNum r(l);
    if (c != 0) r.c_ = {c};
    r.reduce();
    return r;
  }
  /// ε^k, for any integer exponent (negative powers via ε^{-1} = ε^{l-1}).
  static CycNum eps_pow(int l, long k) {
    CycNum r(l);
    long e = k % l;
    if (e < 0) e += l;
    r.c_.assign(static_cast<size_t>(e) + 1, Rat(0));
    r.c_.back() = Rat(1);
    r.reduce();
    return r;
  }
  static CycNum eps(int l) { return eps_pow(l, 1); }

  int order() const { return l_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  /// The constant coefficient (the value itself when is_rational()).
  Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

  CycNum operator-() const {
    CycNum r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    a.match(b);
    CycNum r(a.l_);
    r.c_ = cycdetail::add(a.c_, b.c_);
    return r;
  }
  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }
  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    a.match(b);
    CycNum r(a.l_);
    r.c_ = cycdetail::mul(a.c_, b.c_);
    r.reduce();
    return r;
  }
  friend CycNum operator*(const Rat& c, const CycNum& a) {
    CycNum r(a);
    r.c_ = cycdetail::scale(r.c_, c);
    return r;
  }

  /// Multiplicative inverse via extended Euclid against Φ_l.
  CycNum inverse() const {
    if (is_zero()) throw division_error("CycNum: inversion of zero");
    auto [g, st] = cycdetail::ext_euclid(c_, cycdetail::cyclotomic_poly(l_));
    // Φ_l is irreducible over ℚ, so the gcd with a nonzero residue is 1.
    if (g.size() != 1)
      throw division_error("CycNum: residue shares a factor with the modulus");
    CycNum r(l_);
    r.c_ = cycdetail::scale(st.first, Rat(1) / g[0]);
    r.reduce();
    return r;
  }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    a.match(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::string render() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t j = c_.size(); j-- > 0;) {
      if (c_[j] == 0) continue;
      Rat v = c_[j];
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      Rat av = abs(v);
      std::string mon =
          j == 0 ? "" : (j == 1 ? "ε" : "ε^" + std::to_string(j));
      if (mon.empty() || av != 1) {
        out += av.get_str();
        if (!mon.empty()) out += "*";
      }
      out += mon;
    }
    return out;
  }

 private:
  void match(const CycNum& o) const {
    if (l_ != o.l_) throw context_error("CycNum: mixed cyclotomic orders");
  }
  void reduce() {
    cycdetail::trim(c_);
    auto phi = cycdetail::cyclotomic_poly(l_);
    if (c_.size() >= phi.size()) c_ = cycdetail::divmod(c_, phi).second;
  }

  int l_;
  cycdetail::Poly c_;
};

/// A formal linear expression q_ħ ħ + sum_m q_m c_m with coefficients in
/// ℚ(ε_l): the shape of the shift parameters in the Cherednik dictionary.
struct ZForm {
  int l;
  CycNum hbar;                  // coefficient of ħ
  std::vector<CycNum> c;        // c[m-1] = coefficient of c_m, m = 1..l-1

  explicit ZForm(int order)
      : l(order), hbar(CycNum::zero(order)),
        c(static_cast<size_t>(order > 0 ? order - 1 : 0), CycNum::zero(order)) {}

  bool is_zero() const {
    if (!hbar.is_zero()) return false;
    for (const auto& q : c)
      if (!q.is_zero()) return false;
    return true;
  }
  friend bool operator==(const ZForm& x, const ZForm& y) {
    return x.l == y.l && x.hbar == y.hbar && x.c == y.c;
  }
  friend bool operator!=(const ZForm& x, const ZForm& y) { return !(x == y); }

  std::string render() const {
    std::string out = "(" + hbar.render() + ")*ħ";
    for (size_t m = 0; m < c.size(); ++m)
      out += " + (" + c[m].render() + ")*c_" + std::to_string(m + 1);
    return out;
  }
};

/// Which displayed form of the dictionary to use: the quotient of root-of-unity
/// differences, or the expanded geometric sum.
enum class ZVariant { theorem, proposition };

/// The shift parameter z_k as a linear expression in ħ and c_1..c_{l-1}:
/// z_k = -(1/l) [ (l-k) ħ + sum_m (1-ε^{mk})/(1-ε^m) c_m ], the sum written
/// as 1 + ε^m + ... + ε^{(k-1)m} in the proposition variant.
inline ZForm z_from_c(int l, int k, ZVariant variant) {
  if (l < 1) throw domain_error("z_from_c: order must be >= 1");
  if (k < 1 || k > l) throw domain_error("z_from_c: index out of range");
  ZForm z(l);
  Rat neg_inv_l = rat(-1, l);
  z.hbar = CycNum::from_rat(l, neg_inv_l * Rat(l - k));
  for (int m = 1; m <= l - 1; ++m) {
    CycNum coef = CycNum::zero(l);
    if (variant == ZVariant::theorem) {
      CycNum one = CycNum::one(l);
      CycNum num = one - CycNum::eps_pow(l, static_cast<long>(m) * k);
      CycNum den = one - CycNum::eps_pow(l, m);
      coef = num * den.inverse();
    } else {
      for (int j = 0; j <= k - 1; ++j)
        coef = coef + CycNum::eps_pow(l, static_cast<long>(m) * j);
    }
    z.c[static_cast<size_t>(m) - 1] = neg_inv_l * coef;
  }
  return z;
}

}  // namespace shiftop

#endif  // SHIFTOP_CYCLOTOMIC_HPP
