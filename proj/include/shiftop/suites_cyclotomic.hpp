#ifndef SHIFTOP_SUITES_CYCLOTOMIC_HPP
#define SHIFTOP_SUITES_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shiftop/check.hpp"
#include "shiftop/cyclotomic.hpp"

namespace shiftop {

namespace detail {

/// Deterministic pseudo-random element of ℚ(ε_l) with small integer entries.
class CycRng {
 public:
  explicit CycRng(uint64_t seed) : state_(seed) {}
  int small_int() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state_ >> 33) % 19) - 9;  // in [-9, 9]
  }
  CycNum element(int l) {
    CycNum v = CycNum::zero(l);
    for (int j = 0; j < l; ++j)
      v = v + Rat(small_int()) * CycNum::eps_pow(l, j);
    return v;
  }
  /// A nonzero element (retries until one comes up).
  CycNum unit(int l) {
    for (;;) {
      CycNum v = element(l);
      if (!v.is_zero()) return v;
    }
  }

 private:
  uint64_t state_;
};

inline std::optional<std::string> cyc_residual(const CycNum& v) {
  if (v.is_zero()) return std::nullopt;
  return v.render();
}

inline std::optional<std::string> zform_residual(const ZForm& x, const ZForm& y) {
  if (x == y) return std::nullopt;
  return x.render() + "  !=  " + y.render();
}

}  // namespace detail

/// Arithmetic in the cyclotomic fields ℚ(ε_l) and the dictionary sending the
/// reflection-algebra parameters c_m to the shift parameters z_k.
inline void suite_cyclotomic(Checker& c, const SuiteParams&) {
  using detail::CycRng;
  using detail::cyc_residual;
  using detail::zform_residual;

  // The minimal polynomials multiply back to x^n - 1.
  for (int n = 1; n <= 12; ++n) {
    c.add("cyclotomic/phi-product-" + std::to_string(n),
          "product over d | n of Phi_d(x) = x^n - 1",
          [n]() -> std::optional<std::string> {
            cycdetail::Poly prod{Rat(1)};
            for (int d = 1; d <= n; ++d)
              if (n % d == 0)
                prod = cycdetail::mul(prod, cycdetail::cyclotomic_poly(d));
            cycdetail::Poly want(static_cast<size_t>(n) + 1, Rat(0));
            want[0] = Rat(-1);
            want[static_cast<size_t>(n)] = Rat(1);
            if (prod == want) return std::nullopt;
            return "degree " + std::to_string(prod.size()) + " product mismatch";
          });
  }

  for (int l = 1; l <= 8; ++l) {
    // ε is a root of its minimal polynomial, and an l-th root of unity.
    c.add("cyclotomic/minpoly-" + std::to_string(l),
          "Phi_l(ε) = 0 and ε^l = 1 at l = " + std::to_string(l),
          [l]() -> std::optional<std::string> {
            auto phi = cycdetail::cyclotomic_poly(l);
            CycNum v = CycNum::zero(l);
            for (size_t j = 0; j < phi.size(); ++j)
              v = v + phi[j] * CycNum::eps_pow(l, static_cast<long>(j));
            if (!v.is_zero()) return "Phi_l(ε) = " + v.render();
            CycNum root = CycNum::eps_pow(l, l);
            if (root != CycNum::one(l)) return "ε^l = " + root.render();
            return std::nullopt;
          });

    if (l >= 2) {
      c.add("cyclotomic/unit-root-sum-" + std::to_string(l),
            "1 + ε + ... + ε^{l-1} = 0 at l = " + std::to_string(l),
            [l]() -> std::optional<std::string> {
              CycNum v = CycNum::zero(l);
              for (int j = 0; j < l; ++j) v = v + CycNum::eps_pow(l, j);
              return cyc_residual(v);
            });
    }

    // Field axioms on deterministic pseudo-random elements.
    c.add("cyclotomic/field-" + std::to_string(l),
          "field axioms in ℚ(ε_l) on pseudo-random elements, l = " +
              std::to_string(l),
          [l]() -> std::optional<std::string> {
            CycRng rng(0x5eed0000ULL + static_cast<uint64_t>(l));
            for (int trial = 0; trial < 6; ++trial) {
              CycNum a = rng.element(l), b = rng.element(l), d = rng.element(l);
              if (a + b != b + a) return "addition not commutative";
              if (a * b != b * a) return "multiplication not commutative";
              if ((a + b) + d != a + (b + d)) return "addition not associative";
              if ((a * b) * d != a * (b * d))
                return "multiplication not associative";
              if (a * (b + d) != a * b + a * d) return "not distributive";
              if (a - a != CycNum::zero(l)) return "additive inverse fails";
              CycNum u = rng.unit(l);
              if (u * u.inverse() != CycNum::one(l))
                return "inverse fails for " + u.render();
              if ((a / u) * u != a) return "division fails";
            }
            return std::nullopt;
          });
  }

  // (1 - ε^{mk}) / (1 - ε^m) is the geometric sum 1 + ε^m + ... + ε^{(k-1)m}.
  for (int l = 2; l <= 6; ++l) {
    c.add("cyclotomic/geosum-" + std::to_string(l),
          "(1 - ε^{mk})/(1 - ε^m) = sum of ε^{jm}, j < k, at l = " +
              std::to_string(l),
          [l]() -> std::optional<std::string> {
            CycNum one = CycNum::one(l);
            for (int m = 1; m <= l - 1; ++m) {
              CycNum den = one - CycNum::eps_pow(l, m);
              for (int k = 1; k <= l; ++k) {
                CycNum quot =
                    (one - CycNum::eps_pow(l, static_cast<long>(m) * k)) *
                    den.inverse();
                CycNum sum = CycNum::zero(l);
                for (int j = 0; j <= k - 1; ++j)
                  sum = sum + CycNum::eps_pow(l, static_cast<long>(m) * j);
                if (quot != sum)
                  return "m = " + std::to_string(m) + ", k = " +
                         std::to_string(k) + ": " + (quot - sum).render();
              }
            }
            return std::nullopt;
          });
  }

  // The two displayed forms of the dictionary agree coefficient by coefficient.
  for (int l = 1; l <= 6; ++l) {
    c.add("cyclotomic/variant-" + std::to_string(l),
          "quotient and geometric-sum forms of z_k agree, l = " +
              std::to_string(l),
          [l]() -> std::optional<std::string> {
            for (int k = 1; k <= l; ++k) {
              ZForm a = z_from_c(l, k, ZVariant::theorem);
              ZForm b = z_from_c(l, k, ZVariant::proposition);
              if (auto r = zform_residual(a, b))
                return "k = " + std::to_string(k) + ": " + *r;
            }
            return std::nullopt;
          });

    c.add("cyclotomic/zl-zero-" + std::to_string(l),
          "z_l = 0 identically, l = " + std::to_string(l),
          [l]() -> std::optional<std::string> {
            for (ZVariant v : {ZVariant::theorem, ZVariant::proposition}) {
              ZForm z = z_from_c(l, l, v);
              if (!z.is_zero()) return z.render();
            }
            return std::nullopt;
          });
  }

  c.add_cond("cyclotomic/degenerate", "l = 1 has no c parameters and z_1 = 0",
             [] {
               ZForm z = z_from_c(1, 1, ZVariant::theorem);
               return z.c.empty() && z.is_zero();
             });

  c.add_cond("cyclotomic/index-range", "z_k rejects k outside 1..l",
             [] {
               for (int k : {0, 4, -1}) {
                 try {
                   z_from_c(3, k, ZVariant::theorem);
                   return false;
                 } catch (const domain_error&) {
                 }
               }
               return true;
             });
}

}  // namespace shiftop

#endif  // SHIFTOP_SUITES_CYCLOTOMIC_HPP
