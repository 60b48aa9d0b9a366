#ifndef SHIFTOP_BERNOULLI_HPP
#define SHIFTOP_BERNOULLI_HPP

#include <vector>

#include "shiftop/poly.hpp"

namespace shiftop {

/// Binomial coefficient C(n, k) as an exact rational.
inline Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int q = 1; q <= k; ++q) r *= rat(n - q + 1, q);
  return r;
}

/// Bernoulli numbers B_0, B_1, ... with B_1 = -1/2, via the defining
/// recurrence sum_{j<n} C(n, j) B_j = 0 for n >= 2.
inline const std::vector<Rat>& bernoulli_numbers(int upto) {
  static std::vector<Rat> cache{Rat(1)};
  while (static_cast<int>(cache.size()) <= upto) {
    int n = static_cast<int>(cache.size());
    // 0 = sum_{j=0}^{n} C(n+1, j) B_j  =>  solve for B_n.
    Rat s(0);
    for (int j = 0; j < n; ++j) s += binomial(n + 1, j) * cache[static_cast<size_t>(j)];
    cache.push_back(-s / binomial(n + 1, n));
  }
  return cache;
}

inline Rat bernoulli_number(int n) {
  if (n < 0) throw domain_error("bernoulli_number: negative index");
  return bernoulli_numbers(n)[static_cast<size_t>(n)];
}

/// Coefficients of the Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k},
/// indexed by the power of x.
inline std::vector<Rat> bernoulli_coeffs(int n) {
  if (n < 0) throw domain_error("bernoulli_coeffs: negative index");
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  for (int k = 0; k <= n; ++k)
    c[static_cast<size_t>(n - k)] = binomial(n, k) * bernoulli_number(k);
  return c;
}

/// B_n evaluated at a polynomial argument.
inline MultiPoly bernoulli_poly(int n, const MultiPoly& arg) {
  auto c = bernoulli_coeffs(n);
  MultiPoly r = MultiPoly::zero(arg.ctx());
  MultiPoly p = MultiPoly::one(arg.ctx());
  for (int d = 0; d <= n; ++d) {
    r += c[static_cast<size_t>(d)] * p;
    if (d < n) p *= arg;
  }
  return r;
}

/// The rescaled Bernoulli value
///   bbar(n, P) = (-ħ)^n B_n(-P/ħ) / n = (1/n) sum_k C(n,k) B_k (-ħ)^k P^{n-k},
/// a polynomial in P and ħ. Satisfies bbar(n, P - ħ) - bbar(n, P) = -ħ P^{n-1}.
inline MultiPoly bbar(int n, const MultiPoly& P) {
  if (n < 1) throw domain_error("bbar: index must be positive");
  const CtxPtr& ctx = P.ctx();
  MultiPoly mh = -MultiPoly::h(ctx);
  MultiPoly r = MultiPoly::zero(ctx);
  MultiPoly hpow = MultiPoly::one(ctx);  // (-ħ)^k
  for (int k = 0; k <= n; ++k) {
    r += (binomial(n, k) * bernoulli_number(k) / Rat(n)) *
         (hpow * P.pow(n - k));
    hpow *= mh;
  }
  return r;
}

}  // namespace shiftop

#endif  // SHIFTOP_BERNOULLI_HPP
