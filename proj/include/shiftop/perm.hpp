#ifndef SHIFTOP_PERM_HPP
#define SHIFTOP_PERM_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "shiftop/context.hpp"

namespace shiftop {

/// Permutation of {1..n}. The API is 1-based; composition acts right to
/// left: (s*t)(i) = s(t(i)).
class Perm {
 public:
  explicit Perm(int n) : img_(static_cast<size_t>(n)) {
    if (n < 1) throw domain_error("Perm: n must be >= 1");
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Perm identity(int n) { return Perm(n); }

  /// Adjacent transposition (i, i+1), 1 <= i < n.
  static Perm simple(int n, int i) {
    if (i < 1 || i >= n) throw domain_error("Perm::simple: index out of range");
    Perm s(n);
    std::swap(s.img_[static_cast<size_t>(i - 1)], s.img_[static_cast<size_t>(i)]);
    return s;
  }

  static Perm transposition(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw domain_error("Perm::transposition: bad indices");
    Perm s(n);
    std::swap(s.img_[static_cast<size_t>(i - 1)], s.img_[static_cast<size_t>(j - 1)]);
    return s;
  }

  /// The long cycle i -> i+1 (indices mod n, so n -> 1).
  static Perm cycle(int n) {
    Perm s(n);
    for (int i = 0; i < n; ++i) s.img_[static_cast<size_t>(i)] = (i + 1) % n;
    return s;
  }

  static Perm from_images(const std::vector<int>& one_based) {
    int n = static_cast<int>(one_based.size());
    Perm s(n);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      int v = one_based[static_cast<size_t>(i)];
      if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
        throw domain_error("Perm::from_images: not a permutation");
      seen[static_cast<size_t>(v - 1)] = true;
      s.img_[static_cast<size_t>(i)] = v - 1;
    }
    return s;
  }

  int n() const { return static_cast<int>(img_.size()); }

  int operator()(int i) const {
    if (i < 1 || i > n()) throw domain_error("Perm: point out of range");
    return img_[static_cast<size_t>(i - 1)] + 1;
  }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm r(n());
    for (int i = 0; i < n(); ++i) r.img_[img_[static_cast<size_t>(i)]] = i;
    return r;
  }

  friend Perm operator*(const Perm& s, const Perm& t) {
    if (s.n() != t.n()) throw domain_error("Perm: size mismatch");
    Perm r(s.n());
    for (int i = 0; i < s.n(); ++i)
      r.img_[static_cast<size_t>(i)] = s.img_[t.img_[static_cast<size_t>(i)]];
    return r;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /// 1-based image table (i -> table[i-1]).
  std::vector<int> images1() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
    return v;
  }

  /// Action on an n-tuple: (s.lam)_{s(i)} = lam_i.
  std::vector<int> act_tuple(const std::vector<int>& lam) const {
    if (lam.size() != img_.size()) throw domain_error("Perm: tuple size mismatch");
    std::vector<int> r(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) r[img_[i]] = lam[i];
    return r;
  }

  static std::vector<Perm> all(int n) {
    if (n > 8) throw domain_error("Perm::all: group too large");
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do {
      out.push_back(from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  /// Cycle notation, e.g. "(1 2 3)(4 5)"; identity renders as "e".
  std::string render() const {
    std::ostringstream out;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (int i = 0; i < n(); ++i) {
      if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) continue;
      any = true;
      out << "(";
      int j = i;
      bool first = true;
      while (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        if (!first) out << " ";
        first = false;
        out << (j + 1);
        j = img_[static_cast<size_t>(j)];
      }
      out << ")";
    }
    return any ? out.str() : "e";
  }

 private:
  std::vector<int> img_;  // 0-based image table
};

}  // namespace shiftop

#endif  // SHIFTOP_PERM_HPP
