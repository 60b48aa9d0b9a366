#ifndef SHIFTOP_CONTEXT_HPP
#define SHIFTOP_CONTEXT_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftop {

/// Exact rational scalar.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Mixing values bound to different symbol contexts.
struct context_error : error {
  using error::error;
};
/// An exact division left a nonzero remainder.
struct division_error : error {
  using error::error;
};
/// Invalid index, undefined operation, or absent leading term.
struct domain_error : error {
  using error::error;
};

class Context;
using CtxPtr = std::shared_ptr<const Context>;

/// Fixed symbol table for N difference variables w_1..w_N and the parameters
/// ħ, t, z_1..z_l, a, ω. The w-block comes first so that graded-lex order
/// (and hence rendering and monic normalization) ranks w_1 > w_2 > ... above
/// every parameter.
class Context {
 public:
  Context(int N, int l) : N_(N), l_(l) {
    if (N < 1) throw domain_error("Context: N must be >= 1");
    if (l < 0) throw domain_error("Context: l must be >= 0");
    for (int i = 1; i <= N; ++i) names_.push_back("w_" + std::to_string(i));
    names_.push_back("ħ");
    names_.push_back("t");
    for (int k = 1; k <= l; ++k) names_.push_back("z_" + std::to_string(k));
    names_.push_back("a");
    names_.push_back("ω");
  }

  static CtxPtr make(int N, int l) { return std::make_shared<const Context>(N, l); }

  int N() const { return N_; }
  int l() const { return l_; }
  int nsym() const { return static_cast<int>(names_.size()); }

  /// 1-based difference variable w_i.
  int w(int i) const {
    if (i < 1 || i > N_) throw domain_error("Context: w index out of range");
    return i - 1;
  }
  int h() const { return N_; }
  int t() const { return N_ + 1; }
  /// 1-based deformation parameter z_k.
  int z(int k) const {
    if (k < 1 || k > l_) throw domain_error("Context: z index out of range");
    return N_ + 1 + k;
  }
  int a() const { return N_ + l_ + 2; }
  int omega() const { return N_ + l_ + 3; }

  bool is_w(int s) const { return s >= 0 && s < N_; }
  /// 1-based w position of a symbol, or 0 if it is not a w symbol.
  int w_pos(int s) const { return is_w(s) ? s + 1 : 0; }

  const std::string& name(int s) const {
    if (s < 0 || s >= nsym()) throw domain_error("Context: symbol out of range");
    return names_[static_cast<size_t>(s)];
  }

  friend bool operator==(const Context& x, const Context& y) {
    return x.N_ == y.N_ && x.l_ == y.l_;
  }

 private:
  int N_;
  int l_;
  std::vector<std::string> names_;
};

inline void require_same(const CtxPtr& x, const CtxPtr& y) {
  if (!x || !y) throw context_error("value is not bound to a context");
  if (!(*x == *y)) throw context_error("values belong to different contexts");
}

}  // namespace shiftop

#endif  // SHIFTOP_CONTEXT_HPP
