#ifndef SHIFTOP_DSL_HPP
#define SHIFTOP_DSL_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shiftop/bernoulli.hpp"
#include "shiftop/ops.hpp"
#include "shiftop/yangian.hpp"

namespace shiftop {

/// Syntax diagnostic with a 1-based source position.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line, int col)
      : error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax tree of the operator expression language. Nodes are
/// immutable and compared structurally.
struct Expr {
  enum class Kind {
    literal,   // nonnegative rational constant
    param,     // h, t, a, om (canonical spellings)
    zparam,    // z[k]
    atom,      // indexed or bare named generator
    slotop,    // E[n; f] or F[n; f] with a polynomial argument
    bern,      // B[n; arg]
    neg,       // -A
    sum,       // A + B
    diff,      // A - B
    prod,      // A * B
    comm,      // comm(A, B)
    res,       // Res(A)
    apply_to,  // apply(A; p)
  };

  Kind kind;
  Rat lit{0};
  std::string name;      // param or atom name; "E"/"F" for slotop
  std::vector<int> idx;  // atom indices, slot count, z index, B degree
  ExprPtr a, b;

  static ExprPtr literal_of(const Rat& c) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::literal;
    e->lit = c;
    return e;
  }
  static ExprPtr node(Kind k, ExprPtr x = nullptr, ExprPtr y = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
  }
  static ExprPtr named(Kind k, std::string nm, std::vector<int> indices = {},
                       ExprPtr child = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->name = std::move(nm);
    e->idx = std::move(indices);
    e->a = std::move(child);
    return e;
  }
};

inline bool equal(const ExprPtr& x, const ExprPtr& y) {
  if (!x || !y) return !x && !y;
  return x->kind == y->kind && x->lit == y->lit && x->name == y->name &&
         x->idx == y->idx && equal(x->a, y->a) && equal(x->b, y->b);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace dsldetail {

struct Token {
  enum class Type { number, name, punct, end };
  Type type;
  std::string text;
  int line;
  int col;
};

inline bool name_char(unsigned char ch) {
  return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_' ||
         (ch >= '0' && ch <= '9') || ch >= 0x80;  // UTF-8 continuation bytes
}
inline bool name_start(unsigned char ch) {
  return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_' ||
         ch >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
            s_[pos_] == '\r')) {
      step();
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.type = Token::Type::end;
      tok_.text = "<end of input>";
      return;
    }
    unsigned char ch = static_cast<unsigned char>(s_[pos_]);
    if (ch >= '0' && ch <= '9') {
      tok_.type = Token::Type::number;
      tok_.text.clear();
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
        tok_.text += s_[pos_];
        step();
      }
      return;
    }
    if (name_start(ch)) {
      tok_.type = Token::Type::name;
      tok_.text.clear();
      while (pos_ < s_.size() &&
             name_char(static_cast<unsigned char>(s_[pos_]))) {
        tok_.text += s_[pos_];
        step();
      }
      return;
    }
    tok_.type = Token::Type::punct;
    tok_.text = std::string(1, s_[pos_]);
    step();
  }

  void step() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(s_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count code points, not continuation bytes
    }
    ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::end)
      throw parse_error("unexpected '" + t.text + "'", t.line, t.col);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw parse_error(msg, t.line, t.col);
  }
  void expect_punct(const std::string& p) {
    const Token& t = lex_.peek();
    if (t.type != Token::Type::punct || t.text != p)
      fail("expected '" + p + "', found '" + t.text + "'", t);
    lex_.take();
  }
  bool at_punct(const std::string& p) {
    const Token& t = lex_.peek();
    return t.type == Token::Type::punct && t.text == p;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at_punct("+") || at_punct("-")) {
      bool plus = at_punct("+");
      lex_.take();
      e = Expr::node(plus ? Expr::Kind::sum : Expr::Kind::diff, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (at_punct("*")) {
      lex_.take();
      e = Expr::node(Expr::Kind::prod, e, factor());
    }
    return e;
  }

  ExprPtr factor() {
    if (at_punct("-")) {
      lex_.take();
      return Expr::node(Expr::Kind::neg, factor());
    }
    return primary();
  }

  int integer() {
    const Token& t = lex_.peek();
    if (t.type != Token::Type::number)
      fail("expected an integer index, found '" + t.text + "'", t);
    Token n = lex_.take();
    if (n.text.size() > 6) fail("index literal too large", n);
    return std::stoi(n.text);
  }

  ExprPtr primary() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::number) {
      Token n = lex_.take();
      Rat v(n.text);
      if (at_punct("/")) {
        lex_.take();
        const Token& d = lex_.peek();
        if (d.type != Token::Type::number)
          fail("expected a denominator, found '" + d.text + "'", d);
        Token dd = lex_.take();
        if (dd.text.find_first_not_of('0') == std::string::npos)
          fail("zero denominator", dd);
        v = rat_str(n.text, dd.text);
      }
      return Expr::literal_of(v);
    }
    if (at_punct("(")) {
      lex_.take();
      ExprPtr e = expr();
      expect_punct(")");
      return e;
    }
    if (t.type != Token::Type::name)
      fail("expected an expression, found '" + t.text + "'", t);
    Token nm = lex_.take();
    return named(nm);
  }

  static Rat rat_str(const std::string& num, const std::string& den) {
    Rat v(num + "/" + den);
    v.canonicalize();
    return v;
  }

  ExprPtr named(const Token& nm) {
    const std::string& s = nm.text;
    if (s == "comm") {
      expect_punct("(");
      ExprPtr x = expr();
      expect_punct(",");
      ExprPtr y = expr();
      expect_punct(")");
      return Expr::node(Expr::Kind::comm, x, y);
    }
    if (s == "Res") {
      expect_punct("(");
      ExprPtr x = expr();
      expect_punct(")");
      return Expr::node(Expr::Kind::res, x);
    }
    if (s == "apply") {
      expect_punct("(");
      ExprPtr x = expr();
      expect_punct(";");
      ExprPtr y = expr();
      expect_punct(")");
      return Expr::node(Expr::Kind::apply_to, x, y);
    }
    if (s == "h" || s == "hbar" || s == "ħ")  // ħ
      return Expr::named(Expr::Kind::param, "h");
    if (s == "t") return Expr::named(Expr::Kind::param, "t");
    if (s == "a") return Expr::named(Expr::Kind::param, "a");
    if (s == "om" || s == "omega" || s == "ω")  // ω
      return Expr::named(Expr::Kind::param, "om");
    if (s == "pi" || s == "piinv")
      return Expr::named(Expr::Kind::atom, s);
    if (s == "z") {
      expect_bracket(nm);
      int k = integer();
      expect_punct("]");
      return Expr::named(Expr::Kind::zparam, "z", {k});
    }
    if (s == "E" || s == "F") {
      expect_bracket(nm);
      int n = integer();
      expect_punct(";");
      ExprPtr f = expr();
      expect_punct("]");
      return Expr::named(Expr::Kind::slotop, s, {n}, std::move(f));
    }
    if (s == "B") {
      expect_bracket(nm);
      int n = integer();
      expect_punct(";");
      ExprPtr arg = expr();
      expect_punct("]");
      return Expr::named(Expr::Kind::bern, s, {n}, std::move(arg));
    }
    if (s == "s") {
      expect_bracket(nm);
      std::vector<int> ix{integer()};
      if (at_punct(",")) {
        lex_.take();
        ix.push_back(integer());
      }
      expect_punct("]");
      return Expr::named(Expr::Kind::atom, "s", std::move(ix));
    }
    if (s == "X" || s == "Xinv" || s == "Y" || s == "y" || s == "w" ||
        s == "u" || s == "uinv" || s == "D0" || s == "e" || s == "f" ||
        s == "p") {
      expect_bracket(nm);
      int i = integer();
      expect_punct("]");
      return Expr::named(Expr::Kind::atom, s, {i});
    }
    fail("unknown atom '" + s + "'", nm);
  }

  void expect_bracket(const Token& nm) {
    const Token& t = lex_.peek();
    if (t.type != Token::Type::punct || t.text != "[")
      fail("atom '" + nm.text + "' needs bracketed arguments", t);
    lex_.take();
  }

  Lexer lex_;
};

}  // namespace dsldetail

inline ExprPtr parse(const std::string& text) {
  return dsldetail::Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Rendering (canonical; parse ∘ render is the identity on ASTs)
// ---------------------------------------------------------------------------

namespace dsldetail {

inline bool is_additive(const ExprPtr& e) {
  return e->kind == Expr::Kind::sum || e->kind == Expr::Kind::diff;
}

inline std::string render_expr(const ExprPtr& e);

inline std::string wrapped(const ExprPtr& e, bool wrap) {
  std::string s = render_expr(e);
  return wrap ? "(" + s + ")" : s;
}

inline std::string render_expr(const ExprPtr& e) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::literal:
      return e->lit.get_str();
    case K::param:
      return e->name;
    case K::zparam:
      return "z[" + std::to_string(e->idx[0]) + "]";
    case K::atom: {
      std::string s = e->name;
      if (!e->idx.empty()) {
        s += "[" + std::to_string(e->idx[0]);
        for (size_t i = 1; i < e->idx.size(); ++i)
          s += "," + std::to_string(e->idx[i]);
        s += "]";
      }
      return s;
    }
    case K::slotop:
    case K::bern:
      return e->name + "[" + std::to_string(e->idx[0]) + "; " +
             render_expr(e->a) + "]";
    case K::neg:
      return "-" + wrapped(e->a, is_additive(e->a) || e->a->kind == K::prod);
    case K::sum:
      return render_expr(e->a) + " + " + wrapped(e->b, is_additive(e->b));
    case K::diff:
      return render_expr(e->a) + " - " + wrapped(e->b, is_additive(e->b));
    case K::prod:
      return wrapped(e->a, is_additive(e->a)) + " * " +
             wrapped(e->b, is_additive(e->b) || e->b->kind == K::prod);
    case K::comm:
      return "comm(" + render_expr(e->a) + ", " + render_expr(e->b) + ")";
    case K::res:
      return "Res(" + render_expr(e->a) + ")";
    case K::apply_to:
      return "apply(" + render_expr(e->a) + "; " + render_expr(e->b) + ")";
  }
  throw error("render: unreachable");
}

}  // namespace dsldetail

inline std::string render(const ExprPtr& e) { return dsldetail::render_expr(e); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// How eval instantiates convention-dependent generators.
struct EvalOptions {
  ShiftConv conv = ShiftConv::barred;  // site-variable convention for D0, e, f
  bool z_zero = false;                 // instantiate all z_k at 0 instead of symbolically
};

/// Result of evaluating an expression: an operator, or a scalar rational
/// function (literals, parameters, and apply results).
using EvalValue = std::variant<DiffOp, RatFunc>;

namespace dsldetail {

inline DiffOp as_op(const EvalValue& v, const CtxPtr&) {
  if (std::holds_alternative<DiffOp>(v)) return std::get<DiffOp>(v);
  return DiffOp::mult(std::get<RatFunc>(v));
}

inline EvalValue add_vals(const EvalValue& x, const EvalValue& y,
                          const CtxPtr& ctx, int sign) {
  if (std::holds_alternative<RatFunc>(x) && std::holds_alternative<RatFunc>(y)) {
    const RatFunc& a = std::get<RatFunc>(x);
    const RatFunc& b = std::get<RatFunc>(y);
    return sign > 0 ? a + b : a - b;
  }
  DiffOp a = as_op(x, ctx), b = as_op(y, ctx);
  return sign > 0 ? a + b : a - b;
}

inline EvalValue mul_vals(const EvalValue& x, const EvalValue& y,
                          const CtxPtr&) {
  if (std::holds_alternative<RatFunc>(x) && std::holds_alternative<RatFunc>(y))
    return std::get<RatFunc>(x) * std::get<RatFunc>(y);
  if (std::holds_alternative<RatFunc>(x))
    return std::get<RatFunc>(x) * std::get<DiffOp>(y);
  if (std::holds_alternative<RatFunc>(y))
    return std::get<DiffOp>(x) * std::get<RatFunc>(y);
  return std::get<DiffOp>(x) * std::get<DiffOp>(y);
}

inline void need_range(const std::string& what, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw domain_error(what + " index " + std::to_string(v) +
                       " outside " + std::to_string(lo) + ".." +
                       std::to_string(hi));
}

inline std::vector<MultiPoly> z_values(const CtxPtr& ctx, const EvalOptions& o) {
  std::vector<MultiPoly> zs;
  for (int k = 1; k <= ctx->l(); ++k)
    zs.push_back(o.z_zero ? MultiPoly::zero(ctx) : MultiPoly::z(ctx, k));
  return zs;
}

/// Evaluate a subtree that must be a polynomial (slot arguments, Bernoulli
/// arguments, apply targets).
inline MultiPoly eval_poly(const ExprPtr& e, const CtxPtr& ctx,
                           const EvalOptions& o) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::literal:
      return MultiPoly::constant(ctx, e->lit);
    case K::param:
      if (e->name == "h") return MultiPoly::h(ctx);
      if (e->name == "t") return MultiPoly::t(ctx);
      if (e->name == "a") return MultiPoly::a(ctx);
      return MultiPoly::omega(ctx);
    case K::zparam:
      need_range("z", e->idx[0], 1, ctx->l());
      return o.z_zero ? MultiPoly::zero(ctx) : MultiPoly::z(ctx, e->idx[0]);
    case K::atom:
      if (e->name == "w") {
        need_range("w", e->idx[0], 1, ctx->N());
        return MultiPoly::w(ctx, e->idx[0]);
      }
      if (e->name == "p") {
        if (e->idx[0] < 1) throw domain_error("p: index must be >= 1");
        return power_sum(ctx, e->idx[0]);
      }
      throw domain_error("atom '" + e->name +
                         "' is not a polynomial in this position");
    case K::bern: {
      if (e->idx[0] < 1) throw domain_error("B: degree must be >= 1");
      return bbar(e->idx[0], eval_poly(e->a, ctx, o));
    }
    case K::neg:
      return -eval_poly(e->a, ctx, o);
    case K::sum:
      return eval_poly(e->a, ctx, o) + eval_poly(e->b, ctx, o);
    case K::diff:
      return eval_poly(e->a, ctx, o) - eval_poly(e->b, ctx, o);
    case K::prod:
      return eval_poly(e->a, ctx, o) * eval_poly(e->b, ctx, o);
    default:
      throw domain_error("expression is not a polynomial in this position");
  }
}

inline DiffOp eval_atom(const ExprPtr& e, const CtxPtr& ctx,
                        const EvalOptions& o) {
  const std::string& s = e->name;
  int N = ctx->N();
  if (s == "pi") return dl_pi(ctx);
  if (s == "piinv") return dl_pi_inv(ctx);
  int i = e->idx[0];
  if (s == "w") {
    need_range("w", i, 1, N);
    return DiffOp::w_mult(ctx, i);
  }
  if (s == "u") {
    need_range("u", i, 1, N);
    return DiffOp::u(ctx, i);
  }
  if (s == "uinv") {
    need_range("uinv", i, 1, N);
    return DiffOp::u_inv(ctx, i);
  }
  if (s == "X") {
    need_range("X", i, 1, N);
    return dl_X(ctx, i);
  }
  if (s == "Xinv") {
    need_range("Xinv", i, 1, N);
    return dl_X_inv(ctx, i);
  }
  if (s == "Y") {
    need_range("Y", i, 1, N);
    if (ctx->l() == 0)
      throw domain_error("Y: needs at least one cyclotomic factor");
    return o.z_zero ? oblomkov_Y(ctx, i, z_values(ctx, o)) : oblomkov_Y(ctx, i);
  }
  if (s == "y") {
    need_range("y", i, 1, N);
    return suzuki_y(ctx, i);
  }
  if (s == "s") {
    if (e->idx.size() == 2) {
      int j = e->idx[1];
      need_range("s", i, 1, N);
      need_range("s", j, 1, N);
      if (i >= j) throw domain_error("s[i,j]: needs i < j");
      return dl_transposition(ctx, i, j);
    }
    need_range("s", i, 0, N - 1);
    return i == 0 ? dl_s0(ctx) : dl_s(ctx, i);
  }
  if (s == "D0") {
    if (i < 1) throw domain_error("D0: index must be >= 1");
    return cartan_op(ctx, o.conv, i);
  }
  if (s == "e") {
    if (i < 0) throw domain_error("e: index must be >= 0");
    return yangian_e(ctx, o.conv, i);
  }
  if (s == "f") {
    if (i < 0) throw domain_error("f: index must be >= 0");
    int l = ctx->l();
    if (l == 0) return yangian_f(ctx, o.conv, i);
    if (i < l)
      throw domain_error("f: index below the shift " + std::to_string(l));
    SymPoly slot = yangian_slot(ctx, o.conv, i - l);
    return o.z_zero ? F_op(slot, ctx, z_values(ctx, o)) : F_op(slot, ctx);
  }
  throw domain_error("unknown atom '" + s + "'");
}

inline EvalValue eval_expr(const ExprPtr& e, const CtxPtr& ctx,
                           const EvalOptions& o) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::literal:
    case K::param:
    case K::zparam:
    case K::bern:
      return RatFunc(eval_poly(e, ctx, o));
    case K::atom:
      if (e->name == "p") {
        if (e->idx[0] < 1) throw domain_error("p: index must be >= 1");
        return RatFunc(power_sum(ctx, e->idx[0]));
      }
      return eval_atom(e, ctx, o);
    case K::slotop: {
      int slots = e->idx[0];
      if (slots < 1 || slots > ctx->N())
        throw domain_error(e->name + ": slot count outside 1..N");
      CtxPtr sc = Context::make(slots, ctx->l());
      SymPoly f(eval_poly(e->a, sc, o));
      if (e->name == "E") return E_op(f, ctx);
      return o.z_zero ? F_op(f, ctx, z_values(ctx, o)) : F_op(f, ctx);
    }
    case K::neg: {
      EvalValue v = eval_expr(e->a, ctx, o);
      if (std::holds_alternative<RatFunc>(v)) return -std::get<RatFunc>(v);
      return std::get<DiffOp>(v).scale(-1);
    }
    case K::sum:
      return add_vals(eval_expr(e->a, ctx, o), eval_expr(e->b, ctx, o), ctx, +1);
    case K::diff:
      return add_vals(eval_expr(e->a, ctx, o), eval_expr(e->b, ctx, o), ctx, -1);
    case K::prod:
      return mul_vals(eval_expr(e->a, ctx, o), eval_expr(e->b, ctx, o), ctx);
    case K::comm:
      return commutator(as_op(eval_expr(e->a, ctx, o), ctx),
                        as_op(eval_expr(e->b, ctx, o), ctx));
    case K::res:
      return as_op(eval_expr(e->a, ctx, o), ctx).res();
    case K::apply_to:
      return as_op(eval_expr(e->a, ctx, o), ctx)
          .apply(eval_poly(e->b, ctx, o));
  }
  throw error("eval: unreachable");
}

}  // namespace dsldetail

inline EvalValue eval(const ExprPtr& e, const CtxPtr& ctx,
                      const EvalOptions& opts = {}) {
  return dsldetail::eval_expr(e, ctx, opts);
}

inline EvalValue eval(const std::string& text, const CtxPtr& ctx,
                      const EvalOptions& opts = {}) {
  return eval(parse(text), ctx, opts);
}

/// Rendered form of an evaluation result.
inline std::string render_value(const EvalValue& v) {
  if (std::holds_alternative<DiffOp>(v)) return std::get<DiffOp>(v).render();
  return std::get<RatFunc>(v).render();
}

/// Evaluate to an operator, promoting scalar results to multiplications.
inline DiffOp eval_operator(const std::string& text, const CtxPtr& ctx,
                            const EvalOptions& opts = {}) {
  return dsldetail::as_op(eval(text, ctx, opts), ctx);
}

/// Evaluate a polynomial-only expression (the target of an application).
inline MultiPoly eval_polynomial(const std::string& text, const CtxPtr& ctx,
                                 const EvalOptions& opts = {}) {
  return dsldetail::eval_poly(parse(text), ctx, opts);
}

}  // namespace shiftop

#endif  // SHIFTOP_DSL_HPP
