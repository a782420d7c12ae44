#include "bosonhopf/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "bosonhopf/relations.hpp"
#include "bosonhopf/scalars.hpp"
#include "bosonhopf/tensor.hpp"

namespace bosonhopf {

namespace {

std::string format_pos(SourcePos p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

}  // namespace

ParseError::ParseError(SourcePos pos, const std::string& what, std::vector<std::string> expected)
    : std::runtime_error(format_pos(pos) + ": " + what + (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      pos_(pos),
      expected_(std::move(expected)) {}

const std::vector<std::string>& atom_names() {
  static const std::vector<std::string> names = {"a", "ad", "N", "K", "b", "bd", "M", "g", "ginv", "I"};
  return names;
}

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = {"alpha", "beta", "sigma", "tau", "delta", "nu", "rho", "q"};
  return names;
}

const std::map<std::string, int>& builtin_arities() {
  static const std::map<std::string, int> arities = {{"comm", 2},    {"acomm", 2},     {"tensor", 2},
                                                     {"qbracket", 2}, {"phase", 1},     {"qpow", 2},
                                                     {"coproduct", 1}, {"antipode", 1}};
  return arities;
}

bool equal(const Expr& x, const Expr& y) {
  if (x.kind != y.kind || x.name != y.name || x.exponent != y.exponent || x.args.size() != y.args.size()) return false;
  if (x.kind == Expr::Kind::number && x.number != y.number) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!equal(*x.args[i], *y.args[i])) return false;
  return true;
}

namespace {

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

struct Token {
  enum class Kind { number, ident, punct, end };
  Kind kind = Kind::end;
  std::string text;
  double value = 0;
  SourcePos pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      const char* begin = s.c_str() + i;
      char* end = nullptr;
      t.value = std::strtod(begin, &end);
      t.kind = Token::Kind::number;
      t.text.assign(begin, static_cast<std::size_t>(end - begin));
      advance(static_cast<std::size_t>(end - begin));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::Kind::ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::string("()+-*/^,=").find(c) != std::string::npos) {
      t.kind = Token::Kind::punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back(t);
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ExprPtr expression() {
    ExprPtr lhs = term();
    while (is("+") || is("-")) {
      const Token op = take();
      lhs = binary(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, lhs, term(), op.pos);
    }
    return lhs;
  }

  bool is(const std::string& p) const { return peek().kind == Token::Kind::punct && peek().text == p; }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  void expect(const std::string& p, std::vector<std::string> expected) {
    if (!is(p)) throw ParseError(peek().pos, "unexpected " + describe(peek()), std::move(expected));
    take();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::end: return "end of input";
      case Token::Kind::number: return "number '" + t.text + "'";
      default: return "'" + t.text + "'";
    }
  }

 private:
  static ExprPtr binary(Expr::Kind k, ExprPtr x, ExprPtr y, SourcePos pos) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = {std::move(x), std::move(y)};
    e->pos = pos;
    return e;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is("*") || is("/")) {
      const Token op = take();
      lhs = binary(op.text == "*" ? Expr::Kind::mul : Expr::Kind::div, lhs, unary(), op.pos);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is("-")) {
      const Token op = take();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::neg;
      e->args = {unary()};
      e->pos = op.pos;
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!is("^")) return base;
    const Token op = take();
    if (is("-")) throw ParseError(peek().pos, "negative exponent; powers take integers k >= 0");
    const Token k = take();
    if (k.kind != Token::Kind::number) throw ParseError(k.pos, "unexpected " + describe(k), {"integer exponent"});
    if (k.value != std::floor(k.value) || k.value > 1e6)
      throw ParseError(k.pos, "fractional exponent '" + k.text + "'; powers take integers k >= 0");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::pow;
    e->exponent = static_cast<int>(k.value);
    e->args = {base};
    e->pos = op.pos;
    return e;
  }

  ExprPtr primary() {
    const Token t = take();
    auto e = std::make_shared<Expr>();
    e->pos = t.pos;
    if (t.kind == Token::Kind::number) {
      e->kind = Expr::Kind::number;
      e->number = t.value;
      return e;
    }
    if (t.kind == Token::Kind::punct && t.text == "(") {
      ExprPtr inner = expression();
      expect(")", {"')'", "operator"});
      return inner;
    }
    if (t.kind == Token::Kind::ident) {
      if (is("(")) {
        const auto& ar = builtin_arities();
        auto it = ar.find(t.text);
        if (it == ar.end()) throw ParseError(t.pos, "unknown function '" + t.text + "'");
        take();
        e->kind = Expr::Kind::call;
        e->name = t.text;
        for (int i = 0; i < it->second; ++i) {
          if (i > 0) expect(",", {"','"});
          e->args.push_back(expression());
        }
        if (is(",")) throw ParseError(peek().pos, t.text + " takes " + std::to_string(it->second) + " argument(s)");
        expect(")", {"')'"});
        return e;
      }
      e->name = t.text;
      if (contains(atom_names(), t.text)) {
        e->kind = Expr::Kind::atom;
      } else if (contains(param_names(), t.text)) {
        e->kind = Expr::Kind::param;
      } else {
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
      }
      return e;
    }
    throw ParseError(t.pos, "unexpected " + describe(t), {"number", "identifier", "'('", "'-'"});
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.expression();
  if (!p.at_end()) throw ParseError(p.peek().pos, "unexpected " + Parser::describe(p.peek()), {"operator", "end of input"});
  return e;
}

std::pair<ExprPtr, ExprPtr> parse_identity(const std::string& text) {
  Parser p(text);
  ExprPtr lhs = p.expression();
  ExprPtr rhs;
  if (p.is("=")) {
    p.take();
    rhs = p.expression();
  } else {
    auto zero = std::make_shared<Expr>();
    rhs = zero;
  }
  if (!p.at_end()) throw ParseError(p.peek().pos, "unexpected " + Parser::describe(p.peek()), {"operator", "'='", "end of input"});
  return {lhs, rhs};
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", e.number);
      return buf;
    }
    case Expr::Kind::param:
    case Expr::Kind::atom: return e.name;
    case Expr::Kind::add: return "(" + print(*e.args[0]) + " + " + print(*e.args[1]) + ")";
    case Expr::Kind::sub: return "(" + print(*e.args[0]) + " - " + print(*e.args[1]) + ")";
    case Expr::Kind::mul: return "(" + print(*e.args[0]) + " * " + print(*e.args[1]) + ")";
    case Expr::Kind::div: return "(" + print(*e.args[0]) + " / " + print(*e.args[1]) + ")";
    case Expr::Kind::neg: return "(-" + print(*e.args[0]) + ")";
    case Expr::Kind::pow: return "(" + print(*e.args[0]) + "^" + std::to_string(e.exponent) + ")";
    case Expr::Kind::call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print(*e.args[i]);
      return out + ")";
    }
  }
  return "?";
}

namespace {

class ExprSampler {
 public:
  explicit ExprSampler(std::mt19937_64& rng) : rng_(rng) {}

  ExprPtr op(int depth) {
    if (depth <= 0 || pick(4) == 0) return leaf(Expr::Kind::atom, atom_names());
    switch (pick(8)) {
      case 0: return node(Expr::Kind::add, {op(depth - 1), op(depth - 1)});
      case 1: return node(Expr::Kind::sub, {op(depth - 1), op(depth - 1)});
      case 2: return node(Expr::Kind::mul, {pick(2) ? scalar(depth - 1) : op(depth - 1), op(depth - 1)});
      case 3: return node(Expr::Kind::neg, {op(depth - 1)});
      case 4: {
        auto e = node(Expr::Kind::pow, {op(depth - 1)});
        std::const_pointer_cast<Expr>(e)->exponent = pick(4);
        return e;
      }
      case 5: return call(pick(2) ? "comm" : "acomm", {op(depth - 1), op(depth - 1)});
      case 6: {
        static const std::vector<std::string> diag = {"qbracket", "phase", "qpow"};
        const std::string f = diag[pick(3)];
        if (f == "phase") return call(f, {op(depth - 1)});
        if (f == "qpow") return call(f, {scalar(depth - 1), op(depth - 1)});
        return call(f, {op(depth - 1), scalar(depth - 1)});
      }
      default: {
        static const std::vector<std::string> maps = {"tensor", "coproduct", "antipode"};
        const std::string f = maps[pick(3)];
        if (f == "tensor") return call(f, {op(depth - 1), op(depth - 1)});
        return call(f, {op(depth - 1)});
      }
    }
  }

  ExprPtr scalar(int depth) {
    if (depth <= 0 || pick(3) == 0) {
      if (pick(2)) return leaf(Expr::Kind::param, param_names());
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->number = pick(2) ? static_cast<double>(pick(20)) : std::uniform_real_distribution<double>(0.0, 10.0)(rng_);
      return e;
    }
    switch (pick(5)) {
      case 0: return node(Expr::Kind::add, {scalar(depth - 1), scalar(depth - 1)});
      case 1: return node(Expr::Kind::mul, {scalar(depth - 1), scalar(depth - 1)});
      case 2: return node(Expr::Kind::div, {scalar(depth - 1), scalar(depth - 1)});
      case 3: return node(Expr::Kind::neg, {scalar(depth - 1)});
      default: return call("qbracket", {scalar(depth - 1), scalar(depth - 1)});
    }
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  ExprPtr leaf(Expr::Kind k, const std::vector<std::string>& names) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->name = names[static_cast<std::size_t>(pick(static_cast<int>(names.size())))];
    return e;
  }

  static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
  }

  static ExprPtr call(const std::string& name, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::call;
    e->name = name;
    e->args = std::move(args);
    return e;
  }

  std::mt19937_64& rng_;
};

}  // namespace

ExprPtr random_expr(std::mt19937_64& rng, int max_depth) { return ExprSampler(rng).op(max_depth); }

EvalContext EvalContext::of(const FockRep& rep, const HopfTables* tables) {
  EvalContext ctx;
  ctx.rep = &rep;
  ctx.tables = tables;
  ctx.params = rep.spec().parameters();
  return ctx;
}

namespace {

enum class Mode { normal, coproduct, antipode };

struct Evaluator {
  const EvalContext& ctx;
  Mode mode = Mode::normal;

  int dim() const { return ctx.rep->dim(); }

  [[noreturn]] static void fail(const Expr& e, const std::string& what) {
    throw EvalError(format_pos(e.pos) + ": " + what);
  }

  Matrix identity(int sites) const {
    Index n = 1;
    for (int i = 0; i < sites; ++i) n *= dim();
    return Matrix::Identity(n, n);
  }

  static Value scalar(Complex c) { return {c, 0}; }
  static Value op(Matrix m, int sites) { return {std::move(m), sites}; }

  Matrix as_matrix(const Value& v, int sites) const {
    return v.is_scalar() ? Matrix(v.scalar() * identity(sites)) : v.matrix();
  }

  double real_of(const Expr& e, Complex c, const char* what) const {
    if (std::abs(c.imag()) > 1e-12 * std::max(1.0, std::abs(c.real())))
      fail(e, std::string(what) + " must be real, got imaginary part " + std::to_string(c.imag()));
    return c.real();
  }

  std::optional<Generator> generator_of(const std::string& name) const {
    const Family f = ctx.rep->family();
    const bool h = f == Family::H;
    if (name == "g") return Generator::grade;
    if (name == "ginv") return Generator::grade_inv;
    if (h) {
      if (name == "b") return Generator::lower;
      if (name == "bd") return Generator::raise;
      if (name == "M") return Generator::number;
      if (name == "K") return Generator::k_op;
    } else {
      if (name == "a") return Generator::lower;
      if (name == "ad") return Generator::raise;
      if (name == "N") return Generator::number;
    }
    return std::nullopt;
  }

  Value atom(const Expr& e) const {
    const int sites = mode == Mode::coproduct ? 2 : 1;
    if (e.name == "I") return op(identity(sites), sites);
    const auto g = generator_of(e.name);
    if (!g) fail(e, "atom '" + e.name + "' is not a generator of family " + to_string(ctx.rep->family()));
    if (mode == Mode::normal) {
      const FockRep& r = *ctx.rep;
      switch (*g) {
        case Generator::lower: return op(r.lowering(), 1);
        case Generator::raise: return op(r.raising(), 1);
        case Generator::number: return op(r.number(), 1);
        case Generator::grade: return op(r.grade_plus(), 1);
        case Generator::grade_inv: return op(r.grade_minus(), 1);
        case Generator::k_op: return op(r.k_op(), 1);
      }
    }
    if (!ctx.tables->has(*g)) fail(e, "family " + to_string(ctx.rep->family()) + " has no Hopf structure on '" + e.name + "'");
    if (mode == Mode::coproduct) return op(ctx.tables->delta(*g), 2);
    return op(ctx.tables->antipode(*g), 1);
  }

  Value mul(const Expr& e, const Value& x, const Value& y) const {
    if (x.is_scalar() && y.is_scalar()) return scalar(x.scalar() * y.scalar());
    if (x.is_scalar()) return op(x.scalar() * y.matrix(), y.sites);
    if (y.is_scalar()) return op(y.scalar() * x.matrix(), x.sites);
    if (x.sites != y.sites) fail(e, "product mixes " + std::to_string(x.sites) + "-site and " + std::to_string(y.sites) + "-site operators");
    return op(mode == Mode::antipode ? Matrix(y.matrix() * x.matrix()) : Matrix(x.matrix() * y.matrix()), x.sites);
  }

  Value add(const Expr& e, const Value& x, const Value& y, double sign) const {
    if (x.is_scalar() && y.is_scalar()) return scalar(x.scalar() + sign * y.scalar());
    const int sites = x.is_scalar() ? y.sites : x.sites;
    if (!x.is_scalar() && !y.is_scalar() && x.sites != y.sites)
      fail(e, "sum mixes " + std::to_string(x.sites) + "-site and " + std::to_string(y.sites) + "-site operators");
    return op(as_matrix(x, sites) + sign * as_matrix(y, sites), sites);
  }

  template <class F>
  Value diagonal_map(const Expr& e, const Value& x, F&& f, const char* name) const {
    if (x.is_scalar()) return scalar(f(real_of(e, x.scalar(), name)));
    const Matrix& m = x.matrix();
    if (!is_diagonal(m, 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())))
      fail(e, std::string(name) + " applies to diagonal operators only");
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) out(i, i) = f(real_of(e, m(i, i), name));
    return op(std::move(out), x.sites);
  }

  Value call(const Expr& e) {
    const std::string& f = e.name;
    if (f == "coproduct" || f == "antipode") {
      if (!ctx.tables) fail(e, f + " needs Hopf tables in the evaluation context");
      if (mode != Mode::normal) fail(e, f + " cannot be nested inside coproduct or antipode");
      const Mode saved = mode;
      mode = f == "coproduct" ? Mode::coproduct : Mode::antipode;
      Value v = eval(*e.args[0]);
      mode = saved;
      return v;
    }
    if (f == "tensor") {
      if (mode == Mode::coproduct) fail(e, "tensor cannot appear inside coproduct");
      const Value x = eval(*e.args[0]);
      const Value y = eval(*e.args[1]);
      if (x.sites != 1 || y.sites != 1) fail(e, "tensor takes two single-site operators");
      return op(kron(x.matrix(), y.matrix()), 2);
    }
    if (f == "comm" || f == "acomm") {
      const Value x = eval(*e.args[0]);
      const Value y = eval(*e.args[1]);
      return add(e, mul(e, x, y), mul(e, y, x), f == "comm" ? -1.0 : 1.0);
    }
    if (f == "qbracket") {
      const Value x = eval(*e.args[0]);
      const Value qv = eval(*e.args[1]);
      if (!qv.is_scalar()) fail(e, "the base of qbracket must be a scalar");
      const double qd = real_of(e, qv.scalar(), "q");
      if (!QValue::valid(qd)) fail(e, "qbracket needs q > 0 and q != 1");
      const QValue q(qd);
      return diagonal_map(e, x, [&](double t) { return Complex(q_bracket(t, q)); }, "qbracket");
    }
    if (f == "phase") {
      const Value x = eval(*e.args[0]);
      return diagonal_map(e, x, [](double t) { return phase_pow(t); }, "phase");
    }
    if (f == "qpow") {
      const Value base = eval(*e.args[0]);
      const Value x = eval(*e.args[1]);
      if (!base.is_scalar()) fail(e, "the base of qpow must be a scalar");
      const double b = real_of(e, base.scalar(), "qpow base");
      if (!(b > 0)) fail(e, "qpow needs a positive base");
      return diagonal_map(e, x, [b](double t) { return Complex(std::pow(b, t)); }, "qpow");
    }
    fail(e, "unknown function '" + f + "'");
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::number: return scalar(e.number);
      case Expr::Kind::param: {
        auto it = ctx.params.find(e.name);
        if (it == ctx.params.end()) fail(e, "unbound parameter '" + e.name + "' for family " + to_string(ctx.rep->family()));
        return scalar(it->second);
      }
      case Expr::Kind::atom: return atom(e);
      case Expr::Kind::add: return add(e, eval(*e.args[0]), eval(*e.args[1]), 1.0);
      case Expr::Kind::sub: return add(e, eval(*e.args[0]), eval(*e.args[1]), -1.0);
      case Expr::Kind::mul: return mul(e, eval(*e.args[0]), eval(*e.args[1]));
      case Expr::Kind::div: {
        const Value x = eval(*e.args[0]);
        const Value y = eval(*e.args[1]);
        if (!y.is_scalar()) fail(e, "division by an operator");
        if (y.scalar() == Complex(0.0, 0.0)) fail(e, "division by zero");
        return x.is_scalar() ? scalar(x.scalar() / y.scalar()) : op(x.matrix() / y.scalar(), x.sites);
      }
      case Expr::Kind::neg: {
        const Value x = eval(*e.args[0]);
        return x.is_scalar() ? scalar(-x.scalar()) : op(-x.matrix(), x.sites);
      }
      case Expr::Kind::pow: {
        const Value x = eval(*e.args[0]);
        if (x.is_scalar()) return scalar(std::pow(x.scalar(), e.exponent));
        Matrix out = identity(x.sites);
        for (int k = 0; k < e.exponent; ++k) out = out * x.matrix();
        return op(std::move(out), x.sites);
      }
      case Expr::Kind::call: return call(e);
    }
    fail(e, "malformed expression");
  }
};

}  // namespace

Value evaluate_value(const Expr& e, const EvalContext& ctx) {
  if (!ctx.rep) throw EvalError("evaluation context has no representation");
  Evaluator ev{ctx};
  return ev.eval(e);
}

TensorOperator evaluate(const Expr& e, const EvalContext& ctx) {
  const Value v = evaluate_value(e, ctx);
  const int d = ctx.rep->dim();
  if (v.is_scalar()) return TensorOperator(1, d, v.scalar() * Matrix::Identity(d, d));
  return TensorOperator(v.sites, d, v.matrix());
}

CheckReport check_identity(const std::string& text, const EvalContext& ctx, int degree, double tol) {
  const auto [lhs_e, rhs_e] = parse_identity(text);
  const Value lv = evaluate_value(*lhs_e, ctx);
  const Value rv = evaluate_value(*rhs_e, ctx);
  if (!lv.is_scalar() && !rv.is_scalar() && lv.sites != rv.sites)
    throw EvalError("identity sides act on " + std::to_string(lv.sites) + " and " + std::to_string(rv.sites) + " sites");
  const int sites = std::max({1, lv.sites, rv.sites});
  const int d = ctx.rep->dim();
  Index n = 1;
  for (int i = 0; i < sites; ++i) n *= d;
  auto as_matrix = [&](const Value& v) { return v.is_scalar() ? Matrix(v.scalar() * Matrix::Identity(n, n)) : v.matrix(); };
  const TensorWindow w = TensorWindow::per_slot(d, sites, degree);
  CheckReport r = make_report("expr.identity", ctx.rep->spec(), d, w, residual(as_matrix(lv), as_matrix(rv), w).scaled, tol);
  r.subject = text;
  return r;
}

}  // namespace bosonhopf
