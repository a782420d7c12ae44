#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/hopf.hpp"
#include "bosonhopf/linalg.hpp"
#include "bosonhopf/report.hpp"

namespace bosonhopf {

inline constexpr int kGrammarVersion = 1;

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& what, std::vector<std::string> expected = {});
  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, param, atom, add, sub, mul, div, neg, pow, call };
  Kind kind = Kind::number;
  double number = 0;  // number literal
  std::string name;   // param, atom or builtin name
  int exponent = 0;   // pow
  std::vector<ExprPtr> args;
  SourcePos pos;
};

// Structural equality, positions ignored.
bool equal(const Expr& x, const Expr& y);

const std::vector<std::string>& atom_names();
const std::vector<std::string>& param_names();
// name -> arity
const std::map<std::string, int>& builtin_arities();

ExprPtr parse(const std::string& text);
// "lhs = rhs"; a bare expression is read as "expr = 0".
std::pair<ExprPtr, ExprPtr> parse_identity(const std::string& text);

// Fully parenthesized; numbers printed with 17 significant digits.
std::string print(const Expr& e);

ExprPtr random_expr(std::mt19937_64& rng, int max_depth);

struct EvalContext {
  const FockRep* rep = nullptr;
  const HopfTables* tables = nullptr;  // needed for coproduct and antipode
  std::map<std::string, double> params;  // defaults to rep->spec().parameters()

  static EvalContext of(const FockRep& rep, const HopfTables* tables = nullptr);
};

struct Value {
  std::variant<Complex, Matrix> data;
  int sites = 0;  // 0 for scalars

  bool is_scalar() const { return sites == 0; }
  const Complex& scalar() const { return std::get<Complex>(data); }
  const Matrix& matrix() const { return std::get<Matrix>(data); }
};

Value evaluate_value(const Expr& e, const EvalContext& ctx);
// Scalars are promoted to multiples of the single-site identity.
TensorOperator evaluate(const Expr& e, const EvalContext& ctx);

// Evaluates "lhs = rhs" and reports the scaled residual in the per-slot window of
// the given degree, one or two sites as the operands require.
CheckReport check_identity(const std::string& text, const EvalContext& ctx, int degree, double tol);

}  // namespace bosonhopf
