#pragma once

#include "cma/jet.h"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cma
{

enum class BinaryOp
{
  Add,
  Sub,
  Mul,
  Div
};

enum class Function
{
  Sin,
  Cos,
  Exp,
  Ln,
  Sqrt
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode
{
  struct Number
  {
    double value;
  };
  struct Variable
  {
    std::size_t index;
  };
  struct Negate
  {
    NodePtr operand;
  };
  struct Binary
  {
    BinaryOp op;
    NodePtr lhs, rhs;
  };
  struct Power
  {
    NodePtr base;
    int exponent;
  };
  struct Call
  {
    Function fn;
    NodePtr arg;
  };

  std::variant<Number, Variable, Negate, Binary, Power, Call> data;
};

/// Immutable expression tree over a declared list of variables.
///
/// Grammar (left-associative, `^` binds tightest, integer exponents only):
///
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := base ("^" integer)?
///   base   := number | ident | ident "(" expr ")" | "(" expr ")" | "-" base
///
/// Recognised functions are sin, cos, exp, ln and sqrt. The Unicode minus
/// sign U+2212 is accepted wherever "-" is.
class Expr
{
public:
  static Expr parse(std::string_view text, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return *_variables; }
  const ExprNode& root() const { return *_root; }

  /// Throws InputError on arity mismatch, DomainError outside a function's
  /// domain or on a non-finite result.
  double eval(std::span<const double> point) const;
  double eval(std::initializer_list<double> point) const
  {
    return eval(std::span<const double>(point.begin(), point.size()));
  }

  /// Truncated Taylor expansion of order `order` at `base`.
  Jet eval_jet(std::span<const double> base, int order) const;
  Jet eval_jet(std::initializer_list<double> base, int order) const
  {
    return eval_jet(std::span<const double>(base.begin(), base.size()), order);
  }

  /// Canonical text form; parse(print()) yields a structurally equal tree.
  std::string print() const;

  /// Structural (AST) equality, including the variable list.
  bool operator==(const Expr& other) const;

private:
  Expr(NodePtr root, std::shared_ptr<const std::vector<std::string>> vars)
      : _root(std::move(root)), _variables(std::move(vars))
  {
  }

  NodePtr _root;
  std::shared_ptr<const std::vector<std::string>> _variables;
};

std::string_view function_name(Function fn);

} // namespace cma
