#include "cma/expr.h"
#include "cma/error.h"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace cma
{
namespace
{

struct FunctionEntry
{
  std::string_view name;
  Function fn;
};

constexpr FunctionEntry kFunctions[] = {{"sin", Function::Sin},
                                        {"cos", Function::Cos},
                                        {"exp", Function::Exp},
                                        {"ln", Function::Ln},
                                        {"sqrt", Function::Sqrt}};

NodePtr make(ExprNode::Number n) { return std::make_shared<ExprNode>(ExprNode{n}); }
NodePtr make(ExprNode::Variable n) { return std::make_shared<ExprNode>(ExprNode{n}); }
NodePtr make(ExprNode::Negate n) { return std::make_shared<ExprNode>(ExprNode{std::move(n)}); }
NodePtr make(ExprNode::Binary n) { return std::make_shared<ExprNode>(ExprNode{std::move(n)}); }
NodePtr make(ExprNode::Power n) { return std::make_shared<ExprNode>(ExprNode{std::move(n)}); }
NodePtr make(ExprNode::Call n) { return std::make_shared<ExprNode>(ExprNode{std::move(n)}); }

bool is_ident_start(char c)
{
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c)
{
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser
{
public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : _text(text), _vars(vars)
  {
  }

  NodePtr parse_all()
  {
    skip_ws();
    if (_pos == _text.size())
      throw ParseError("empty expression", _pos);
    NodePtr e = parse_expr();
    skip_ws();
    if (_pos != _text.size())
      throw ParseError("unexpected trailing input", _pos);
    return e;
  }

private:
  void skip_ws()
  {
    while (_pos < _text.size()
           && (_text[_pos] == ' ' || _text[_pos] == '\t'
               || _text[_pos] == '\n' || _text[_pos] == '\r'))
      ++_pos;
  }

  // Returns the byte length of a minus sign at the cursor (ASCII or U+2212),
  // or 0.
  std::size_t minus_len() const
  {
    if (_pos < _text.size() && _text[_pos] == '-')
      return 1;
    if (_text.substr(_pos, 3) == "\xE2\x88\x92")
      return 3;
    return 0;
  }

  NodePtr parse_expr()
  {
    NodePtr lhs = parse_term();
    for (;;)
    {
      skip_ws();
      BinaryOp op;
      std::size_t len = 0;
      if (_pos < _text.size() && _text[_pos] == '+')
      {
        op = BinaryOp::Add;
        len = 1;
      }
      else if ((len = minus_len()) != 0)
        op = BinaryOp::Sub;
      else
        return lhs;
      _pos += len;
      NodePtr rhs = parse_term();
      lhs = make(ExprNode::Binary{op, lhs, rhs});
    }
  }

  NodePtr parse_term()
  {
    NodePtr lhs = parse_factor();
    for (;;)
    {
      skip_ws();
      if (_pos >= _text.size())
        return lhs;
      const char c = _text[_pos];
      if (c != '*' && c != '/')
        return lhs;
      ++_pos;
      NodePtr rhs = parse_factor();
      lhs = make(ExprNode::Binary{c == '*' ? BinaryOp::Mul : BinaryOp::Div,
                                  lhs, rhs});
    }
  }

  NodePtr parse_factor()
  {
    NodePtr base = parse_base();
    skip_ws();
    if (_pos < _text.size() && _text[_pos] == '^')
    {
      ++_pos;
      skip_ws();
      const std::size_t start = _pos;
      bool negative = false;
      if (std::size_t len = minus_len())
      {
        negative = true;
        _pos += len;
      }
      const std::size_t digits = _pos;
      while (_pos < _text.size() && is_digit(_text[_pos]))
        ++_pos;
      if (_pos == digits)
        throw ParseError("exponent must be an integer literal", start);
      if (_pos < _text.size()
          && (_text[_pos] == '.' || _text[_pos] == 'e' || _text[_pos] == 'E'))
        throw ParseError("non-integer exponent", start);
      int value = 0;
      auto [ptr, ec] = std::from_chars(_text.data() + digits,
                                       _text.data() + _pos, value);
      if (ec != std::errc())
        throw ParseError("exponent out of range", start);
      base = make(ExprNode::Power{base, negative ? -value : value});
    }
    return base;
  }

  NodePtr parse_base()
  {
    skip_ws();
    if (_pos >= _text.size())
      throw ParseError("unexpected end of input", _pos);
    if (std::size_t len = minus_len())
    {
      _pos += len;
      return make(ExprNode::Negate{parse_base()});
    }
    const char c = _text[_pos];
    if (c == '(')
    {
      ++_pos;
      NodePtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.')
      return parse_number();
    if (is_ident_start(c))
      return parse_identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", _pos);
  }

  NodePtr parse_number()
  {
    const std::size_t start = _pos;
    while (_pos < _text.size() && is_digit(_text[_pos]))
      ++_pos;
    if (_pos < _text.size() && _text[_pos] == '.')
    {
      ++_pos;
      while (_pos < _text.size() && is_digit(_text[_pos]))
        ++_pos;
    }
    if (_pos < _text.size() && (_text[_pos] == 'e' || _text[_pos] == 'E'))
    {
      std::size_t p = _pos + 1;
      if (p < _text.size() && (_text[p] == '+' || _text[p] == '-'))
        ++p;
      if (p < _text.size() && is_digit(_text[p]))
      {
        _pos = p;
        while (_pos < _text.size() && is_digit(_text[_pos]))
          ++_pos;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(_text.data() + start, _text.data() + _pos,
                                     value);
    if (ec != std::errc() || ptr != _text.data() + _pos)
      throw ParseError("malformed number", start);
    return make(ExprNode::Number{value});
  }

  NodePtr parse_identifier()
  {
    const std::size_t start = _pos;
    while (_pos < _text.size() && is_ident_char(_text[_pos]))
      ++_pos;
    const std::string_view name = _text.substr(start, _pos - start);
    skip_ws();
    if (_pos < _text.size() && _text[_pos] == '(')
    {
      for (const auto& entry : kFunctions)
      {
        if (entry.name == name)
        {
          ++_pos;
          NodePtr arg = parse_expr();
          expect(')');
          return make(ExprNode::Call{entry.fn, arg});
        }
      }
      throw ParseError("unknown function '" + std::string(name) + "'", start);
    }
    for (std::size_t i = 0; i < _vars.size(); ++i)
      if (_vars[i] == name)
        return make(ExprNode::Variable{i});
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  void expect(char c)
  {
    skip_ws();
    if (_pos >= _text.size() || _text[_pos] != c)
      throw ParseError(std::string("expected '") + c + "'", _pos);
    ++_pos;
  }

  std::string_view _text;
  const std::vector<std::string>& _vars;
  std::size_t _pos = 0;
};

double checked(double v, const char* what)
{
  if (!std::isfinite(v))
    throw DomainError(std::string("non-finite result in ") + what);
  return v;
}

double eval_node(const ExprNode& node, std::span<const double> point)
{
  return std::visit(
      [&](const auto& n) -> double
      {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ExprNode::Number>)
          return n.value;
        else if constexpr (std::is_same_v<T, ExprNode::Variable>)
          return point[n.index];
        else if constexpr (std::is_same_v<T, ExprNode::Negate>)
          return -eval_node(*n.operand, point);
        else if constexpr (std::is_same_v<T, ExprNode::Binary>)
        {
          const double a = eval_node(*n.lhs, point);
          const double b = eval_node(*n.rhs, point);
          switch (n.op)
          {
          case BinaryOp::Add:
            return checked(a + b, "addition");
          case BinaryOp::Sub:
            return checked(a - b, "subtraction");
          case BinaryOp::Mul:
            return checked(a * b, "multiplication");
          case BinaryOp::Div:
            if (b == 0.0)
              throw DomainError("division by zero");
            return checked(a / b, "division");
          }
          return 0.0;
        }
        else if constexpr (std::is_same_v<T, ExprNode::Power>)
          return checked(ipow(eval_node(*n.base, point), n.exponent), "power");
        else
        {
          const double x = eval_node(*n.arg, point);
          switch (n.fn)
          {
          case Function::Sin:
            return std::sin(x);
          case Function::Cos:
            return std::cos(x);
          case Function::Exp:
            return checked(std::exp(x), "exp");
          case Function::Ln:
            if (!(x > 0.0))
              throw DomainError("ln of nonpositive argument");
            return std::log(x);
          case Function::Sqrt:
            if (x < 0.0)
              throw DomainError("sqrt of negative argument");
            return std::sqrt(x);
          }
          return 0.0;
        }
      },
      node.data);
}

void require_finite_jet(const Jet& j, const char* what)
{
  for (double c : j.coefficients())
    if (!std::isfinite(c))
      throw DomainError(std::string("non-finite jet coefficient in ") + what);
}

Jet jet_node(const ExprNode& node, const std::shared_ptr<const JetLayout>& layout,
             const std::vector<double>& base)
{
  return std::visit(
      [&](const auto& n) -> Jet
      {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ExprNode::Number>)
          return Jet::constant(layout, base, n.value);
        else if constexpr (std::is_same_v<T, ExprNode::Variable>)
          return Jet::variable(layout, base, static_cast<int>(n.index));
        else if constexpr (std::is_same_v<T, ExprNode::Negate>)
          return -jet_node(*n.operand, layout, base);
        else if constexpr (std::is_same_v<T, ExprNode::Binary>)
        {
          Jet a = jet_node(*n.lhs, layout, base);
          Jet b = jet_node(*n.rhs, layout, base);
          Jet r = [&]
          {
            switch (n.op)
            {
            case BinaryOp::Add:
              return a + b;
            case BinaryOp::Sub:
              return a - b;
            case BinaryOp::Mul:
              return a * b;
            case BinaryOp::Div:
              return a / b;
            }
            return a;
          }();
          require_finite_jet(r, "binary operation");
          return r;
        }
        else if constexpr (std::is_same_v<T, ExprNode::Power>)
        {
          Jet r = pow(jet_node(*n.base, layout, base), n.exponent);
          require_finite_jet(r, "power");
          return r;
        }
        else
        {
          const Jet a = jet_node(*n.arg, layout, base);
          switch (n.fn)
          {
          case Function::Sin:
            return sin(a);
          case Function::Cos:
            return cos(a);
          case Function::Exp:
            return exp(a);
          case Function::Ln:
            return log(a);
          case Function::Sqrt:
            return sqrt(a);
          }
          return a;
        }
      },
      node.data);
}

// Precedence levels used by the printer: 1 additive, 2 multiplicative,
// 3 power, 4 atomic (number, variable, call, negation).
int precedence(const ExprNode& node)
{
  if (const auto* b = std::get_if<ExprNode::Binary>(&node.data))
    return (b->op == BinaryOp::Add || b->op == BinaryOp::Sub) ? 1 : 2;
  if (std::holds_alternative<ExprNode::Power>(node.data))
    return 3;
  return 4;
}

void print_node(const ExprNode& node, const std::vector<std::string>& vars,
                std::string& out);

void print_wrapped(const ExprNode& node, bool parens,
                   const std::vector<std::string>& vars, std::string& out)
{
  if (parens)
    out += '(';
  print_node(node, vars, out);
  if (parens)
    out += ')';
}

void print_node(const ExprNode& node, const std::vector<std::string>& vars,
                std::string& out)
{
  std::visit(
      [&](const auto& n)
      {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ExprNode::Number>)
        {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", n.value);
          out += buf;
        }
        else if constexpr (std::is_same_v<T, ExprNode::Variable>)
          out += vars[n.index];
        else if constexpr (std::is_same_v<T, ExprNode::Negate>)
        {
          out += '-';
          print_wrapped(*n.operand, precedence(*n.operand) < 4, vars, out);
        }
        else if constexpr (std::is_same_v<T, ExprNode::Binary>)
        {
          const int p = precedence(node);
          print_wrapped(*n.lhs, precedence(*n.lhs) < p, vars, out);
          switch (n.op)
          {
          case BinaryOp::Add:
            out += " + ";
            break;
          case BinaryOp::Sub:
            out += " - ";
            break;
          case BinaryOp::Mul:
            out += '*';
            break;
          case BinaryOp::Div:
            out += '/';
            break;
          }
          print_wrapped(*n.rhs, precedence(*n.rhs) <= p, vars, out);
        }
        else if constexpr (std::is_same_v<T, ExprNode::Power>)
        {
          print_wrapped(*n.base, precedence(*n.base) < 4, vars, out);
          out += '^';
          out += std::to_string(n.exponent);
        }
        else
        {
          out += function_name(n.fn);
          out += '(';
          print_node(*n.arg, vars, out);
          out += ')';
        }
      },
      node.data);
}

bool equal_nodes(const ExprNode& a, const ExprNode& b)
{
  if (a.data.index() != b.data.index())
    return false;
  return std::visit(
      [&](const auto& x) -> bool
      {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.data);
        if constexpr (std::is_same_v<T, ExprNode::Number>)
          return x.value == y.value;
        else if constexpr (std::is_same_v<T, ExprNode::Variable>)
          return x.index == y.index;
        else if constexpr (std::is_same_v<T, ExprNode::Negate>)
          return equal_nodes(*x.operand, *y.operand);
        else if constexpr (std::is_same_v<T, ExprNode::Binary>)
          return x.op == y.op && equal_nodes(*x.lhs, *y.lhs)
                 && equal_nodes(*x.rhs, *y.rhs);
        else if constexpr (std::is_same_v<T, ExprNode::Power>)
          return x.exponent == y.exponent && equal_nodes(*x.base, *y.base);
        else
          return x.fn == y.fn && equal_nodes(*x.arg, *y.arg);
      },
      a.data);
}

} // namespace

std::string_view function_name(Function fn)
{
  for (const auto& entry : kFunctions)
    if (entry.fn == fn)
      return entry.name;
  return "?";
}

Expr Expr::parse(std::string_view text, std::vector<std::string> variables)
{
  for (const auto& v : variables)
  {
    if (v.empty() || !is_ident_start(v[0]))
      throw InputError("invalid variable name '" + v + "'");
    for (char c : v)
      if (!is_ident_char(c))
        throw InputError("invalid variable name '" + v + "'");
  }
  Parser parser(text, variables);
  NodePtr root = parser.parse_all();
  return Expr(std::move(root),
              std::make_shared<const std::vector<std::string>>(
                  std::move(variables)));
}

double Expr::eval(std::span<const double> point) const
{
  if (point.size() != _variables->size())
    throw InputError("evaluation point has " + std::to_string(point.size())
                     + " coordinates, expected "
                     + std::to_string(_variables->size()));
  return eval_node(*_root, point);
}

Jet Expr::eval_jet(std::span<const double> base, int order) const
{
  if (base.size() != _variables->size())
    throw InputError("jet base point has wrong dimension");
  if (order < 0)
    throw InputError("jet order must be nonnegative");
  if (_variables->empty())
  {
    // Constant expression: expand in a single dummy variable.
    auto layout = std::make_shared<const JetLayout>(1, order);
    return jet_node(*_root, layout, {0.0});
  }
  auto layout = std::make_shared<const JetLayout>(
      static_cast<int>(_variables->size()), order);
  return jet_node(*_root, layout, std::vector<double>(base.begin(), base.end()));
}

std::string Expr::print() const
{
  std::string out;
  print_node(*_root, *_variables, out);
  return out;
}

bool Expr::operator==(const Expr& other) const
{
  return *_variables == *other._variables && equal_nodes(*_root, *other._root);
}

} // namespace cma
