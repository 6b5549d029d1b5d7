#include "wcdim/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "wcdim/errors.hpp"

namespace wcdim {

struct Expression::Node {
  enum class Op {
    constant,
    variable,
    neg,
    add,
    sub,
    mul,
    div,
    pow,
    abs,
    min,
    max,
    sqrt,
    sin,
    cos,
    exp,
    log,
  };

  Op op;
  double value = 0.0;
  int var = -1;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : text_(text), variables_(variables) {}

  NodePtr run() {
    NodePtr root = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("expression: " + what, 1, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      if (consume('+')) {
        lhs = make(Node::Op::add, lhs, parse_product());
      } else if (consume('-')) {
        lhs = make(Node::Op::sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (consume('*')) {
        lhs = make(Node::Op::mul, lhs, parse_unary());
      } else if (consume('/')) {
        lhs = make(Node::Op::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (consume('-')) return make(Node::Op::neg, parse_unary());
    return parse_power();
  }

  // '^' binds tighter than unary minus and associates to the right.
  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (consume('^')) return make(Node::Op::pow, base, parse_unary());
    return base;
  }

  NodePtr parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    skip_space();
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    auto n = std::make_shared<Node>();
    n->op = Node::Op::constant;
    n->value = v;
    return n;
  }

  NodePtr parse_identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));

    if (peek() == '(') return parse_call(name);

    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i] == name) {
        auto n = std::make_shared<Node>();
        n->op = Node::Op::variable;
        n->var = static_cast<int>(i);
        return n;
      }
    }
    throw UnboundVariable("unbound identifier '" + name + "'");
  }

  NodePtr parse_call(const std::string& name) {
    struct Fn {
      const char* name;
      Node::Op op;
      int arity;
    };
    static constexpr Fn fns[] = {
        {"abs", Node::Op::abs, 1},  {"min", Node::Op::min, 2},
        {"max", Node::Op::max, 2},  {"sqrt", Node::Op::sqrt, 1},
        {"sin", Node::Op::sin, 1},  {"cos", Node::Op::cos, 1},
        {"exp", Node::Op::exp, 1},  {"log", Node::Op::log, 1},
    };

    const Fn* fn = nullptr;
    for (const Fn& f : fns) {
      if (name == f.name) fn = &f;
    }
    if (fn == nullptr) fail("unknown function '" + name + "'");

    if (!consume('(')) fail("expected '(' after function name");
    NodePtr a = parse_sum();
    NodePtr b;
    if (fn->arity == 2) {
      if (!consume(',')) fail("function '" + name + "' takes two arguments");
      b = parse_sum();
    }
    if (!consume(')')) fail("expected ')'");
    return make(fn->op, std::move(a), std::move(b));
  }

  std::string_view text_;
  std::span<const std::string> variables_;
  std::size_t pos_ = 0;
};

double eval_node(const Node& n, std::span<const double> values) {
  auto check = [](double v, const char* what) {
    if (!std::isfinite(v)) throw ExpressionDomainError(what);
    return v;
  };

  switch (n.op) {
    case Node::Op::constant:
      return n.value;
    case Node::Op::variable:
      if (n.var < 0 || static_cast<std::size_t>(n.var) >= values.size())
        throw UnboundVariable("variable index out of range");
      return values[static_cast<std::size_t>(n.var)];
    case Node::Op::neg:
      return -eval_node(*n.a, values);
    case Node::Op::add:
      return check(eval_node(*n.a, values) + eval_node(*n.b, values), "overflow in '+'");
    case Node::Op::sub:
      return check(eval_node(*n.a, values) - eval_node(*n.b, values), "overflow in '-'");
    case Node::Op::mul:
      return check(eval_node(*n.a, values) * eval_node(*n.b, values), "overflow in '*'");
    case Node::Op::div: {
      double d = eval_node(*n.b, values);
      if (d == 0.0) throw ExpressionDomainError("division by zero");
      return check(eval_node(*n.a, values) / d, "overflow in '/'");
    }
    case Node::Op::pow:
      return check(std::pow(eval_node(*n.a, values), eval_node(*n.b, values)),
                   "pow outside real domain");
    case Node::Op::abs:
      return std::abs(eval_node(*n.a, values));
    case Node::Op::min:
      return std::min(eval_node(*n.a, values), eval_node(*n.b, values));
    case Node::Op::max:
      return std::max(eval_node(*n.a, values), eval_node(*n.b, values));
    case Node::Op::sqrt: {
      double v = eval_node(*n.a, values);
      if (v < 0.0) throw ExpressionDomainError("sqrt of negative value");
      return std::sqrt(v);
    }
    case Node::Op::sin:
      return std::sin(eval_node(*n.a, values));
    case Node::Op::cos:
      return std::cos(eval_node(*n.a, values));
    case Node::Op::exp:
      return check(std::exp(eval_node(*n.a, values)), "overflow in exp");
    case Node::Op::log: {
      double v = eval_node(*n.a, values);
      if (v <= 0.0) throw ExpressionDomainError("log of non-positive value");
      return std::log(v);
    }
  }
  throw ExpressionDomainError("corrupt expression node");
}

}  // namespace

Expression Expression::parse(std::string_view text,
                             std::span<const std::string> variables) {
  Expression e;
  e.text_ = std::string(text);
  e.variables_.assign(variables.begin(), variables.end());
  e.root_ = Parser(text, variables).run();
  return e;
}

double Expression::eval(std::span<const double> values) const {
  if (values.size() != variables_.size())
    throw UnboundVariable("expected " + std::to_string(variables_.size()) +
                          " bound values, got " + std::to_string(values.size()));
  return eval_node(*root_, values);
}

}  // namespace wcdim
