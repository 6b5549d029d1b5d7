#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wcdim {

// Arithmetic expression over a fixed set of named variables.
//
// Grammar: + - * / ^ (right-associative), unary minus, parentheses, and the
// functions abs, min, max, sqrt, sin, cos, exp, log. Identifiers must be
// declared variables; anything else is rejected at parse time.
class Expression {
 public:
  // Parses `text` with the given variable names. Throws SyntaxError (column
  // is the 1-based offset into `text`) or UnboundVariable.
  static Expression parse(std::string_view text,
                          std::span<const std::string> variables);

  // Evaluates with values[i] bound to variables()[i]. Throws
  // ExpressionDomainError on sqrt/log/pow domain violations or any
  // non-finite intermediate.
  double eval(std::span<const double> values) const;

  const std::string& text() const { return text_; }
  const std::vector<std::string>& variables() const { return variables_; }

  struct Node;

 private:
  Expression() = default;
  std::shared_ptr<const Node> root_;
  std::string text_;
  std::vector<std::string> variables_;
};

}  // namespace wcdim
