#pragma once

// Small expression language for scalar fields in config files.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' factor]
//   atom   := number | 'x' | 'y' | 'pi' | fn '(' expr ')' | '(' expr ')'
//   fn     := sin | cos | exp | sqrt | abs
//
// '^' is right-associative and binds tighter than unary minus, so
// "-2^2" evaluates to -4 and "2^3^2" to 512.

#include <memory>
#include <string>

#include "hetoda/grid.hpp"

namespace hetoda {

class FieldExpr {
 public:
  enum class Kind {
    Number, VarX, VarY, Pi,
    Add, Sub, Mul, Div, Pow, Neg,
    Sin, Cos, Exp, Sqrt, Abs,
  };

  struct Node {
    Kind kind;
    double number = 0.0;
    std::unique_ptr<Node> a, b;
  };

  FieldExpr() = default;
  explicit FieldExpr(std::unique_ptr<Node> root) : root_(std::move(root)) {}

  const Node* root() const { return root_.get(); }
  bool empty() const { return !root_; }

 private:
  std::unique_ptr<Node> root_;
};

// Total: every failure is a positioned SyntaxError, never a crash.
FieldExpr parse_field_expr(const std::string& src);

std::string pretty_print(const FieldExpr& e);

// Samples the expression at every grid point; x, y in [0,1).  Domain errors
// (sqrt of a negative, division by zero, non-finite result) report the first
// offending sample in row-major order.
ScalarField evaluate(const FieldExpr& e, const PeriodicGrid& grid);

double evaluate_at(const FieldExpr& e, double x, double y);

}  // namespace hetoda
