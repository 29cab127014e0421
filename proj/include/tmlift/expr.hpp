// Scalar expressions over coordinates x1..xn built from the differentiable
// primitive set (+, -, *, /, sqrt, powers). Used for user-supplied metric
// components; evaluable with any scalar type that supports the primitives,
// and symbolically differentiable once (jets supply the remaining orders).

#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>

#include "tmlift/jet.hpp"

namespace tmlift {

class ExprError : public std::runtime_error {
public:
  explicit ExprError(const std::string& what) : std::runtime_error(what) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg, Sqrt, Pow };

  Kind kind;
  double number = 0.0;    // Kind::Number
  int var = -1;           // Kind::Var, 0-based
  double exponent = 1.0;  // Kind::Pow
  ExprPtr a, b;
};

ExprPtr expr_number(double v);
ExprPtr expr_var(int index);
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_div(ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_sqrt(ExprPtr a);
ExprPtr expr_pow(ExprPtr a, double exponent);

// Parses an expression over variables x1..x<nvars>. Grammar: the usual
// precedence for + - * / and right-associative ^, parentheses, numeric
// literals, and the functions sqrt(e) and pow(e, k) with constant k.
ExprPtr parse_expr(const std::string& text, int nvars);

// d(expr)/d(x_{index+1}) as a new tree.
ExprPtr differentiate(const ExprPtr& e, int index);

std::string to_string(const ExprPtr& e);

template <class Scalar>
Scalar eval(const ExprPtr& e, std::span<const Scalar> x);

extern template double eval<double>(const ExprPtr&, std::span<const double>);
extern template Jet2 eval<Jet2>(const ExprPtr&, std::span<const Jet2>);

}  // namespace tmlift
