#include "tmlift/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace tmlift {

namespace {

bool is_number(const ExprPtr& e, double v) {
  return e->kind == Expr::Kind::Number && e->number == v;
}

ExprPtr node(Expr::Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

}  // namespace

ExprPtr expr_number(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Number;
  e->number = v;
  return e;
}

ExprPtr expr_var(int index) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Var;
  e->var = index;
  return e;
}

// The smart constructors fold the identities that keep derivative trees small.
ExprPtr expr_add(ExprPtr a, ExprPtr b) {
  if (is_number(a, 0.0)) return b;
  if (is_number(b, 0.0)) return a;
  if (a->kind == Expr::Kind::Number && b->kind == Expr::Kind::Number)
    return expr_number(a->number + b->number);
  return node(Expr::Kind::Add, std::move(a), std::move(b));
}

ExprPtr expr_sub(ExprPtr a, ExprPtr b) {
  if (is_number(b, 0.0)) return a;
  if (a->kind == Expr::Kind::Number && b->kind == Expr::Kind::Number)
    return expr_number(a->number - b->number);
  if (is_number(a, 0.0)) return expr_neg(std::move(b));
  return node(Expr::Kind::Sub, std::move(a), std::move(b));
}

ExprPtr expr_mul(ExprPtr a, ExprPtr b) {
  if (is_number(a, 0.0) || is_number(b, 0.0)) return expr_number(0.0);
  if (is_number(a, 1.0)) return b;
  if (is_number(b, 1.0)) return a;
  if (a->kind == Expr::Kind::Number && b->kind == Expr::Kind::Number)
    return expr_number(a->number * b->number);
  return node(Expr::Kind::Mul, std::move(a), std::move(b));
}

ExprPtr expr_div(ExprPtr a, ExprPtr b) {
  if (is_number(a, 0.0)) return expr_number(0.0);
  if (is_number(b, 1.0)) return a;
  return node(Expr::Kind::Div, std::move(a), std::move(b));
}

ExprPtr expr_neg(ExprPtr a) {
  if (a->kind == Expr::Kind::Number) return expr_number(-a->number);
  return node(Expr::Kind::Neg, std::move(a));
}

ExprPtr expr_sqrt(ExprPtr a) { return node(Expr::Kind::Sqrt, std::move(a)); }

ExprPtr expr_pow(ExprPtr a, double exponent) {
  if (exponent == 0.0) return expr_number(1.0);
  if (exponent == 1.0) return a;
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Pow;
  e->a = std::move(a);
  e->exponent = exponent;
  return e;
}

ExprPtr differentiate(const ExprPtr& e, int index) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::Number: return expr_number(0.0);
    case K::Var: return expr_number(e->var == index ? 1.0 : 0.0);
    case K::Add: return expr_add(differentiate(e->a, index), differentiate(e->b, index));
    case K::Sub: return expr_sub(differentiate(e->a, index), differentiate(e->b, index));
    case K::Mul:
      return expr_add(expr_mul(differentiate(e->a, index), e->b),
                      expr_mul(e->a, differentiate(e->b, index)));
    case K::Div:
      // (a'b - ab') / b^2
      return expr_div(expr_sub(expr_mul(differentiate(e->a, index), e->b),
                               expr_mul(e->a, differentiate(e->b, index))),
                      expr_pow(e->b, 2.0));
    case K::Neg: return expr_neg(differentiate(e->a, index));
    case K::Sqrt:
      return expr_div(differentiate(e->a, index),
                      expr_mul(expr_number(2.0), expr_sqrt(e->a)));
    case K::Pow:
      return expr_mul(expr_mul(expr_number(e->exponent), expr_pow(e->a, e->exponent - 1.0)),
                      differentiate(e->a, index));
  }
  throw ExprError("unreachable expression kind");
}

template <class Scalar>
Scalar eval(const ExprPtr& e, std::span<const Scalar> x) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::Number:
      if constexpr (std::is_same_v<Scalar, double>) {
        return e->number;
      } else {
        return Scalar(e->number, x.empty() ? 0 : x[0].nvars());
      }
    case K::Var:
      if (e->var < 0 || e->var >= static_cast<int>(x.size()))
        throw ExprError("variable index out of range");
      return x[e->var];
    case K::Add: return eval(e->a, x) + eval(e->b, x);
    case K::Sub: return eval(e->a, x) - eval(e->b, x);
    case K::Mul: return eval(e->a, x) * eval(e->b, x);
    case K::Div: {
      const Scalar b = eval(e->b, x);
      if constexpr (std::is_same_v<Scalar, double>) {
        if (b == 0.0) throw JetDomainError("division by zero");
      }
      return eval(e->a, x) / b;
    }
    case K::Neg: return -eval(e->a, x);
    case K::Sqrt: {
      const Scalar a = eval(e->a, x);
      if constexpr (std::is_same_v<Scalar, double>) {
        if (a < 0.0) throw JetDomainError("sqrt of negative value");
        return std::sqrt(a);
      } else {
        return sqrt(a);
      }
    }
    case K::Pow: {
      const Scalar a = eval(e->a, x);
      if constexpr (std::is_same_v<Scalar, double>) {
        if (a <= 0.0 && e->exponent != std::nearbyint(e->exponent))
          throw JetDomainError("pow of non-positive base with non-integer exponent");
        return std::pow(a, e->exponent);
      } else {
        return pow(a, e->exponent);
      }
    }
  }
  throw ExprError("unreachable expression kind");
}

template double eval<double>(const ExprPtr&, std::span<const double>);
template Jet2 eval<Jet2>(const ExprPtr&, std::span<const Jet2>);

std::string to_string(const ExprPtr& e) {
  using K = Expr::Kind;
  std::ostringstream os;
  switch (e->kind) {
    case K::Number: os << e->number; break;
    case K::Var: os << "x" << (e->var + 1); break;
    case K::Add: os << "(" << to_string(e->a) << " + " << to_string(e->b) << ")"; break;
    case K::Sub: os << "(" << to_string(e->a) << " - " << to_string(e->b) << ")"; break;
    case K::Mul: os << "(" << to_string(e->a) << " * " << to_string(e->b) << ")"; break;
    case K::Div: os << "(" << to_string(e->a) << " / " << to_string(e->b) << ")"; break;
    case K::Neg: os << "(-" << to_string(e->a) << ")"; break;
    case K::Sqrt: os << "sqrt(" << to_string(e->a) << ")"; break;
    case K::Pow: os << "(" << to_string(e->a) << ")^" << e->exponent; break;
  }
  return os.str();
}

namespace {

class Parser {
public:
  Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

  ExprPtr run() {
    auto e = expression();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

private:
  ExprPtr expression() {
    auto e = term();
    while (true) {
      skip_ws();
      if (accept('+'))
        e = expr_add(e, term());
      else if (accept('-'))
        e = expr_sub(e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    auto e = unary();
    while (true) {
      skip_ws();
      if (accept('*'))
        e = expr_mul(e, unary());
      else if (accept('/'))
        e = expr_div(e, unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    skip_ws();
    if (accept('-')) return expr_neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      const bool neg = accept('-');
      const double k = number_literal();
      return expr_pow(base, neg ? -k : k);
    }
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return expr_number(number_literal());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string id = identifier();
      if (id == "sqrt") {
        expect('(');
        auto e = expression();
        expect(')');
        return expr_sqrt(e);
      }
      if (id == "pow") {
        expect('(');
        auto e = expression();
        expect(',');
        skip_ws();
        const bool neg = accept('-');
        const double k = number_literal();
        expect(')');
        return expr_pow(e, neg ? -k : k);
      }
      if (id.size() >= 2 && id[0] == 'x') {
        int idx = 0;
        for (size_t i = 1; i < id.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(id[i]))) fail("unknown identifier '" + id + "'");
          idx = idx * 10 + (id[i] - '0');
        }
        if (idx < 1 || idx > nvars_)
          fail("variable '" + id + "' out of range (expected x1..x" + std::to_string(nvars_) + ")");
        return expr_var(idx - 1);
      }
      fail("unknown identifier '" + id + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
    return nullptr;
  }

  double number_literal() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' ||
            ((s_[pos_] == '+' || s_[pos_] == '-') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    try {
      return std::stod(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("bad numeric literal '" + s_.substr(start, pos_ - start) + "'");
    }
    return 0.0;
  }

  std::string identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ExprError("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  int nvars_;
  size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, int nvars) { return Parser(text, nvars).run(); }

}  // namespace tmlift
