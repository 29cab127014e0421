// Second-order forward-mode scalars: value, gradient and Hessian propagate
// exactly through +, -, *, /, sqrt and powers. The number of active variables
// is fixed when a jet is created and must agree between operands.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmlift {

class JetDomainError : public std::runtime_error {
public:
  explicit JetDomainError(const std::string& what) : std::runtime_error(what) {}
};

class Jet2 {
public:
  Jet2() : val_(0.0) {}

  // Constant with the given number of active variables.
  Jet2(double v, int nvars)
      : val_(v),
        grad_(Eigen::VectorXd::Zero(nvars)),
        hess_(Eigen::MatrixXd::Zero(nvars, nvars)) {}

  // The `index`-th coordinate variable, seeded with a unit gradient.
  static Jet2 variable(double v, int nvars, int index) {
    Jet2 j(v, nvars);
    j.grad_(index) = 1.0;
    return j;
  }

  static Jet2 make(double v, Eigen::VectorXd g, Eigen::MatrixXd h) {
    Jet2 j;
    j.val_ = v;
    j.grad_ = std::move(g);
    j.hess_ = std::move(h);
    return j;
  }

  double value() const { return val_; }
  const Eigen::VectorXd& grad() const { return grad_; }
  const Eigen::MatrixXd& hess() const { return hess_; }
  int nvars() const { return static_cast<int>(grad_.size()); }

  Jet2 operator-() const {
    Jet2 r(*this);
    r.val_ = -r.val_;
    r.grad_ = -r.grad_;
    r.hess_ = -r.hess_;
    return r;
  }

  Jet2& operator+=(const Jet2& o) {
    val_ += o.val_;
    grad_ += o.grad_;
    hess_ += o.hess_;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    val_ -= o.val_;
    grad_ -= o.grad_;
    hess_ -= o.hess_;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.val_ * b.val_, a.nvars());
    r.grad_ = a.val_ * b.grad_ + b.val_ * a.grad_;
    // grouping the outer products keeps the stored Hessian bit-symmetric
    const Eigen::MatrixXd outer = a.grad_ * b.grad_.transpose();
    r.hess_ = a.val_ * b.hess_ + b.val_ * a.hess_ + (outer + outer.transpose());
    return r;
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.val_ == 0.0) throw JetDomainError("division by zero");
    return a * b.reciprocal();
  }

  friend Jet2 operator+(Jet2 a, double s) {
    a.val_ += s;
    return a;
  }
  friend Jet2 operator+(double s, Jet2 a) {
    a.val_ += s;
    return a;
  }
  friend Jet2 operator-(Jet2 a, double s) {
    a.val_ -= s;
    return a;
  }
  friend Jet2 operator-(double s, const Jet2& a) { return -a + s; }
  friend Jet2 operator*(Jet2 a, double s) {
    a.val_ *= s;
    a.grad_ *= s;
    a.hess_ *= s;
    return a;
  }
  friend Jet2 operator*(double s, Jet2 a) { return std::move(a) * s; }
  friend Jet2 operator/(Jet2 a, double s) {
    if (s == 0.0) throw JetDomainError("division by zero");
    return std::move(a) * (1.0 / s);
  }
  friend Jet2 operator/(double s, const Jet2& a) {
    if (a.val_ == 0.0) throw JetDomainError("division by zero");
    return a.reciprocal() * s;
  }

  // 1/x with exact first and second derivatives.
  Jet2 reciprocal() const {
    if (val_ == 0.0) throw JetDomainError("division by zero");
    const double iv = 1.0 / val_;
    Jet2 r(iv, nvars());
    r.grad_ = -iv * iv * grad_;
    r.hess_ = -iv * iv * hess_ + 2.0 * iv * iv * iv * grad_ * grad_.transpose();
    return r;
  }

private:
  double val_;
  Eigen::VectorXd grad_;
  Eigen::MatrixXd hess_;
};

// Chain rule for a univariate primitive with derivatives d1, d2 at a.value().
inline Jet2 chain(const Jet2& a, double v, double d1, double d2) {
  return Jet2::make(v, d1 * a.grad(),
                    d1 * a.hess() + d2 * a.grad() * a.grad().transpose());
}

inline Jet2 sqrt(const Jet2& a) {
  if (a.value() < 0.0) throw JetDomainError("sqrt of negative value");
  if (a.value() == 0.0) throw JetDomainError("sqrt at zero is not differentiable");
  const double s = std::sqrt(a.value());
  return chain(a, s, 0.5 / s, -0.25 / (s * a.value()));
}

// a^p for real exponents; the base must be positive unless p is a
// non-negative integer (handled by repeated multiplication).
inline Jet2 pow(const Jet2& a, double p) {
  const double rounded = std::nearbyint(p);
  if (p == rounded && std::abs(p) < 64.0) {
    int k = static_cast<int>(rounded);
    if (k == 0) return Jet2(1.0, a.nvars());
    const bool inv = k < 0;
    k = std::abs(k);
    Jet2 acc = a;
    for (int i = 1; i < k; ++i) acc = acc * a;
    return inv ? acc.reciprocal() : acc;
  }
  if (a.value() <= 0.0) throw JetDomainError("pow of non-positive base with non-integer exponent");
  return chain(a, std::pow(a.value(), p), p * std::pow(a.value(), p - 1.0),
               p * (p - 1.0) * std::pow(a.value(), p - 2.0));
}

// Seeds one jet per coordinate: identity gradient block, zero Hessian.
inline std::vector<Jet2> lift_vars(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  std::vector<Jet2> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Jet2::variable(x[i], n, i));
  return out;
}

}  // namespace tmlift
