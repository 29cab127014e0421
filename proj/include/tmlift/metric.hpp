// The base Riemannian manifold (M, g): metric families, Christoffel symbols,
// curvature, Ricci and the constant-curvature defect.
//
// Metric components and their coordinate gradients evaluate with a generic
// scalar, so every downstream quantity (connection coefficients, nonlinear
// connection, frame coefficient functions) can be pushed through jets to the
// derivative order a check needs.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmlift/expr.hpp"
#include "tmlift/grid.hpp"
#include "tmlift/jet.hpp"

namespace tmlift {

class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

enum class MetricFamily { Euclidean, ConstantCurvature, Custom };

struct ChartBox {
  Eigen::VectorXd lo, hi;
  bool contains(const Eigen::VectorXd& x) const {
    for (int i = 0; i < x.size(); ++i)
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
  }
};

class MetricSpec {
public:
  static MetricSpec euclidean(int n);

  // Conformal chart g_ij(x) = 4 delta_ij / (1 + c|x|^2)^2, valid where
  // 1 + c|x|^2 > 0; sectional curvature c.
  static MetricSpec constant_curvature(int n, double c);

  // Component expressions over x1..xn, row-major n*n list (must be symmetric).
  static MetricSpec custom(int n, const std::vector<std::string>& components);
  static MetricSpec custom(int n, const std::vector<std::vector<ExprPtr>>& components);

  int dim() const { return n_; }
  MetricFamily family() const { return family_; }
  double curvature_param() const { return c_; }
  std::string family_name() const;

  // Box from which sample points are drawn; stays clear of chart boundaries.
  ChartBox sample_box() const;
  bool admissible(const Eigen::VectorXd& x) const;

  template <class Scalar>
  Grid2<Scalar> components(std::span<const Scalar> x) const;

  // d g_ij / d x_k, index order (k, i, j).
  template <class Scalar>
  Grid3<Scalar> components_grad(std::span<const Scalar> x) const;

private:
  MetricSpec() = default;

  int n_ = 0;
  MetricFamily family_ = MetricFamily::Euclidean;
  double c_ = 0.0;
  std::vector<std::vector<ExprPtr>> comp_;    // custom only
  std::vector<std::vector<std::vector<ExprPtr>>> dcomp_;  // [k][i][j]
};

template <class Scalar>
double scalar_value(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, double>)
    return s;
  else
    return s.value();
}

template <class Scalar>
Scalar make_scalar(double v, const Scalar& like) {
  if constexpr (std::is_same_v<Scalar, double>)
    return v;
  else
    return Scalar(v, like.nvars());
}

// Gauss-Jordan inverse with partial pivoting on the value part; works for any
// scalar with field operations. Sizes here are tiny (n <= 2*dim).
template <class Scalar>
Grid2<Scalar> invert_matrix(const Grid2<Scalar>& m);

// metric and inverse at a point; throws ModelError when g fails a positive
// definiteness test.
struct MetricAt {
  Eigen::MatrixXd g, ginv;
};
MetricAt metric_at(const MetricSpec& spec, const Eigen::VectorXd& x);

// Levi-Civita coefficients of the base metric, any scalar type. Index order
// gamma(k, i, j) = Gamma^k_{ij}, symmetric in (i, j).
template <class Scalar>
Grid3<Scalar> christoffel_t(const MetricSpec& spec, std::span<const Scalar> x);

Grid3<double> christoffel(const MetricSpec& spec, const Eigen::VectorXd& x);

// Curvature tensor K(j,i,h,s) = K_{jih}^s = d_j Gamma^s_{ih} - d_i Gamma^s_{jh}
// + Gamma^m_{ih} Gamma^s_{jm} - Gamma^m_{jh} Gamma^s_{im}.
Grid4<double> curvature(const MetricSpec& spec, const Eigen::VectorXd& x);

// Ricci R_{ih} = K_{sih}^s and scalar S = g^{ih} R_{ih}.
struct RicciScalar {
  Eigen::MatrixXd ricci;
  double scalar;
};
RicciScalar ricci_scalar(const MetricSpec& spec, const Eigen::VectorXd& x);

// max_{jihs} | K_{jih}^s - c (g_{ih} d_j^s - g_{jh} d_i^s) |
double constant_curvature_defect(const MetricSpec& spec, const Eigen::VectorXd& x, double c);

// Index lowering y_i = g_ij(x) y^j.
Eigen::VectorXd lower_index(const MetricSpec& spec, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y);

// ---- template definitions ----

template <class Scalar>
Grid2<Scalar> MetricSpec::components(std::span<const Scalar> x) const {
  const Scalar zero = make_scalar<Scalar>(0.0, x[0]);
  Grid2<Scalar> g(n_, zero);
  switch (family_) {
    case MetricFamily::Euclidean:
      for (int i = 0; i < n_; ++i) g(i, i) = make_scalar<Scalar>(1.0, x[0]);
      break;
    case MetricFamily::ConstantCurvature: {
      Scalar r2 = zero;
      for (int i = 0; i < n_; ++i) r2 += x[i] * x[i];
      const Scalar w = 1.0 + c_ * r2;
      if (scalar_value(w) <= 0.0)
        throw ModelError("point outside the conformal chart (1 + c|x|^2 <= 0)");
      const Scalar a = 4.0 / (w * w);
      for (int i = 0; i < n_; ++i) g(i, i) = a;
      break;
    }
    case MetricFamily::Custom:
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) g(i, j) = eval<Scalar>(comp_[i][j], x);
      break;
  }
  return g;
}

template <class Scalar>
Grid3<Scalar> MetricSpec::components_grad(std::span<const Scalar> x) const {
  const Scalar zero = make_scalar<Scalar>(0.0, x[0]);
  Grid3<Scalar> dg(n_, zero);
  switch (family_) {
    case MetricFamily::Euclidean:
      break;
    case MetricFamily::ConstantCurvature: {
      Scalar r2 = zero;
      for (int i = 0; i < n_; ++i) r2 += x[i] * x[i];
      const Scalar w = 1.0 + c_ * r2;
      if (scalar_value(w) <= 0.0)
        throw ModelError("point outside the conformal chart (1 + c|x|^2 <= 0)");
      // d_k [4 w^-2] = -16 c x_k w^-3
      const Scalar f = -16.0 * c_ / (w * w * w);
      for (int k = 0; k < n_; ++k) {
        const Scalar v = f * x[k];
        for (int i = 0; i < n_; ++i) dg(k, i, i) = v;
      }
      break;
    }
    case MetricFamily::Custom:
      for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) dg(k, i, j) = eval<Scalar>(dcomp_[k][i][j], x);
      break;
  }
  return dg;
}

template <class Scalar>
Grid2<Scalar> invert_matrix(const Grid2<Scalar>& m) {
  const int n = m.extent();
  Grid2<Scalar> a = m;
  Grid2<Scalar> inv(n, make_scalar<Scalar>(0.0, m(0, 0)));
  for (int i = 0; i < n; ++i) inv(i, i) = make_scalar<Scalar>(1.0, m(0, 0));

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(scalar_value(a(col, col)));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(scalar_value(a(r, col)));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) throw ModelError("singular matrix in invert_matrix");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Scalar d = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) = a(col, c) / d;
      inv(col, c) = inv(col, c) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar f = a(r, col);
      for (int c = 0; c < n; ++c) {
        a(r, c) = a(r, c) - f * a(col, c);
        inv(r, c) = inv(r, c) - f * inv(col, c);
      }
    }
  }
  return inv;
}

template <class Scalar>
Grid3<Scalar> christoffel_t(const MetricSpec& spec, std::span<const Scalar> x) {
  const int n = spec.dim();
  const Grid2<Scalar> g = spec.components(x);
  const Grid3<Scalar> dg = spec.components_grad(x);
  const Grid2<Scalar> ginv = invert_matrix(g);
  const Scalar zero = make_scalar<Scalar>(0.0, x[0]);

  Grid3<Scalar> gamma(n, zero);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Scalar acc = zero;
        for (int m = 0; m < n; ++m)
          acc += ginv(k, m) * (dg(i, j, m) + dg(j, i, m) - dg(m, i, j));
        acc = 0.5 * acc;
        gamma(k, i, j) = acc;
        gamma(k, j, i) = acc;
      }
  return gamma;
}

}  // namespace tmlift
