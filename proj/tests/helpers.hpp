// Shared test utilities: the random custom metric family (identity plus a
// small symmetric quadratic perturbation) and finite-difference oracles for
// the base geometry.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tmlift/expr.hpp"
#include "tmlift/metric.hpp"
#include "tmlift/sampling.hpp"

namespace tmlift_test {

using namespace tmlift;

// g_ij = delta_ij + sum_{k<=l} c^{ij}_{kl} x_k x_l with |c| <= amp; stays
// positive definite on the sample box for small amp.
inline MetricSpec random_custom_metric(int n, SplitMix64& rng, double amp = 0.03) {
  std::vector<std::vector<ExprPtr>> comp(n, std::vector<ExprPtr>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ExprPtr e = expr_number(i == j ? 1.0 : 0.0);
      for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
          const double c = rng.uniform(-amp, amp);
          e = expr_add(e, expr_mul(expr_number(c), expr_mul(expr_var(k), expr_var(l))));
        }
      comp[i][j] = e;
      comp[j][i] = e;
    }
  return MetricSpec::custom(n, comp);
}

// Central-difference d_k g_ij, step h.
inline Grid3<double> fd_metric_grad(const MetricSpec& spec, const Eigen::VectorXd& x, double h) {
  const int n = spec.dim();
  Grid3<double> dg(n, 0.0);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    const Eigen::MatrixXd gp = metric_at(spec, xp).g;
    const Eigen::MatrixXd gm = metric_at(spec, xm).g;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dg(k, i, j) = (gp(i, j) - gm(i, j)) / (2.0 * h);
  }
  return dg;
}

// Christoffel symbols from the finite-difference metric gradient.
inline Grid3<double> fd_christoffel(const MetricSpec& spec, const Eigen::VectorXd& x, double h) {
  const int n = spec.dim();
  const Grid3<double> dg = fd_metric_grad(spec, x, h);
  const Eigen::MatrixXd ginv = metric_at(spec, x).ginv;
  Grid3<double> gamma(n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = 0.0;
        for (int m = 0; m < n; ++m) v += ginv(k, m) * (dg(i, j, m) + dg(j, i, m) - dg(m, i, j));
        gamma(k, i, j) = 0.5 * v;
      }
  return gamma;
}

// Curvature from finite differences of the exact Christoffel symbols.
inline Grid4<double> fd_curvature(const MetricSpec& spec, const Eigen::VectorXd& x, double h) {
  const int n = spec.dim();
  std::vector<Grid3<double>> dgamma;
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    const Grid3<double> gp = christoffel(spec, xp);
    const Grid3<double> gm = christoffel(spec, xm);
    Grid3<double> d(n, 0.0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) d(a, b, c) = (gp(a, b, c) - gm(a, b, c)) / (2.0 * h);
    dgamma.push_back(std::move(d));
  }
  const Grid3<double> gamma = christoffel(spec, x);
  Grid4<double> K(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int hh = 0; hh < n; ++hh)
        for (int s = 0; s < n; ++s) {
          double v = dgamma[j](s, i, hh) - dgamma[i](s, j, hh);
          for (int m = 0; m < n; ++m)
            v += gamma(m, i, hh) * gamma(s, j, m) - gamma(m, j, hh) * gamma(s, i, m);
          K(j, i, hh, s) = v;
        }
  return K;
}

}  // namespace tmlift_test
