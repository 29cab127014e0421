#include "tmlift/metric.hpp"

#include <cmath>

namespace tmlift {

MetricSpec MetricSpec::euclidean(int n) {
  if (n < 2) throw ModelError("dimension must be >= 2");
  MetricSpec s;
  s.n_ = n;
  s.family_ = MetricFamily::Euclidean;
  return s;
}

MetricSpec MetricSpec::constant_curvature(int n, double c) {
  if (n < 2) throw ModelError("dimension must be >= 2");
  MetricSpec s;
  s.n_ = n;
  s.family_ = MetricFamily::ConstantCurvature;
  s.c_ = c;
  return s;
}

MetricSpec MetricSpec::custom(int n, const std::vector<std::string>& components) {
  if (static_cast<int>(components.size()) != n * n)
    throw ModelError("custom metric needs n*n component expressions (row-major)");
  std::vector<std::vector<ExprPtr>> comp(n, std::vector<ExprPtr>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) comp[i][j] = parse_expr(components[i * n + j], n);
  return custom(n, comp);
}

MetricSpec MetricSpec::custom(int n, const std::vector<std::vector<ExprPtr>>& components) {
  if (n < 2) throw ModelError("dimension must be >= 2");
  MetricSpec s;
  s.n_ = n;
  s.family_ = MetricFamily::Custom;
  s.comp_ = components;
  s.dcomp_.assign(n, std::vector<std::vector<ExprPtr>>(n, std::vector<ExprPtr>(n)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.dcomp_[k][i][j] = differentiate(components[i][j], k);
  return s;
}

std::string MetricSpec::family_name() const {
  switch (family_) {
    case MetricFamily::Euclidean: return "euclidean";
    case MetricFamily::ConstantCurvature:
      return "constant_curvature(" + std::to_string(c_) + ")";
    case MetricFamily::Custom: return "custom";
  }
  return "?";
}

ChartBox MetricSpec::sample_box() const {
  ChartBox box;
  double r = 0.9;
  if (family_ == MetricFamily::ConstantCurvature && c_ < 0.0) {
    // keep 1 + c|x|^2 >= 0.55 over the whole box
    r = std::sqrt(0.45 / (n_ * -c_));
  }
  box.lo = Eigen::VectorXd::Constant(n_, -r);
  box.hi = Eigen::VectorXd::Constant(n_, r);
  return box;
}

bool MetricSpec::admissible(const Eigen::VectorXd& x) const {
  if (x.size() != n_) return false;
  if (family_ == MetricFamily::ConstantCurvature)
    return 1.0 + c_ * x.squaredNorm() > 0.0;
  return true;
}

MetricAt metric_at(const MetricSpec& spec, const Eigen::VectorXd& x) {
  const int n = spec.dim();
  if (!spec.admissible(x)) throw ModelError("point is not admissible for this metric");
  std::vector<double> xv(x.data(), x.data() + n);
  const Grid2<double> g = spec.components(std::span<const double>(xv));

  MetricAt out;
  out.g.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.g(i, j) = g(i, j);

  if ((out.g - out.g.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ModelError("metric components are not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(out.g);
  if (llt.info() != Eigen::Success)
    throw ModelError("metric is not positive definite at the requested point");

  out.ginv = llt.solve(Eigen::MatrixXd::Identity(n, n));
  return out;
}

Grid3<double> christoffel(const MetricSpec& spec, const Eigen::VectorXd& x) {
  if (!spec.admissible(x)) throw ModelError("point is not admissible for this metric");
  std::vector<double> xv(x.data(), x.data() + x.size());
  return christoffel_t<double>(spec, std::span<const double>(xv));
}

Grid4<double> curvature(const MetricSpec& spec, const Eigen::VectorXd& x) {
  const int n = spec.dim();
  if (!spec.admissible(x)) throw ModelError("point is not admissible for this metric");
  const std::vector<Jet2> xj = lift_vars(x);
  const Grid3<Jet2> gamma = christoffel_t<Jet2>(spec, std::span<const Jet2>(xj));

  Grid4<double> K(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < n; ++h)
        for (int s = 0; s < n; ++s) {
          double v = gamma(s, i, h).grad()[j] - gamma(s, j, h).grad()[i];
          for (int m = 0; m < n; ++m)
            v += gamma(m, i, h).value() * gamma(s, j, m).value() -
                 gamma(m, j, h).value() * gamma(s, i, m).value();
          K(j, i, h, s) = v;
        }
  return K;
}

RicciScalar ricci_scalar(const MetricSpec& spec, const Eigen::VectorXd& x) {
  const int n = spec.dim();
  const Grid4<double> K = curvature(spec, x);
  const MetricAt m = metric_at(spec, x);

  RicciScalar out;
  out.ricci.setZero(n, n);
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < n; ++h) {
      double v = 0.0;
      for (int s = 0; s < n; ++s) v += K(s, i, h, s);
      out.ricci(i, h) = v;
    }
  out.scalar = (m.ginv.array() * out.ricci.array()).sum();
  return out;
}

double constant_curvature_defect(const MetricSpec& spec, const Eigen::VectorXd& x, double c) {
  const int n = spec.dim();
  const Grid4<double> K = curvature(spec, x);
  const MetricAt m = metric_at(spec, x);

  double defect = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < n; ++h)
        for (int s = 0; s < n; ++s) {
          const double model =
              c * (m.g(i, h) * (j == s ? 1.0 : 0.0) - m.g(j, h) * (i == s ? 1.0 : 0.0));
          defect = std::max(defect, std::abs(K(j, i, h, s) - model));
        }
  return defect;
}

Eigen::VectorXd lower_index(const MetricSpec& spec, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y) {
  return metric_at(spec, x).g * y;
}

}  // namespace tmlift
