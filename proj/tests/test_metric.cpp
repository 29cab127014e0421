#include <doctest.h>

#include "helpers.hpp"
#include "tmlift/metric.hpp"
#include "tmlift/sampling.hpp"

using namespace tmlift;
using namespace tmlift_test;

TEST_CASE("metric values for the built-in families") {
  const auto eu = MetricSpec::euclidean(3);
  Eigen::Vector3d x(0.3, -0.7, 0.1);
  CHECK((metric_at(eu, x).g - Eigen::Matrix3d::Identity()).norm() == 0.0);

  const auto sp = MetricSpec::constant_curvature(2, 1.0);
  CHECK((metric_at(sp, Eigen::Vector2d(0, 0)).g - 4.0 * Eigen::Matrix2d::Identity()).norm() ==
        doctest::Approx(0.0));

  const auto hy = MetricSpec::constant_curvature(2, -1.0);
  const Eigen::MatrixXd g = metric_at(hy, Eigen::Vector2d(0.5, 0.0)).g;
  CHECK(g(0, 0) == doctest::Approx(64.0 / 9.0));
  CHECK(g(1, 1) == doctest::Approx(64.0 / 9.0));
  CHECK(g(0, 1) == 0.0);
}

TEST_CASE("inverse satisfies g ginv = I") {
  SplitMix64 rng(21);
  for (const auto& spec : {MetricSpec::constant_curvature(3, 1.0), random_custom_metric(3, rng)}) {
    for (int t = 0; t < 10; ++t) {
      const TangentPoint u = sample_point(spec, rng);
      const MetricAt m = metric_at(spec, u.x);
      CHECK((m.g * m.ginv - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("non positive definite components are rejected") {
  const auto bad = MetricSpec::custom(2, std::vector<std::string>{"-1", "0", "0", "-1"});
  CHECK_THROWS_AS((void)metric_at(bad, Eigen::Vector2d(0, 0)), ModelError);
}

TEST_CASE("christoffel symbols, flat and curved") {
  const auto eu = MetricSpec::euclidean(2);
  const Grid3<double> flat = christoffel(eu, Eigen::Vector2d(0.4, 0.5));
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(flat(k, i, j) == 0.0);

  const auto sp = MetricSpec::constant_curvature(2, 1.0);
  const Grid3<double> at0 = christoffel(sp, Eigen::Vector2d(0, 0));
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(at0(k, i, j) == doctest::Approx(0.0));

  // conformal chart at x=(1,0): Gamma^1_{11} = -1, cross-checked against the
  // difference oracle on g
  const Eigen::Vector2d x(1.0, 0.0);
  const Grid3<double> gm = christoffel(sp, x);
  CHECK(gm(0, 0, 0) == doctest::Approx(-1.0));
  const Grid3<double> oracle = fd_christoffel(sp, x, 1e-5);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(gm(k, i, j) == doctest::Approx(oracle(k, i, j)).epsilon(1e-6));
}

TEST_CASE("christoffel is symmetric in the lower pair") {
  SplitMix64 rng(5);
  const auto spec = random_custom_metric(3, rng);
  for (int t = 0; t < 20; ++t) {
    const TangentPoint u = sample_point(spec, rng);
    const Grid3<double> gm = christoffel(spec, u.x);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(gm(k, i, j) == gm(k, j, i));
  }
}

TEST_CASE("curvature of the model spaces") {
  const auto eu = MetricSpec::euclidean(3);
  SplitMix64 rng(9);
  const TangentPoint u0 = sample_point(eu, rng);
  const Grid4<double> K0 = curvature(eu, u0.x);
  double m = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      for (int h = 0; h < 3; ++h)
        for (int s = 0; s < 3; ++s) m = std::max(m, std::abs(K0(j, i, h, s)));
  CHECK(m == 0.0);

  for (const double c : {1.0, -1.0}) {
    const auto spec = MetricSpec::constant_curvature(3, c);
    for (int t = 0; t < 10; ++t) {
      const TangentPoint u = sample_point(spec, rng);
      CHECK(constant_curvature_defect(spec, u.x, c) <= 1e-8);
    }
  }
}

TEST_CASE("curvature matches the difference oracle on a curved custom metric") {
  SplitMix64 rng(33);
  const auto spec = random_custom_metric(2, rng, 0.05);
  for (int t = 0; t < 5; ++t) {
    const TangentPoint u = sample_point(spec, rng);
    const Grid4<double> K = curvature(spec, u.x);
    const Grid4<double> Kfd = fd_curvature(spec, u.x, 1e-5);
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i)
        for (int h = 0; h < 2; ++h)
          for (int s = 0; s < 2; ++s)
            CHECK(K(j, i, h, s) == doctest::Approx(Kfd(j, i, h, s)).epsilon(1e-5));
  }
}

TEST_CASE("curvature antisymmetry and first Bianchi identity") {
  SplitMix64 rng(17);
  std::vector<MetricSpec> specs{MetricSpec::euclidean(3), MetricSpec::constant_curvature(3, 1.0),
                                MetricSpec::constant_curvature(3, -1.0),
                                random_custom_metric(3, rng)};
  for (const auto& spec : specs) {
    for (int t = 0; t < 50; ++t) {
      const TangentPoint u = sample_point(spec, rng);
      const Grid4<double> K = curvature(spec, u.x);
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
          for (int h = 0; h < 3; ++h)
            for (int s = 0; s < 3; ++s) {
              CHECK(std::abs(K(j, i, h, s) + K(i, j, h, s)) <= 1e-9);
              const double cyc = K(j, i, h, s) + K(i, h, j, s) + K(h, j, i, s);
              CHECK(std::abs(cyc) <= 1e-9);
            }
    }
  }
}

TEST_CASE("ricci and scalar curvature of the model spaces") {
  {
    const auto spec = MetricSpec::constant_curvature(3, 1.0);
    SplitMix64 rng(2);
    const TangentPoint u = sample_point(spec, rng);
    const RicciScalar rs = ricci_scalar(spec, u.x);
    const Eigen::MatrixXd g = metric_at(spec, u.x).g;
    CHECK((rs.ricci - 2.0 * g).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(rs.scalar == doctest::Approx(6.0).epsilon(1e-9));
  }
  {
    const auto spec = MetricSpec::euclidean(2);
    const RicciScalar rs = ricci_scalar(spec, Eigen::Vector2d(0.1, 0.2));
    CHECK(rs.ricci.cwiseAbs().maxCoeff() == 0.0);
    CHECK(rs.scalar == 0.0);
  }
  {
    const auto spec = MetricSpec::constant_curvature(2, -1.0);
    const RicciScalar rs = ricci_scalar(spec, Eigen::Vector2d(0.2, -0.1));
    CHECK(rs.scalar == doctest::Approx(-2.0).epsilon(1e-9));
  }
}

TEST_CASE("ricci of constant curvature is einstein and symmetric") {
  SplitMix64 rng(8);
  for (const double c : {1.0, -1.0}) {
    for (const int n : {2, 3, 4}) {
      const auto spec = MetricSpec::constant_curvature(n, c);
      for (int t = 0; t < 10; ++t) {
        const TangentPoint u = sample_point(spec, rng);
        const RicciScalar rs = ricci_scalar(spec, u.x);
        const Eigen::MatrixXd g = metric_at(spec, u.x).g;
        CHECK((rs.ricci - c * (n - 1) * g).cwiseAbs().maxCoeff() <= 1e-8);
        CHECK((rs.ricci - rs.ricci.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("constant curvature defect distinguishes the families") {
  const auto eu = MetricSpec::euclidean(2);
  const Eigen::Vector2d x(0.3, 0.4);
  CHECK(constant_curvature_defect(eu, x, 0.0) == 0.0);
  CHECK(constant_curvature_defect(eu, x, 1.0) >= 1.0);

  const auto sp = MetricSpec::constant_curvature(2, 1.0);
  CHECK(constant_curvature_defect(sp, x, 1.0) <= 1e-8);
}
