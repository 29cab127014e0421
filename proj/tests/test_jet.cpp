#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "tmlift/jet.hpp"
#include "tmlift/sampling.hpp"

using namespace tmlift;

namespace {

using ScalarFn = std::function<double(const Eigen::VectorXd&)>;

// Central-difference oracle for gradients and Hessians.
Eigen::VectorXd fd_grad(const ScalarFn& f, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd fd_hess(const ScalarFn& f, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd H(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
      xpp[i] += h; xpp[j] += h;
      xpm[i] += h; xpm[j] -= h;
      xmp[i] -= h; xmp[j] += h;
      xmm[i] -= h; xmm[j] -= h;
      H(i, j) = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
    }
  return H;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

// Random monomial-sum polynomials and tame rationals p / (1 + q^2) so the
// finite-difference oracle stays well conditioned.
struct Monomial {
  double coeff;
  std::vector<int> powers;
};

template <class Scalar>
Scalar eval_poly(const std::vector<Monomial>& poly, const std::vector<Scalar>& x) {
  Scalar acc = x[0] - x[0];  // zero of the right scalar shape
  for (const Monomial& m : poly) {
    Scalar term = x[0] - x[0] + m.coeff;
    for (size_t i = 0; i < m.powers.size(); ++i)
      for (int p = 0; p < m.powers[i]; ++p) term = term * x[i];
    acc = acc + term;
  }
  return acc;
}

std::vector<Monomial> random_poly(SplitMix64& rng, int nvars, int max_deg, int terms) {
  std::vector<Monomial> poly;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.coeff = rng.uniform(-2.0, 2.0);
    m.powers.resize(nvars);
    int budget = max_deg;
    for (int i = 0; i < nvars; ++i) {
      const int p = static_cast<int>(rng.uniform(0.0, budget + 0.999));
      m.powers[i] = p;
      budget -= p;
    }
    poly.push_back(std::move(m));
  }
  return poly;
}

}  // namespace

TEST_CASE("variable seeding") {
  Eigen::VectorXd x(1);
  x << 2.0;
  const auto jets = lift_vars(x);
  CHECK(jets[0].value() == 2.0);
  CHECK(jets[0].grad()[0] == 1.0);
  CHECK(jets[0].hess()(0, 0) == 0.0);
}

TEST_CASE("square and mixed product derivatives") {
  {
    Eigen::VectorXd x(1);
    x << 3.0;
    const auto j = lift_vars(x);
    const Jet2 f = j[0] * j[0];
    CHECK(f.value() == 9.0);
    CHECK(f.grad()[0] == 6.0);
    CHECK(f.hess()(0, 0) == 2.0);
  }
  {
    Eigen::VectorXd x(2);
    x << 2.0, 5.0;
    const auto j = lift_vars(x);
    const Jet2 f = j[0] * j[1];
    CHECK(f.grad()[0] == 5.0);
    CHECK(f.grad()[1] == 2.0);
    CHECK(f.hess()(0, 1) == 1.0);
    CHECK(f.hess()(1, 0) == 1.0);
  }
}

TEST_CASE("conformal factor and euclidean norm") {
  const auto conformal = [](const auto& v) {
    auto r2 = v[0] * v[0] + v[1] * v[1];
    return 4.0 / ((1.0 + r2) * (1.0 + r2));
  };

  {
    Eigen::VectorXd x(2);
    x << 0.0, 0.0;
    const auto j = lift_vars(x);
    const Jet2 f = conformal(j);
    CHECK(f.value() == doctest::Approx(4.0));
    CHECK(f.grad().cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }
  {
    Eigen::VectorXd x(2);
    x << 3.0, 4.0;
    const auto j = lift_vars(x);
    const Jet2 f = sqrt(j[0] * j[0] + j[1] * j[1]);
    CHECK(f.value() == doctest::Approx(5.0));
    CHECK(f.grad()[0] == doctest::Approx(0.6));
    CHECK(f.grad()[1] == doctest::Approx(0.8));
  }
  {
    // value frozen from the central-difference oracle (step 1e-5)
    Eigen::VectorXd x(2);
    x << 1.0, 0.0;
    const ScalarFn fd = [&](const Eigen::VectorXd& v) {
      const double r2 = v.squaredNorm();
      return 4.0 / ((1.0 + r2) * (1.0 + r2));
    };
    const Eigen::VectorXd g_fd = fd_grad(fd, x, 1e-5);
    CHECK(g_fd[0] == doctest::Approx(-2.0).epsilon(1e-6));

    const auto j = lift_vars(x);
    const Jet2 f = conformal(j);
    CHECK(f.grad()[0] == doctest::Approx(-2.0));
    CHECK(rel_err(f.grad()[0], g_fd[0]) <= 1e-6);
  }
}

TEST_CASE("jets agree with central differences on random rationals") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int nvars = 1 + static_cast<int>(rng.uniform(0.0, 3.0));
    const auto p = random_poly(rng, nvars, 4, 4);
    const auto q = random_poly(rng, nvars, 2, 3);
    const bool rational = trial % 2 == 1;

    // modest range keeps the difference oracle within its own accuracy
    Eigen::VectorXd x(nvars);
    for (int i = 0; i < nvars; ++i) x[i] = rng.uniform(-1.2, 1.2);

    const ScalarFn f = [&](const Eigen::VectorXd& v) {
      std::vector<double> vv(v.data(), v.data() + v.size());
      const double num = eval_poly(p, vv);
      if (!rational) return num;
      const double den = eval_poly(q, vv);
      return num / (1.0 + den * den);
    };

    const auto jets = lift_vars(x);
    const Jet2 num = eval_poly(p, jets);
    Jet2 fj = num;
    if (rational) {
      const Jet2 den = eval_poly(q, jets);
      fj = num / (1.0 + den * den);
    }

    const Eigen::VectorXd g_fd = fd_grad(f, x, 1e-5);
    const Eigen::MatrixXd h_fd = fd_hess(f, x, 1e-4);
    for (int i = 0; i < nvars; ++i) {
      CHECK(rel_err(fj.grad()[i], g_fd[i]) <= 1e-6);
      for (int j = 0; j < nvars; ++j) CHECK(rel_err(fj.hess()(i, j), h_fd(i, j)) <= 1e-6);
    }
  }
}

TEST_CASE("degree-two polynomials are exact against differences") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int nvars = 2;
    const auto p = random_poly(rng, nvars, 2, 4);
    Eigen::VectorXd x(nvars);
    for (int i = 0; i < nvars; ++i) x[i] = rng.uniform(-1.0, 1.0);

    const ScalarFn f = [&](const Eigen::VectorXd& v) {
      std::vector<double> vv(v.data(), v.data() + v.size());
      return eval_poly(p, vv);
    };
    const auto jets = lift_vars(x);
    const Jet2 fj = eval_poly(p, jets);

    const Eigen::VectorXd g_fd = fd_grad(f, x, 1e-4);
    const Eigen::MatrixXd h_fd = fd_hess(f, x, 1e-4);
    for (int i = 0; i < nvars; ++i) {
      CHECK(std::abs(fj.grad()[i] - g_fd[i]) <= 1e-9);
      for (int j = 0; j < nvars; ++j) CHECK(std::abs(fj.hess()(i, j) - h_fd(i, j)) <= 1e-7);
    }
  }
}

TEST_CASE("product rule and hessian symmetry on random jets") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int nvars = 3;
    Eigen::VectorXd x(nvars);
    for (int i = 0; i < nvars; ++i) x[i] = rng.uniform(-2.0, 2.0);
    const auto j = lift_vars(x);

    const Jet2 f = j[0] * j[1] + sqrt(4.0 + j[2] * j[2]);
    const Jet2 g = (j[1] - 0.5) * j[2] + 1.5;
    const Jet2 fg = f * g;

    const Eigen::VectorXd expected = f.value() * g.grad() + g.value() * f.grad();
    CHECK((fg.grad() - expected).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((fg.hess() - fg.hess().transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("domain errors name the offending primitive") {
  Eigen::VectorXd x(1);
  x << -1.0;
  const auto j = lift_vars(x);
  CHECK_THROWS_WITH_AS((void)sqrt(j[0]), doctest::Contains("sqrt"), JetDomainError);
  CHECK_THROWS_WITH_AS((void)(j[0] / Jet2(0.0, 1)), doctest::Contains("division"),
                       JetDomainError);
}
