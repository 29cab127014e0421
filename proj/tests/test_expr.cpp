#include <doctest.h>

#include <vector>

#include "tmlift/expr.hpp"

using namespace tmlift;

namespace {

double at(const ExprPtr& e, std::initializer_list<double> xs) {
  std::vector<double> v(xs);
  return eval<double>(e, std::span<const double>(v));
}

}  // namespace

TEST_CASE("parser handles precedence, powers and functions") {
  CHECK(at(parse_expr("1 + 2*3", 1), {0.0}) == 7.0);
  CHECK(at(parse_expr("(1 + 2)*3", 1), {0.0}) == 9.0);
  CHECK(at(parse_expr("x1^2 + x2^2", 2), {3.0, 4.0}) == 25.0);
  CHECK(at(parse_expr("sqrt(x1^2 + x2^2)", 2), {3.0, 4.0}) == 5.0);
  CHECK(at(parse_expr("pow(x1, 3)", 1), {2.0}) == 8.0);
  CHECK(at(parse_expr("4 / (1 + x1^2)^2", 1), {1.0}) == 1.0);
  CHECK(at(parse_expr("-x1 + 2", 1), {0.5}) == 1.5);
  CHECK(at(parse_expr("x1^-2", 1), {2.0}) == 0.25);
  CHECK(at(parse_expr("2e-1 * x1", 1), {10.0}) == 2.0);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS((void)parse_expr("x1 +", 1), ExprError);
  CHECK_THROWS_AS((void)parse_expr("x3", 2), ExprError);
  CHECK_THROWS_AS((void)parse_expr("foo(x1)", 1), ExprError);
  CHECK_THROWS_AS((void)parse_expr("x1 2", 1), ExprError);
  CHECK_THROWS_AS((void)parse_expr("(x1", 1), ExprError);
}

TEST_CASE("symbolic derivative matches jet gradient") {
  const auto e = parse_expr("x1*x2 + sqrt(1 + x1^2) / (2 + x2^2)", 2);
  const Eigen::Vector2d x(0.7, -1.3);
  const auto jets = lift_vars(x);
  const Jet2 je = eval<Jet2>(e, std::span<const Jet2>(jets));

  for (int k = 0; k < 2; ++k) {
    const auto de = differentiate(e, k);
    std::vector<double> xv{x[0], x[1]};
    const double dv = eval<double>(de, std::span<const double>(xv));
    CHECK(dv == doctest::Approx(je.grad()[k]).epsilon(1e-12));
  }
}

TEST_CASE("derivatives of constants and variables") {
  const auto e = parse_expr("x1", 2);
  CHECK(at(differentiate(e, 0), {5.0, 6.0}) == 1.0);
  CHECK(at(differentiate(e, 1), {5.0, 6.0}) == 0.0);
  const auto c = parse_expr("3.5", 1);
  CHECK(at(differentiate(c, 0), {1.0}) == 0.0);
}

TEST_CASE("jet evaluation through a parsed rational") {
  const auto e = parse_expr("4 / (1 + x1^2 + x2^2)^2", 2);
  Eigen::Vector2d x(1.0, 0.0);
  const auto jets = lift_vars(x);
  const Jet2 f = eval<Jet2>(e, std::span<const Jet2>(jets));
  CHECK(f.value() == doctest::Approx(1.0));
  CHECK(f.grad()[0] == doctest::Approx(-2.0));  // -16 x1 / (1+|x|^2)^3
  CHECK(f.grad()[1] == doctest::Approx(0.0));
}

TEST_CASE("domain errors carry the primitive name") {
  const auto e = parse_expr("sqrt(x1)", 1);
  std::vector<double> bad{-2.0};
  CHECK_THROWS_WITH_AS((void)eval<double>(e, std::span<const double>(bad)),
                       doctest::Contains("sqrt"), JetDomainError);
  const auto d = parse_expr("1 / x1", 1);
  std::vector<double> zero{0.0};
  CHECK_THROWS_WITH_AS((void)eval<double>(d, std::span<const double>(zero)),
                       doctest::Contains("division"), JetDomainError);
}
