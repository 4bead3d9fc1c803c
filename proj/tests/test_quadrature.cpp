#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ytensor/quadrature.hpp"

using namespace ytensor;

TEST_CASE("tanh-sinh handles endpoint singularities") {
  QuadratureConfig q;
  q.abs_tol = q.rel_tol = 1e-13;
  CHECK(tanh_sinh([](double x) { return std::log(x); }, 0, 1, q).value == doctest::Approx(-1).epsilon(1e-12));
  // Nodes closer than one ulp to +-1 are dropped, which truncates an inverse
  // square root near 1e-8.
  QuadratureConfig loose;
  loose.abs_tol = loose.rel_tol = 1e-7;
  CHECK(tanh_sinh([](double x) { return 1 / std::sqrt((1 - x) * (1 + x)); }, -1, 1, loose).value ==
        doctest::Approx(std::numbers::pi).epsilon(1e-7));
  CHECK(tanh_sinh([](double x) { return x * x; }, 0, 3, q).value == doctest::Approx(9).epsilon(1e-13));
  CHECK(tanh_sinh([](double x) { return x; }, 1, 0, q).value == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(tanh_sinh([](double) { return 1.0; }, 2, 2).value == 0.0);
}

TEST_CASE("Gauss-Kronrod on smooth and kinked integrands") {
  QuadratureConfig q;
  q.abs_tol = q.rel_tol = 1e-12;
  CHECK(gauss_kronrod([](double x) { return std::exp(x); }, 0, 1, q).value ==
        doctest::Approx(std::exp(1.0) - 1).epsilon(1e-13));
  CHECK(gauss_kronrod([](double x) { return std::abs(x - 0.3); }, 0, 1, q).value ==
        doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-11));
  CHECK(kronrod15([](double x) { return std::pow(x, 20); }, 0, 1) == doctest::Approx(1.0 / 21).epsilon(1e-14));
}

TEST_CASE("pieces and breakpoints") {
  const std::vector<double> inner{0.5, -3, 0.5, 0.25, 9};
  const auto pts = breakpoints_within(0, 1, inner);
  CHECK(pts == std::vector<double>{0, 0.25, 0.5, 1});
  auto f = [](double x) { return std::log(std::abs(x - 0.25)); };
  const double expected = 0.25 * std::log(0.25) - 0.25 + 0.75 * std::log(0.75) - 0.75;
  CHECK(integrate_pieces(f, pts) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("invalid configurations and nonconvergence") {
  QuadratureConfig bad;
  bad.abs_tol = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  QuadratureConfig tiny;
  tiny.max_subdivisions = 2;
  tiny.abs_tol = tiny.rel_tol = 1e-15;
  CHECK_THROWS_AS(gauss_kronrod([](double x) { return std::log(x); }, 0, 1, tiny), QuadratureError);
  QuadratureConfig shallow;
  shallow.max_levels = 3;
  shallow.abs_tol = shallow.rel_tol = 1e-16;
  CHECK_THROWS_AS(tanh_sinh([](double x) { return std::sin(200 * x); }, 0, 1, shallow), QuadratureError);
}
