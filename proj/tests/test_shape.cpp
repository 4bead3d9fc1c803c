#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "ytensor/quadrature.hpp"
#include "ytensor/rng.hpp"
#include "ytensor/shape.hpp"

using namespace ytensor;

namespace {

constexpr double kPi = std::numbers::pi;

double central(const std::function<double(double)>& f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

double uniform(SplitMix64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// 20 points drawn in [lo, hi] avoiding a margin around each listed point.
std::vector<double> points(std::uint64_t seed, double lo, double hi, std::vector<double> avoid, double margin = 0.05) {
  SplitMix64 rng(seed, 0);
  std::vector<double> out;
  while (out.size() < 20) {
    const double x = uniform(rng, lo, hi);
    bool ok = true;
    for (double a : avoid) ok = ok && std::abs(x - a) > margin;
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("shape parameter") {
  CHECK_THROWS_AS(ShapeParam(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(ShapeParam{std::numeric_limits<double>::infinity()}, std::invalid_argument);
  CHECK_THROWS_AS(ShapeParam(0).alpha(), std::domain_error);
  CHECK(ShapeParam(2).alpha() == doctest::Approx(1.25));
  CHECK(ShapeParam(2).support_left() == doctest::Approx(-0.25));
  CHECK(ShapeParam(0.5).support_left() == doctest::Approx(-0.75));
  CHECK(ShapeParam(1.5).shift(1.0) == doctest::Approx(0.25));
}

TEST_CASE("omega") {
  CHECK(omega(0) == doctest::Approx(2 / kPi));
  CHECK(omega(1) == doctest::Approx(1));
  CHECK(omega(-1) == doctest::Approx(1));
  CHECK(omega(2) == 2);
  for (double s : points(1, -1.5, 1.5, {})) CHECK(omega_c(ShapeParam(0), s) == doctest::Approx(omega(s)).epsilon(1e-14));
}

TEST_CASE("omega_c branches") {
  for (double c : {0.0, 0.3, 0.5, 1.0, 2.0, 2.5}) {
    const ShapeParam p(c);
    CHECK(omega_c(p, c / 2 + 1) == doctest::Approx(c / 2 + 1).epsilon(1e-12));
    CHECK(omega_c(p, c / 2 + 3) == doctest::Approx(c / 2 + 3));
  }
  CHECK(omega_c(ShapeParam(2), -0.2) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(omega_c(ShapeParam(2), -0.6) == doctest::Approx(0.6));
  CHECK(omega_c(ShapeParam(1), -0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(omega_c(ShapeParam(1), std::nextafter(-0.5, -1.0)) == doctest::Approx(0.5).epsilon(1e-14));

  SUBCASE("continuity at both ends of the curved part") {
    for (double c : {0.5, 1.0, 2.5}) {
      const ShapeParam p(c);
      for (double end : {p.curved_left(), p.curved_right()}) {
        const double below = omega_c(p, end - 1e-12);
        const double above = omega_c(p, end + 1e-12);
        CHECK(std::abs(below - above) < 1e-10);
      }
    }
  }

  SUBCASE("Omega_c dominates |s| and is 1-Lipschitz") {
    for (double c : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      const ShapeParam p(c);
      for (int k = -400; k <= 400; ++k) {
        const double s = k * 0.01;
        CHECK(omega_c(p, s) >= std::abs(s) - 1e-14);
        CHECK(std::abs(omega_c_prime(p, s)) <= 1.0);
      }
    }
  }
}

TEST_CASE("omega_c has area 1/2 above |s|") {
  QuadratureConfig q;
  q.abs_tol = q.rel_tol = 1e-12;
  for (double c : {0.0, 0.5, 1.0, 2.5}) {
    const ShapeParam p(c);
    const std::vector<double> inner{p.support_left(), p.curved_left(), 0.0, p.support_right()};
    const auto pts = breakpoints_within(std::min(p.support_left(), -1.0) - 0.5, p.support_right() + 0.5, inner);
    const double area = integrate_pieces([&](double s) { return omega_c(p, s) - std::abs(s); }, pts, q);
    CHECK(area == doctest::Approx(0.5).epsilon(1e-8));
  }
}

TEST_CASE("omega_c_prime endpoints and tangency") {
  for (double c : {0.0, 0.3, 0.9}) {
    const ShapeParam p(c);
    CHECK(omega_c_prime(p, p.curved_left()) == -1.0);
    CHECK(omega_c_prime(p, p.curved_right()) == 1.0);
    CHECK(omega_c_prime(p, p.curved_left() + 1e-9) == doctest::Approx(-1).epsilon(1e-3));
  }
  // For c > 1 the left end meets |s| at slope +1, crossing the branch s + 1/c.
  for (double c : {1.5, 2.0}) {
    const ShapeParam p(c);
    CHECK(omega_c_prime(p, p.curved_left()) == 1.0);
    CHECK(omega_c_prime(p, p.curved_left() + 1e-9) == doctest::Approx(1).epsilon(1e-3));
    CHECK(omega_c_prime(p, p.support_left() + 1e-9) == 1.0);
    CHECK(omega_c_prime(p, p.support_left() - 1e-9) == -1.0);
  }
  CHECK(omega_c_prime(ShapeParam(0), 0) == 0.0);
}

TEST_CASE("omega_c_second") {
  CHECK(omega_c_second(ShapeParam(0), 0) == doctest::Approx(2 / kPi));
  CHECK(omega_c_second(ShapeParam(0.5), 1.5) == 0.0);
  CHECK(omega_c_second(ShapeParam(0.5), -3) == 0.0);
  CHECK_THROWS_AS(omega_c_second(ShapeParam(0.5), 1.0), std::domain_error);
  CHECK(omega_c_second_weight(ShapeParam(1), 0.3) == doctest::Approx(1 / kPi));
}

TEST_CASE("phi") {
  CHECK(phi(0, 0.5) == doctest::Approx(0.0));
  CHECK(phi(1, 0.5) == doctest::Approx(0.5));
  CHECK(phi(1, 0) == 0.0);
  CHECK(phi(2, 0) == 0.0);
  CHECK_THROWS_AS(phi(0, 0), std::domain_error);
  CHECK_THROWS_AS(phi(3, 1), std::invalid_argument);
  QuadratureConfig q;
  q.abs_tol = q.rel_tol = 1e-13;
  for (double x : {0.3, 1.0, 2.0, -0.7}) {
    CHECK(std::abs(phi(2, x) - tanh_sinh([](double y) { return phi(1, y); }, 0, x, q).value) < 1e-9);
    CHECK(std::abs(phi(1, x) - tanh_sinh([](double y) { return phi(0, y); }, 0, x, q).value) < 1e-9);
  }
}

TEST_CASE("H functions") {
  for (double c : {0.5, 1.0, 2.0}) {
    const ShapeParam p(c);
    for (double z : {-1.0, -0.4, 0.0, 0.9, 1.0}) CHECK(H_tilde(p, z) == 0.0);
    CHECK(std::abs(H_tilde_prime(p, 1 + 1e-12)) < 1e-5);
    CHECK(std::abs(H_tilde_prime(p, -1 - 1e-12)) < 1e-5);
    CHECK(std::abs(H_tilde(p, 1 + 1e-8)) < 1e-8);
    CHECK(std::abs(H_tilde(p, -1 - 1e-8)) < 1e-8);
    CHECK_THROWS_AS(H_tilde_prime(p, 0.5), std::domain_error);
    CHECK_THROWS_AS(H_tilde_second(p, 1.0), std::domain_error);
  }
  CHECK_THROWS_AS(H_tilde(ShapeParam(0), 2), std::domain_error);
  CHECK_THROWS_AS(G(ShapeParam(0), 0), std::domain_error);
  CHECK_THROWS_AS(J_tilde(ShapeParam(0), 2), std::domain_error);
  CHECK_THROWS_AS(H_tilde_prime(ShapeParam(0.5), -1.25), std::domain_error);

  SUBCASE("sign pattern left of -1") {
    for (double c : {0.5, 2.0}) {
      const ShapeParam p(c);
      for (int k = 1; k < 20; ++k) {
        const double z = -1 - k * (p.alpha() - 1) / 20;
        if (c < 1) CHECK(H_tilde_prime(p, z) >= 0);
        else CHECK(H_tilde_prime(p, z) <= 0);
      }
    }
  }

  SUBCASE("sign of H~''") {
    for (double c : {1.0, 1.5, 3.0}) {
      const ShapeParam p(c);
      CHECK(H_tilde_second(p, 1.5) > 0);
      for (int k = 1; k < 10; ++k) {
        const double z = -1 - k * (p.alpha() - 1) / 10;
        if (c > 1) CHECK(H_tilde_second(p, z) > 0);
      }
    }
    const ShapeParam p(0.5);
    for (double z : {1.2, 3.0, -1.1, -1.2}) CHECK(sign(H_tilde_second(p, z)) == sign(z));
  }

  SUBCASE("J~ vanishes continuously") {
    for (double c : {0.5, 2.0}) {
      const ShapeParam p(c);
      CHECK(J_tilde(p, 0.3) == 0.0);
      CHECK(std::abs(J_tilde(p, 1 + 1e-6)) < 1e-8);
      CHECK(std::abs(J_tilde(p, -1 - 1e-6)) < 1e-8);
    }
  }
}

TEST_CASE("G") {
  for (double c : {0.25, 1.0, 3.0}) CHECK(G(ShapeParam(c), 0) == doctest::Approx(c / 2));
  CHECK(G(ShapeParam(1), 0) == doctest::Approx(0.5));
}

TEST_CASE("finite-difference derivative pairs") {
  for (double c : {0.5, 0.7, 1.0, 2.0}) {
    const ShapeParam p(c);
    const double cl = p.curved_left();
    const double cr = p.curved_right();

    for (double s : points(2, cl - 1, cr + 1, {cl, cr, p.support_left(), 0.0}))
      CHECK(std::abs(central([&](double x) { return omega_c(p, x); }, s) - omega_c_prime(p, s)) < 1e-6);

    for (double z : points(3, -0.95, 0.95, {}))
      CHECK(std::abs(central([&](double x) { return omega_c_prime(p, p.unshift(x)); }, z) -
                     omega_c_second(p, z)) < 1e-6);

    // Both sides of the pole -alpha and of +-1.
    const double pole = -p.alpha();
    for (double z : points(4, -4, 4, {-1.0, 1.0, pole, 0.0}, 0.1)) {
      if (std::abs(z) <= 1) continue;
      CHECK(std::abs(central([&](double x) { return H_tilde(p, x); }, z) - H_tilde_prime(p, z)) < 1e-6);
      CHECK(std::abs(central([&](double x) { return H_tilde_prime(p, x); }, z) - H_tilde_second(p, z)) < 1e-6);
      CHECK(std::abs(central([&](double x) { return J_tilde(p, x); }, z) - H_tilde(p, z)) < 1e-6);
    }

    const double kink = -0.5 / c;
    for (double s : points(5, kink - 2, kink + 2, {kink}))
      CHECK(std::abs(central([&](double x) { return G(p, x); }, s) + std::log(std::abs(1 + 2 * c * s))) < 1e-6);
  }

  for (double x : points(6, -3, 3, {0.0})) {
    CHECK(std::abs(central([](double y) { return phi(1, y); }, x) - phi(0, x)) < 1e-6);
    CHECK(std::abs(central([](double y) { return phi(2, y); }, x) - phi(1, x)) < 1e-6);
  }

  // Stated spot checks.
  CHECK(std::abs(central([](double x) { return H_tilde(ShapeParam(0.5), x); }, 1.5) -
                 H_tilde_prime(ShapeParam(0.5), 1.5)) < 1e-6);
  CHECK(std::abs(central([](double x) { return H_tilde_prime(ShapeParam(0.7), x); }, 2.0) -
                 H_tilde_second(ShapeParam(0.7), 2.0)) < 1e-6);
  for (double c : {0.5, 2.0}) {
    const ShapeParam p(c);
    CHECK(std::abs(central([&](double x) { return J_tilde(p, x); }, 1.7) - H_tilde(p, 1.7)) < 1e-6);
    for (double z : {-0.5, 0.5})
      CHECK(std::abs(central([&](double x) { return omega_c_prime(p, p.unshift(x)); }, z) - omega_c_second(p, z)) <
            1e-6);
  }
}
