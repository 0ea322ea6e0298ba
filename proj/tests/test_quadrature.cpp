#include <doctest.h>

#include <array>
#include <cmath>

#include "shotnoise/quadrature.hpp"

using shotnoise::integrate;
using shotnoise::integrate_with_breakpoints;

TEST_CASE("polynomials and smooth integrands") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0,
                  3.14159265358979323846) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 30.0) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("wide logarithmic range") {
  const double v = integrate([](double y) { return 1.0 / y; }, 1.0, 1e12,
                             1e-11);
  CHECK(v == doctest::Approx(std::log(1e12)).epsilon(1e-9));
}

TEST_CASE("empty and degenerate intervals") {
  CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
  CHECK(integrate([](double) { return 1.0; }, 2.0, 1.0) == 0.0);
}

TEST_CASE("breakpoints settle discontinuities exactly") {
  auto step = [](double x) { return x < 1.0 ? 1.0 : 0.0; };
  const std::array<double, 1> cuts = {1.0};
  CHECK(integrate_with_breakpoints(step, 0.0, 2.0, cuts, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-12));
  auto kink = [](double x) { return std::abs(x - 0.3); };
  const std::array<double, 1> cuts2 = {0.3};
  const double expected = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
  CHECK(integrate_with_breakpoints(kink, 0.0, 1.0, cuts2, 1e-12) ==
        doctest::Approx(expected).epsilon(1e-12));
}
