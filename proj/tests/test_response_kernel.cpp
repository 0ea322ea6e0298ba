#include <doctest.h>

#include <cmath>
#include <vector>

#include "shotnoise/quadrature.hpp"
#include "shotnoise/response_kernel.hpp"
#include "shotnoise/rng.hpp"

using shotnoise::KernelFamily;
using shotnoise::ResponseKernel;

namespace {
constexpr double kE = 2.718281828459045235360287;
}

TEST_CASE("response values and the plateau") {
  const auto k = ResponseKernel::moderate(1.0, 1.0);
  CHECK(k.h(4.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(k.h(0.5) == 1.0);
  CHECK(k.h(0.0) == 1.0);
  const auto k3 = ResponseKernel::moderate(3.0, kE * kE);
  CHECK(k3.h(std::exp(4.0)) ==
        doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("square integral closed forms") {
  const auto k = ResponseKernel::moderate(1.0, 1.0);
  CHECK(k.square_integral(0.0) == 0.0);
  CHECK(k.square_integral(std::exp(9.0)) == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(k.square_integral(std::exp(7.0)) == doctest::Approx(8.0).epsilon(1e-13));
  // moderate(2) with cutoff e: plateau mass e * h(e)^2 = 1, then
  // int_e^{e^4} (log y)/y dy = (16 - 1)/2.
  const auto k2 = ResponseKernel::moderate(2.0, kE);
  CHECK(k2.square_integral(std::exp(4.0)) ==
        doctest::Approx(8.5).epsilon(1e-13));
  // The slowly varying factor vanishes at t = 1 for rho != 1, so a cutoff
  // there has no valid plateau.
  CHECK_THROWS_AS(ResponseKernel::moderate(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("square integral inverse closed forms") {
  const auto k = ResponseKernel::moderate(1.0, 1.0);
  CHECK(k.square_integral_inverse(10.0) ==
        doctest::Approx(std::exp(9.0)).epsilon(1e-12));
  CHECK(k.square_integral_inverse(0.0) == 0.0);
  CHECK(k.square_integral_inverse(0.5) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("primitive closed forms and the empty integral") {
  const auto k = ResponseKernel::moderate(1.0, 1.0);
  CHECK(k.primitive(0.0) == 0.0);
  CHECK(k.primitive(4.0) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(k.primitive(100.0) == doctest::Approx(19.0).epsilon(1e-13));
}

TEST_CASE("primitive by quadrature matches hand integration") {
  // moderate(3) with cutoff e^2: plateau part 2e, beyond it
  // int e^{s/2} s ds = e^{s/2}(2s-4) between 2 and 4 gives 4e^2.
  const auto k = ResponseKernel::moderate(3.0, kE * kE);
  CHECK_FALSE(k.closed_form_primitive());
  CHECK(k.primitive(std::exp(4.0)) ==
        doctest::Approx(2.0 * kE + 4.0 * kE * kE).epsilon(1e-9));
  // Generic route: compare against direct linear-space quadrature.
  const ResponseKernel kernels[] = {ResponseKernel::moderate(2.0),
                                    ResponseKernel::slow(1.0),
                                    ResponseKernel::fast(1.0, 0.5)};
  for (const auto& kk : kernels) {
    const double t = 1e3;
    const std::vector<double> cuts = {kk.cutoff()};
    const double direct = shotnoise::integrate_with_breakpoints(
        [&kk](double y) { return kk.h(y); }, 0.0, t, cuts, 1e-12);
    CHECK(kk.primitive(t) == doctest::Approx(direct).epsilon(1e-8));
  }
}

TEST_CASE("quadrature route reproduces the closed-form square integral") {
  const ResponseKernel kernels[] = {
      ResponseKernel::moderate(1.0, 1.0), ResponseKernel::moderate(2.5),
      ResponseKernel::slow(1.0),          ResponseKernel::slow(2.0),
      ResponseKernel::fast(1.5, 0.5),     ResponseKernel::pure_power(0.25)};
  for (const auto& k : kernels)
    for (double t : {0.5, 5.0, 1e3, 1e7, 1e11})
      CHECK(k.square_integral_quad(t) ==
            doctest::Approx(k.square_integral(t)).epsilon(1e-8));
}

TEST_CASE("bisection inverse agrees with the closed form") {
  const ResponseKernel kernels[] = {ResponseKernel::moderate(2.5),
                                    ResponseKernel::slow(1.0),
                                    ResponseKernel::fast(1.5, 0.5),
                                    ResponseKernel::pure_power(-0.25)};
  for (const auto& k : kernels)
    for (double t : {2.0, 50.0, 1e4, 1e9}) {
      const double v = k.square_integral(t);
      const double closed = k.square_integral_inverse(v);
      const double bisect = k.square_integral_inverse_bisect(v);
      CHECK(bisect == doctest::Approx(closed).epsilon(1e-9));
    }
}

TEST_CASE("time scaling endpoints and the defining property") {
  const auto k = ResponseKernel::moderate(1.0, 1.0);
  const double t = std::exp(9.0);
  CHECK(k.time_scaling(t, 0.5) == doctest::Approx(std::exp(4.0)).epsilon(1e-12));
  CHECK(k.time_scaling(t, 0.0) == 0.0);
  CHECK(k.time_scaling(t, 1.0) == doctest::Approx(t).epsilon(1e-9));
  CHECK_THROWS_AS(k.time_scaling(t, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(k.time_scaling(0.0, 0.5), std::invalid_argument);
}

TEST_CASE("property: m(g(t,u))/m(t) = u within 1e-8 for random (t,u)") {
  const ResponseKernel kernels[] = {
      ResponseKernel::moderate(1.0, 1.0), ResponseKernel::moderate(2.5),
      ResponseKernel::slow(1.0),          ResponseKernel::fast(1.5, 0.5),
      ResponseKernel::pure_power(0.25)};
  shotnoise::RngStream rng(314, 0);
  for (const auto& k : kernels)
    for (int i = 0; i < 200; ++i) {
      const double t = std::pow(10.0, 2.0 + 10.0 * rng.u01());
      const double u = rng.u01();
      const double g = k.time_scaling(t, u);
      CHECK(std::abs(k.square_integral(g) / k.square_integral(t) - u) <= 1e-8);
    }
}

TEST_CASE("inverse contract |m(m_inv(v)) - v| <= 1e-9 max(1,v)") {
  const ResponseKernel kernels[] = {
      ResponseKernel::moderate(1.0, 1.0), ResponseKernel::moderate(3.0),
      ResponseKernel::slow(2.0),          ResponseKernel::fast(1.0, 0.5),
      ResponseKernel::pure_power(0.5)};
  shotnoise::RngStream rng(314, 1);
  for (const auto& k : kernels) {
    const double v_hi = k.square_integral(1e10);
    for (int i = 0; i < 100; ++i) {
      const double v = v_hi * std::pow(10.0, -6.0 * rng.u01());
      const double t = k.square_integral_inverse(v);
      CHECK(std::abs(k.square_integral(t) - v) <= 1e-9 * std::max(1.0, v));
    }
  }
}

TEST_CASE("closed-form large-t scalings") {
  const auto k1 = ResponseKernel::moderate(1.0, 1.0);
  CHECK(k1.asymptotic_scaling(std::exp(9.0), 0.5) ==
        doctest::Approx(std::exp(4.5)).epsilon(1e-12));
  const auto k4 = ResponseKernel::moderate(4.0);
  CHECK(k4.asymptotic_scaling(std::exp(16.0), 1.0 / 16.0) ==
        doctest::Approx(std::exp(8.0)).epsilon(1e-12));
  const auto ks = ResponseKernel::slow(1.0);
  CHECK(ks.asymptotic_scaling(std::exp(std::exp(4.0)), 0.5) ==
        doctest::Approx(std::exp(kE * kE)).epsilon(1e-12));
  const auto kp = ResponseKernel::pure_power(0.5);
  CHECK_THROWS_AS(kp.asymptotic_scaling(1e6, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(k1.asymptotic_scaling(0.5, 0.5), std::invalid_argument);
}

TEST_CASE("asymptotic scaling satisfies the ratio property in the limit") {
  // |m(g(t,u))/m(t) - u| shrinks monotonically along a geometric grid.
  struct Case {
    ResponseKernel kernel;
    std::vector<double> us;
    double t_lo;
  };
  const Case cases[] = {
      {ResponseKernel::moderate(1.0, 1.0), {0.25, 0.5, 0.75}, 1e2},
      {ResponseKernel::moderate(2.0), {0.25, 0.5, 0.75}, 1e2},
      {ResponseKernel::slow(1.0), {0.5, 0.75}, 1e4},
      {ResponseKernel::fast(1.0, 0.5), {0.5, 0.75}, 1e6},
  };
  for (const auto& c : cases)
    for (double u : c.us) {
      double prev = -1.0;
      for (double t = c.t_lo; t <= 1.0001e12; t *= 100.0) {
        const double g = c.kernel.asymptotic_scaling(t, u);
        const double dev =
            std::abs(c.kernel.square_integral(g) / c.kernel.square_integral(t) -
                     u);
        if (prev >= 0.0) CHECK(dev <= prev + 1e-9);
        prev = dev;
      }
    }
}

TEST_CASE("h is nonincreasing on a dense grid for the -1/2 families") {
  const ResponseKernel kernels[] = {
      ResponseKernel::moderate(1.0, 1.0), ResponseKernel::moderate(3.0),
      ResponseKernel::slow(1.0),          ResponseKernel::slow(2.0),
      ResponseKernel::fast(1.0, 0.5),     ResponseKernel::fast(2.0, 0.75)};
  for (const auto& k : kernels) {
    double prev = k.h(1e-3);
    for (int i = 1; i <= 2000; ++i) {
      const double t = 1e-3 * std::pow(1e13, i / 2000.0);
      const double v = k.h(t);
      CHECK(v <= prev * (1.0 + 1e-12));
      prev = v;
    }
  }
}

TEST_CASE("m is slowly varying for the -1/2 families") {
  const ResponseKernel kernels[] = {ResponseKernel::moderate(1.0, 1.0),
                                    ResponseKernel::slow(1.0),
                                    ResponseKernel::fast(1.0, 0.5)};
  for (const auto& k : kernels) {
    double prev = 1e100;
    for (double t = 1e2; t <= 1.0001e12; t *= 100.0) {
      const double ratio = k.square_integral(2.0 * t) / k.square_integral(t);
      CHECK(ratio >= 1.0);
      CHECK(ratio <= prev + 1e-12);
      prev = ratio;
    }
    CHECK(prev < 1.1);
  }
}

TEST_CASE("Karamata ratio for power kernels: m/(t h^2) -> 1/(2 beta + 1)") {
  const auto k0 = ResponseKernel::pure_power(0.0, 1.0);
  const double t0 = 1e6;
  CHECK(k0.square_integral_quad(t0) / (t0 * k0.h(t0) * k0.h(t0)) ==
        doctest::Approx(1.0).epsilon(1e-5));
  const auto k5 = ResponseKernel::pure_power(0.5, 1.0);
  const double t5 = 1e10;
  const double ratio = k5.square_integral_quad(t5) / (t5 * k5.h(t5) * k5.h(t5));
  CHECK(std::abs(ratio - 0.5) <= 1e-2 * 0.5);
}

TEST_CASE("Karamata ratio for -1/2 families: t h^2 / m -> 0 monotonically") {
  const ResponseKernel kernels[] = {ResponseKernel::moderate(1.0, 1.0),
                                    ResponseKernel::slow(1.0),
                                    ResponseKernel::fast(1.0, 0.5)};
  for (const auto& k : kernels) {
    double prev = 1e100;
    for (double t = 1e2; t <= 1.0001e12; t *= 100.0) {
      const double h = k.h(t);
      const double ratio = t * h * h / k.square_integral(t);
      CHECK(ratio < prev);
      prev = ratio;
    }
    CHECK(prev < 0.1);
  }
  const auto k = ResponseKernel::moderate(1.0, 1.0);
  const double t = std::exp(9.0);
  CHECK(t * k.h(t) * k.h(t) / k.square_integral(t) ==
        doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("normalization equivalence for power kernels") {
  // sqrt(m(t)) ~ (2 beta + 1)^{-1/2} sqrt(t) h(t)
  for (double beta : {0.0, 0.5, -0.25}) {
    const auto k = ResponseKernel::pure_power(beta, 1.0);
    const double t = 1e10;
    const double lhs = std::sqrt(k.square_integral_quad(t));
    const double rhs = std::sqrt(t / (2.0 * beta + 1.0)) * k.h(t);
    CHECK(std::abs(lhs / rhs - 1.0) <= 1e-2);
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(ResponseKernel::moderate(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ResponseKernel::moderate(0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ResponseKernel::slow(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(ResponseKernel::fast(1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(ResponseKernel::pure_power(-0.6), std::invalid_argument);
  CHECK(ResponseKernel::moderate(1.0).closed_form_primitive());
  CHECK_FALSE(ResponseKernel::moderate(2.0).closed_form_primitive());
  CHECK(ResponseKernel::pure_power(0.3).closed_form_primitive());
}

TEST_CASE("default cutoffs sit at the stationary point") {
  // moderate(rho > 1): h peaks at exp(rho - 1); the plateau starts there.
  const auto k = ResponseKernel::moderate(3.0);
  CHECK(k.cutoff() == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
  // slow(rho = 5): the e^e default still rises; the cutoff moves right.
  const auto ks = ResponseKernel::slow(5.0);
  CHECK(ks.cutoff() > std::exp(kE));
  const double c = ks.cutoff();
  CHECK(ks.h(c * 1.0001) < ks.h(c) * (1.0 + 1e-12));
}
