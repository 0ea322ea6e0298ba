#include <doctest.h>

#include <cmath>
#include <vector>

#include "shotnoise/jump_laws.hpp"
#include "shotnoise/renewal.hpp"
#include "shotnoise/response_kernel.hpp"
#include "shotnoise/rng.hpp"

using shotnoise::DelayLaw;
using shotnoise::EvalGrid;
using shotnoise::FddPlan;
using shotnoise::JumpLaw;
using shotnoise::PathCursor;
using shotnoise::ResponseKernel;
using shotnoise::RngStream;
using shotnoise::ScalingKind;

TEST_CASE("the zero-delayed walk starts at the origin") {
  const JumpLaw law = JumpLaw::point_mass(1.0);
  RngStream rng(1, 0);
  PathCursor path(law, rng);
  CHECK(path.next() == 0.0);
  CHECK(path.next() == 1.0);
  CHECK(path.next() == 2.0);
  CHECK(path.next() == 3.0);

  RngStream rng2(1, 1);
  PathCursor exp_path(JumpLaw::exponential(1.0), rng2);
  CHECK(exp_path.next() == 0.0);
  CHECK(exp_path.next() > 0.0);
}

TEST_CASE("the delayed walk starts at the stationary delay") {
  const JumpLaw law = JumpLaw::point_mass(1.0);
  const DelayLaw delay(law);
  RngStream rng(1, 2);
  PathCursor path(law, delay, rng);
  CHECK(path.next() == 1.0);
  CHECK(path.next() == 2.0);
  CHECK(path.next() == 3.0);
}

TEST_CASE("counting renewals") {
  RngStream rng(1, 3);
  CHECK(shotnoise::count_renewals(JumpLaw::point_mass(1.0), 2.5, rng) == 3);
  CHECK(shotnoise::count_renewals(JumpLaw::exponential(1.0), 0.0, rng) == 1);
  CHECK(shotnoise::count_renewals(JumpLaw::uniform(0.0, 2.0), 0.0, rng) == 1);
}

TEST_CASE("mean renewal count of the unit Poisson walk is t + 1") {
  const JumpLaw law = JumpLaw::exponential(1.0);
  const double t = 1000.0;
  const int r = 4000;
  double sum = 0.0;
  for (int i = 0; i < r; ++i) {
    RngStream rng(11, static_cast<std::uint64_t>(i));
    sum += static_cast<double>(shotnoise::count_renewals(law, t, rng));
  }
  const double mean = sum / r;
  const double se = std::sqrt(t / r);  // Var N(t) = t for Poisson arrivals
  CHECK(std::abs(mean - (t + 1.0)) <= 4.0 * se);
}

TEST_CASE("evaluation grid validation") {
  CHECK_THROWS_AS(EvalGrid({}), std::invalid_argument);
  CHECK_THROWS_AS(EvalGrid({1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(EvalGrid({2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(EvalGrid({-1.0}), std::invalid_argument);
}

TEST_CASE("three-shot example of the shot-noise sum") {
  const JumpLaw law = JumpLaw::point_mass(1.0);
  const auto kernel = ResponseKernel::moderate(1.0, 1.0);
  RngStream rng(1, 4);
  const auto y =
      shotnoise::evaluate_shot_noise(law, kernel, EvalGrid({2.5}), rng);
  const double expected =
      1.0 / std::sqrt(2.5) + 1.0 / std::sqrt(1.5) + 1.0;
  CHECK(y[0] == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("at time zero only the origin shot contributes") {
  const auto kernel = ResponseKernel::moderate(1.0, 1.0);
  for (const JumpLaw& law :
       {JumpLaw::exponential(1.0), JumpLaw::point_mass(1.0)}) {
    RngStream rng(1, 5);
    const auto y =
        shotnoise::evaluate_shot_noise(law, kernel, EvalGrid({0.0}), rng);
    CHECK(y[0] == kernel.plateau());
  }
}

TEST_CASE("single-pass evaluation equals the brute-force sum exactly") {
  shotnoise::RngStream meta(77, 0);
  for (int trial = 0; trial < 100; ++trial) {
    JumpLaw law = JumpLaw::exponential(0.5 + 1.5 * meta.u01());
    switch (trial % 4) {
      case 1:
        law = JumpLaw::uniform(0.0, 0.5 + 2.0 * meta.u01());
        break;
      case 2:
        law = JumpLaw::gamma(1.3, 0.7);
        break;
      case 3:
        law = JumpLaw::pareto(1.0, 3.0);
        break;
      default:
        break;
    }
    const ResponseKernel kernel =
        trial % 3 == 0   ? ResponseKernel::moderate(1.0, 1.0)
        : trial % 3 == 1 ? ResponseKernel::moderate(2.0)
                         : ResponseKernel::pure_power(0.3);
    std::vector<double> times;
    const std::size_t k = 1 + static_cast<std::size_t>(4.0 * meta.u01());
    double t = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      t += 1.0 + 200.0 * meta.u01();
      times.push_back(t);
    }
    const std::uint64_t stream = 1000 + static_cast<std::uint64_t>(trial);

    RngStream rng_a(7, stream);
    const auto fast =
        shotnoise::evaluate_shot_noise(law, kernel, EvalGrid(times), rng_a);

    // Brute force: materialize the same path, then sum per time point.
    RngStream rng_b(7, stream);
    PathCursor path(law, rng_b);
    std::vector<double> shots;
    for (double s = path.next(); s <= times.back(); s = path.next())
      shots.push_back(s);
    for (std::size_t i = 0; i < times.size(); ++i) {
      double sum = 0.0;
      for (double s : shots)
        if (s <= times[i]) sum += kernel.h(times[i] - s);
      CHECK(fast[i] == sum);
    }
  }
}

TEST_CASE("fdd replication shape, determinism and validation") {
  const JumpLaw law = JumpLaw::exponential(1.0);
  const auto kernel = ResponseKernel::moderate(1.0, 1.0);
  const std::vector<double> u = {0.0, 0.5, 1.0};
  const FddPlan plan(law, kernel, std::exp(5.0), u, ScalingKind::inverse);
  CHECK(plan.times().size() == u.size());
  CHECK(plan.times()[0] == doctest::Approx(std::exp(5.0)));
  CHECK(plan.times()[2] == doctest::Approx(2.0 * std::exp(5.0)).epsilon(1e-9));

  RngStream r1(9, 1);
  RngStream r2(9, 1);
  const auto a = shotnoise::fdd_replication(plan, r1);
  const auto b = shotnoise::fdd_replication(plan, r2);
  CHECK(a.z.size() == u.size());
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(a.z[i] == b.z[i]);

  CHECK_THROWS_AS(FddPlan(JumpLaw::point_mass(1.0), kernel, 100.0, u,
                          ScalingKind::inverse),
                  std::invalid_argument);
  const std::vector<double> bad = {0.5, 0.2};
  CHECK_THROWS_AS(FddPlan(law, kernel, 100.0, bad, ScalingKind::inverse),
                  std::invalid_argument);
}

TEST_CASE("cursor exposes its position and jump index") {
  const JumpLaw law = JumpLaw::point_mass(2.0);
  RngStream rng(1, 6);
  PathCursor path(law, rng);
  path.next();
  CHECK(path.position() == 0.0);
  CHECK(path.index() == 0);
  path.next();
  path.next();
  CHECK(path.position() == 4.0);
  CHECK(path.index() == 2);
}

TEST_CASE("the closed-form scaling drives the plan when selected") {
  const JumpLaw law = JumpLaw::exponential(1.0);
  const auto kernel = ResponseKernel::moderate(1.0, 1.0);
  const double t = std::exp(5.0);
  const std::vector<double> u = {0.25, 0.75};
  const FddPlan plan(law, kernel, t, u, ScalingKind::asymptotic);
  CHECK(plan.times()[0] == doctest::Approx(t + std::pow(t, 0.25)).epsilon(1e-12));
  CHECK(plan.times()[1] == doctest::Approx(t + std::pow(t, 0.75)).epsilon(1e-12));
  RngStream rng(9, 2);
  CHECK(shotnoise::fdd_replication(plan, rng).z.size() == 2);
}

TEST_CASE("fdd centering leaves the Poisson origin-shot bias") {
  // For exponential jumps E Y(t) = H(t) + h(t), so E Z(0) is h(t)/denominator.
  const JumpLaw law = JumpLaw::exponential(1.0);
  const auto kernel = ResponseKernel::moderate(1.0, 1.0);
  const double t = std::exp(5.0);
  const std::vector<double> u = {0.0};
  const FddPlan plan(law, kernel, t, u, ScalingKind::inverse);
  const int r = 20000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int i = 0; i < r; ++i) {
    RngStream rng(21, static_cast<std::uint64_t>(i));
    const double z = shotnoise::fdd_replication(plan, rng).z[0];
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / r;
  const double var = sum2 / r - mean * mean;
  const double se = std::sqrt(var / r);
  const double predicted = kernel.h(t) / plan.denominator();
  CHECK(std::abs(mean - predicted) <= 5.0 * se);
}
