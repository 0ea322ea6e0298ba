#include <doctest.h>

#include <cmath>
#include <vector>

#include "shotnoise/diagnostics.hpp"
#include "shotnoise/rng.hpp"

using shotnoise::dkw_epsilon;
using shotnoise::empirical_cdf_compare;
using shotnoise::ks_two_sample;
using shotnoise::normality_stats;
using shotnoise::RngStream;

TEST_CASE("normal draws pass the moment gates") {
  RngStream rng(77, 0);
  std::vector<double> x(100000);
  for (auto& v : x) v = rng.normal();
  const auto s = normality_stats(x);
  CHECK_FALSE(s.degenerate);
  CHECK(std::abs(s.skewness) <= 0.05);
  CHECK(std::abs(s.excess_kurtosis) <= 0.1);
  CHECK(s.ks_distance <= 0.012);
}

TEST_CASE("exponential draws are flagged as skewed (negative control)") {
  RngStream rng(77, 1);
  std::vector<double> x(100000);
  for (auto& v : x) v = rng.exponential();
  const auto s = normality_stats(x);
  CHECK(s.skewness == doctest::Approx(2.0).epsilon(0.06));
  CHECK(s.excess_kurtosis == doctest::Approx(6.0).epsilon(0.25));
  CHECK(s.ks_distance > 0.05);
}

TEST_CASE("degenerate samples are reported as such") {
  std::vector<double> x(200, 3.5);
  const auto s = normality_stats(x);
  CHECK(s.degenerate);
  CHECK(s.ks_distance == 1.0);
}

TEST_CASE("sample-size precondition") {
  std::vector<double> x(99, 0.0);
  CHECK_THROWS_AS(normality_stats(x), std::invalid_argument);
}

TEST_CASE("DKW band width") {
  CHECK(dkw_epsilon(100000, 0.01) ==
        doctest::Approx(std::sqrt(std::log(200.0) / 200000.0)).epsilon(1e-12));
  CHECK_THROWS_AS(dkw_epsilon(0, 0.01), std::invalid_argument);
}

TEST_CASE("two-sample empirical comparisons") {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  CHECK(ks_two_sample(a, a) == 0.0);
  const std::vector<double> b = {2.0, 3.0, 4.0};
  const auto [sup, inf] = empirical_cdf_compare(b, a);
  CHECK(sup == doctest::Approx(1.0 / 3.0));
  CHECK(inf == doctest::Approx(-1.0 / 3.0));
  const std::vector<double> lo = {0.0, 0.1};
  const std::vector<double> hi = {10.0, 11.0};
  CHECK(ks_two_sample(lo, hi) == 1.0);
}

TEST_CASE("two-sample distance is small for same-law samples") {
  RngStream rng(77, 2);
  std::vector<double> a(50000);
  std::vector<double> b(50000);
  for (auto& v : a) v = rng.normal();
  for (auto& v : b) v = rng.normal();
  CHECK(ks_two_sample(a, b) <= 2.0 * dkw_epsilon(50000, 0.01));
}
