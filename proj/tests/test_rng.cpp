#include <doctest.h>

#include <cmath>
#include <vector>

#include "shotnoise/rng.hpp"

using shotnoise::RngStream;

TEST_CASE("identical (seed, stream) pairs reproduce identical sequences") {
  RngStream a(12345, 7);
  RngStream b(12345, 7);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams and seeds differ") {
  RngStream a(12345, 7);
  RngStream b(12345, 8);
  RngStream c(12346, 7);
  int same_ab = 0;
  int same_ac = 0;
  for (int i = 0; i < 256; ++i) {
    const auto x = a.next_u64();
    if (x == b.next_u64()) ++same_ab;
    if (x == c.next_u64()) ++same_ac;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("uniform variates stay inside their ranges") {
  RngStream rng(1, 1);
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.u01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.u01_open();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("normal and exponential draws have the right low moments") {
  RngStream rng(2024, 0);
  const int n = 200000;
  double sn = 0.0;
  double sn2 = 0.0;
  double se = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
    se += rng.exponential();
  }
  const double mean_n = sn / n;
  const double var_n = sn2 / n - mean_n * mean_n;
  const double mean_e = se / n;
  CHECK(std::abs(mean_n) < 5.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var_n - 1.0) < 5.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(mean_e - 1.0) < 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("stream_index partitions tag and index") {
  CHECK(shotnoise::stream_index(0, 0) == 0);
  CHECK(shotnoise::stream_index(1, 0) == (1ULL << 48));
  CHECK(shotnoise::stream_index(1, 5) == ((1ULL << 48) | 5));
  CHECK(shotnoise::stream_index(2, 5) != shotnoise::stream_index(1, 5));
}
