#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "shotnoise/rng.hpp"

namespace shotnoise {

// cov(X(u), X(v)) for the limit process X(u) = B(1-u) + D(u):
// (1-u) ^ (1-v) off the diagonal, 1 on it. The diagonal uses exact equality;
// callers wanting the off-diagonal branch must perturb.
inline double limit_covariance(double u, double v) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("limit covariance arguments must lie in [0,1]");
  if (u == v) return 1.0;
  return std::min(1.0 - u, 1.0 - v);
}

// Variance of sum_i alpha_i X(u_i) for strictly increasing u_1 < ... < u_n:
// sum alpha_i^2 + 2 sum_{k<m} alpha_k alpha_m (1 - u_m).
inline double cramer_wold_variance(std::span<const double> alphas,
                                   std::span<const double> u_grid) {
  if (alphas.size() != u_grid.size())
    throw std::invalid_argument("alphas and u grid sizes differ");
  if (u_grid.empty()) throw std::invalid_argument("u grid is empty");
  for (std::size_t i = 0; i < u_grid.size(); ++i) {
    if (!(u_grid[i] >= 0.0 && u_grid[i] <= 1.0))
      throw std::invalid_argument("u grid must lie in [0,1]");
    if (i > 0 && !(u_grid[i] > u_grid[i - 1]))
      throw std::invalid_argument("u grid must be strictly increasing");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    value += alphas[i] * alphas[i];
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      value += 2.0 * alphas[i] * alphas[j] * (1.0 - u_grid[j]);
  }
  return value;
}

struct LimitGridSample {
  std::vector<double> u_grid;
  std::vector<double> values;
};

// Exact draw of (X(u_1), ..., X(u_K)). The Brownian part is built from
// independent Gaussian increments over the partition induced by {1-u_i};
// D contributes an independent sqrt(u_i)-scaled normal per point (no path
// object exists for D: it has independent values at every point).
inline LimitGridSample sample_limit_fdd(std::span<const double> u_grid,
                                        RngStream& rng) {
  if (u_grid.empty()) throw std::invalid_argument("u grid is empty");
  for (std::size_t i = 0; i < u_grid.size(); ++i) {
    if (!(u_grid[i] >= 0.0 && u_grid[i] <= 1.0))
      throw std::invalid_argument("u grid must lie in [0,1]");
    if (i > 0 && !(u_grid[i] > u_grid[i - 1]))
      throw std::invalid_argument("u grid must be strictly increasing");
  }
  const std::size_t n = u_grid.size();
  std::vector<double> values(n, 0.0);
  double level = 0.0;
  double reached = 0.0;
  for (std::size_t j = n; j-- > 0;) {  // ascending in 1-u
    const double w = 1.0 - u_grid[j];
    if (w > reached) {
      level += std::sqrt(w - reached) * rng.normal();
      reached = w;
    }
    values[j] = level;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (u_grid[i] > 0.0) values[i] += std::sqrt(u_grid[i]) * rng.normal();
  return {std::vector<double>(u_grid.begin(), u_grid.end()),
          std::move(values)};
}

}  // namespace shotnoise
