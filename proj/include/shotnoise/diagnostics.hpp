#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shotnoise/special_functions.hpp"

namespace shotnoise {

struct NormalityStats {
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double ks_distance = 1.0;  // to N(0, sample variance)
  bool degenerate = false;
};

// Standardized sample moments plus the Kolmogorov-Smirnov distance to a
// centered normal with the sample variance.
inline NormalityStats normality_stats(std::span<const double> samples) {
  if (samples.size() < 100)
    throw std::invalid_argument("normality_stats needs at least 100 samples");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double x : samples) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  NormalityStats out;
  if (!(m2 > 0.0)) {
    out.degenerate = true;
    out.skewness = std::numeric_limits<double>::quiet_NaN();
    out.excess_kurtosis = std::numeric_limits<double>::quiet_NaN();
    out.ks_distance = 1.0;
    return out;
  }
  out.skewness = m3 / std::pow(m2, 1.5);
  out.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  const double sd = std::sqrt(m2);
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i] / sd);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  out.ks_distance = d;
  return out;
}

// Dvoretzky-Kiefer-Wolfowitz band half-width at confidence 1 - alpha.
inline double dkw_epsilon(std::uint64_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("dkw_epsilon needs n > 0, alpha in (0,1)");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

// sup_z |F_a(z) - F_b(z)| and inf_z (F_a(z) - F_b(z)) between two empirical
// distribution functions, via one merged sweep of the sorted samples.
inline std::pair<double, double> empirical_cdf_compare(std::vector<double> a,
                                                       std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("empirical comparison needs nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double sup_abs = 0.0;
  double inf_signed = 0.0;
  while (i < a.size() || j < b.size()) {
    const double v = (i < a.size() && (j >= b.size() || a[i] <= b[j])) ? a[i]
                                                                       : b[j];
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    const double diff = static_cast<double>(i) / na -
                        static_cast<double>(j) / nb;
    sup_abs = std::max(sup_abs, std::abs(diff));
    inf_signed = std::min(inf_signed, diff);
  }
  return {sup_abs, inf_signed};
}

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  return empirical_cdf_compare(std::move(a), std::move(b)).first;
}

}  // namespace shotnoise
