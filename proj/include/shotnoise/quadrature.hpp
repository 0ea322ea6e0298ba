#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace shotnoise {

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

template <class F>
std::pair<double, double> gk15_panel(F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double acc_k = kKronrodWeights[7] * fc;
  double acc_g = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair_sum = f(mid - dx) + f(mid + dx);
    acc_k += kKronrodWeights[j] * pair_sum;
    if (j % 2 == 1) acc_g += kGaussWeights[j / 2] * pair_sum;
  }
  return {acc_k * half, std::abs(acc_k - acc_g) * half};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration: the segment with the largest
// error estimate is bisected until the summed error meets the tolerance.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 0.0, int max_panels = 4000) {
  if (!(b > a)) return 0.0;
  struct Segment {
    double a, b, value, error;
  };
  std::vector<Segment> segments;
  double total = 0.0;
  double error = 0.0;
  auto push = [&](double lo, double hi) {
    auto [v, e] = detail::gk15_panel(f, lo, hi);
    segments.push_back({lo, hi, v, e});
    total += v;
    error += e;
  };
  push(a, b);
  while (error > std::max(abs_tol, rel_tol * std::abs(total)) &&
         static_cast<int>(segments.size()) < max_panels) {
    auto worst = std::max_element(
        segments.begin(), segments.end(),
        [](const Segment& x, const Segment& y) { return x.error < y.error; });
    const Segment w = *worst;
    total -= w.value;
    error -= w.error;
    *worst = segments.back();
    segments.pop_back();
    const double mid = 0.5 * (w.a + w.b);
    if (!(mid > w.a && mid < w.b)) {  // interval at floating-point resolution
      total += w.value;
      error += 0.0;
      segments.push_back({w.a, w.b, w.value, 0.0});
      continue;
    }
    push(w.a, mid);
    push(mid, w.b);
  }
  return total;
}

// Same, with user-supplied interior breakpoints (kinks of the integrand).
// Sub-panels are integrated to the relative tolerance individually; for
// nonnegative integrands the total then meets the same relative target.
template <class F>
double integrate_with_breakpoints(F&& f, double a, double b,
                                  std::span<const double> breakpoints,
                                  double rel_tol = 1e-10) {
  if (!(b > a)) return 0.0;
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double p : breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate(f, cuts[i], cuts[i + 1], rel_tol);
  return total;
}

}  // namespace shotnoise
