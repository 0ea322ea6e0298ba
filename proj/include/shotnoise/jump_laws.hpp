#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shotnoise/rng.hpp"
#include "shotnoise/special_functions.hpp"

namespace shotnoise {

enum class JumpFamily { exponential, gamma, uniform, pareto, point_mass };

namespace detail {

// Marsaglia-Tsang for shape >= 1; shape < 1 boosted through shape+1.
inline double sample_unit_gamma(double shape, RngStream& rng) {
  if (shape < 1.0) {
    const double g = sample_unit_gamma(shape + 1.0, rng);
    return g * std::pow(rng.u01_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.u01_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace detail

// A parametric positive jump distribution with exact first and second
// moments and a declared finite moment order r > 2.
class JumpLaw {
 public:
  static JumpLaw exponential(double rate,
                             std::optional<double> moment_order = {}) {
    require(rate > 0.0, "exponential rate must be positive");
    return JumpLaw(JumpFamily::exponential, rate, 0.0, 1.0 / rate,
                   1.0 / (rate * rate), moment_order.value_or(3.0));
  }

  static JumpLaw gamma(double shape, double scale,
                       std::optional<double> moment_order = {}) {
    require(shape > 0.0 && scale > 0.0,
            "gamma shape and scale must be positive");
    return JumpLaw(JumpFamily::gamma, shape, scale, shape * scale,
                   shape * scale * scale, moment_order.value_or(3.0));
  }

  static JumpLaw uniform(double lo, double hi,
                         std::optional<double> moment_order = {}) {
    require(lo >= 0.0 && hi > lo, "uniform needs 0 <= a < b");
    const double w = hi - lo;
    return JumpLaw(JumpFamily::uniform, lo, hi, 0.5 * (lo + hi), w * w / 12.0,
                   moment_order.value_or(3.0));
  }

  static JumpLaw pareto(double scale, double tail_index,
                        std::optional<double> moment_order = {}) {
    require(scale > 0.0, "pareto scale must be positive");
    require(tail_index > 2.0,
            "pareto tail index must exceed 2 for a finite variance");
    const double k = tail_index;
    const double mean = k * scale / (k - 1.0);
    const double var = scale * scale * k / ((k - 1.0) * (k - 1.0) * (k - 2.0));
    const double r = moment_order.value_or(0.5 * (2.0 + k));
    require(r < k, "pareto moment order must be below the tail index");
    return JumpLaw(JumpFamily::pareto, scale, k, mean, var, r);
  }

  static JumpLaw point_mass(double value,
                            std::optional<double> moment_order = {}) {
    require(value > 0.0, "point mass must be positive");
    return JumpLaw(JumpFamily::point_mass, value, 0.0, value, 0.0,
                   moment_order.value_or(3.0));
  }

  JumpFamily family() const { return family_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double moment_order() const { return moment_order_; }
  bool is_lattice() const { return family_ == JumpFamily::point_mass; }
  double lattice_span() const { return is_lattice() ? p1_ : 0.0; }

  // One draw; strictly positive for every family.
  double sample(RngStream& rng) const {
    switch (family_) {
      case JumpFamily::exponential:
        return rng.exponential() / p1_;
      case JumpFamily::gamma:
        return detail::sample_unit_gamma(p1_, rng) * p2_;
      case JumpFamily::uniform:
        return p1_ + (p2_ - p1_) * rng.u01_open();
      case JumpFamily::pareto:
        return p1_ * std::pow(rng.u01_open(), -1.0 / p2_);
      case JumpFamily::point_mass:
        return p1_;
    }
    return p1_;
  }

  // P{xi > y}.
  double tail(double y) const {
    if (y < 0.0) return 1.0;
    switch (family_) {
      case JumpFamily::exponential:
        return std::exp(-p1_ * y);
      case JumpFamily::gamma:
        return gamma_q(p1_, y / p2_);
      case JumpFamily::uniform:
        if (y < p1_) return 1.0;
        if (y >= p2_) return 0.0;
        return (p2_ - y) / (p2_ - p1_);
      case JumpFamily::pareto:
        return y < p1_ ? 1.0 : std::pow(p1_ / y, p2_);
      case JumpFamily::point_mass:
        return y < p1_ ? 1.0 : 0.0;
    }
    return 0.0;
  }

  // Closed form of \int_0^x P{xi > y} dy, the unnormalized stationary-delay
  // distribution function.
  double integrated_tail(double x) const {
    if (x <= 0.0) return 0.0;
    switch (family_) {
      case JumpFamily::exponential:
        return (1.0 - std::exp(-p1_ * x)) / p1_;
      case JumpFamily::gamma:
        return mean_ * gamma_p(p1_ + 1.0, x / p2_) + x * gamma_q(p1_, x / p2_);
      case JumpFamily::uniform: {
        if (x <= p1_) return x;
        if (x >= p2_) return mean_;
        const double w = p2_ - p1_;
        return p1_ + (w * w - (p2_ - x) * (p2_ - x)) / (2.0 * w);
      }
      case JumpFamily::pareto: {
        if (x <= p1_) return x;
        return p1_ + p1_ * (1.0 - std::pow(x / p1_, 1.0 - p2_)) / (p2_ - 1.0);
      }
      case JumpFamily::point_mass:
        return std::min(x, p1_);
    }
    return 0.0;
  }

  // Raw family parameters: (rate,-), (shape,scale), (a,b), (scale,index),
  // (value,-).
  double param1() const { return p1_; }
  double param2() const { return p2_; }

 private:
  JumpLaw(JumpFamily family, double p1, double p2, double mean, double var,
          double moment_order)
      : family_(family),
        p1_(p1),
        p2_(p2),
        mean_(mean),
        variance_(var),
        moment_order_(moment_order) {
    require(moment_order_ > 2.0, "moment order must exceed 2");
  }

  static void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  }

  JumpFamily family_;
  double p1_;
  double p2_;
  double mean_;
  double variance_;
  double moment_order_;
};

// Stationary-delay distribution of the renewal process:
//   cdf(x) = mean^{-1} \int_0^x P{xi > y} dy     (nonarithmetic families)
//   P{delay = d} = 1                             (point mass at d).
// Exponential and pareto invert in closed form; uniform and gamma invert a
// 4096-point monotone table with one Newton refinement against the exact cdf.
class DelayLaw {
 public:
  explicit DelayLaw(const JumpLaw& base) : base_(base) {
    switch (base_.family()) {
      case JumpFamily::uniform:
        build_table(base_.param2());
        break;
      case JumpFamily::gamma: {
        double hi = base_.mean();
        while (1.0 - cdf_exact(hi) > 1e-13) hi *= 2.0;
        build_table(hi);
        break;
      }
      default:
        break;
    }
  }

  const JumpLaw& base() const { return base_; }

  double cdf(double x) const {
    if (base_.family() == JumpFamily::point_mass)
      return x >= base_.param1() ? 1.0 : 0.0;
    return cdf_exact(x);
  }

  // Quantile transform; |cdf(quantile(u)) - u| <= 1e-10 on (0,1).
  double quantile(double u) const {
    switch (base_.family()) {
      case JumpFamily::exponential:
        return -std::log1p(-u) / base_.param1();
      case JumpFamily::point_mass:
        return base_.param1();
      case JumpFamily::pareto: {
        const double xm = base_.param1();
        const double k = base_.param2();
        const double target = base_.mean() * u;
        if (target <= xm) return target;
        const double z = 1.0 - (k - 1.0) * (target - xm) / xm;
        return xm * std::pow(z, 1.0 / (1.0 - k));
      }
      default:
        return invert_table(u);
    }
  }

  double sample(RngStream& rng) const { return quantile(rng.u01_open()); }

 private:
  double cdf_exact(double x) const {
    return base_.integrated_tail(x) / base_.mean();
  }

  void build_table(double x_max) {
    constexpr std::size_t n = 4096;
    x_max_ = x_max;
    grid_x_.resize(n);
    grid_f_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      grid_x_[i] = x_max * static_cast<double>(i) / static_cast<double>(n - 1);
      grid_f_[i] = cdf_exact(grid_x_[i]);
    }
  }

  double invert_table(double u) const {
    if (u >= grid_f_.back()) return x_max_;
    const auto it = std::upper_bound(grid_f_.begin(), grid_f_.end(), u);
    const std::size_t hi = static_cast<std::size_t>(it - grid_f_.begin());
    const std::size_t lo = hi == 0 ? 0 : hi - 1;
    double a = grid_x_[lo];
    double b = grid_x_[std::min(hi, grid_x_.size() - 1)];
    const double fa = grid_f_[lo];
    const double fb = grid_f_[std::min(hi, grid_f_.size() - 1)];
    double x = fb > fa ? a + (u - fa) * (b - a) / (fb - fa) : a;
    const double density = base_.tail(x) / base_.mean();
    if (density > 1e-12) {
      x -= (cdf_exact(x) - u) / density;
      x = std::clamp(x, a, b);
    }
    // The Newton step settles smooth cells; bisect the rare flat ones.
    for (int i = 0; i < 80 && std::abs(cdf_exact(x) - u) > 1e-10; ++i) {
      (cdf_exact(x) > u ? b : a) = x;
      x = 0.5 * (a + b);
    }
    return x;
  }

  JumpLaw base_;
  std::vector<double> grid_x_;
  std::vector<double> grid_f_;
  double x_max_ = 0.0;
};

}  // namespace shotnoise
