#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "shotnoise/quadrature.hpp"

namespace shotnoise {

enum class KernelFamily { moderate, slow, fast, pure_power };

// Which construction of the time scaling g(t,u) to use. "inverse" is the
// generalized inverse of the square integral; "asymptotic" the closed-form
// scalings valid for large t (config token "remark3").
enum class ScalingKind { inverse, asymptotic };

// Response function h(t) = t^{-1/2} l(t) beyond a cutoff t_min, held constant
// at h(t_min) below it so that h is nonincreasing on all of [0,inf) for the
// index -1/2 families. The slowly varying factor per family (canonical L == 1):
//   moderate(rho):    l(t) = (log t)^((rho-1)/2)
//   slow(rho):        l(t) = (log t)^(-1/2) (log log t)^((rho-1)/2)
//   fast(rho,gamma):  l(t) = exp((rho/2)(log t)^gamma) (log t)^((gamma-1)/2)
// pure_power(beta) is h(t) = t^beta with beta > -1/2, the square-integrable
// regular-variation regime used for the Karamata cross-checks.
class ResponseKernel {
 public:
  static ResponseKernel moderate(double rho,
                                 std::optional<double> t_min = {}) {
    require(rho > 0.0, "moderate kernel needs rho > 0");
    double cutoff;
    if (t_min) {
      require(rho == 1.0 ? *t_min > 0.0 : *t_min > 1.0,
              "moderate kernel needs t_min > 1 (t_min > 0 when rho == 1)");
      cutoff = *t_min;
    } else {
      cutoff = rho > 1.0 ? std::exp(rho - 1.0) : (rho == 1.0 ? 1.0 : kE);
    }
    return ResponseKernel(KernelFamily::moderate, rho, 0.0, cutoff);
  }

  static ResponseKernel slow(double rho, std::optional<double> t_min = {}) {
    require(rho > 0.0, "slow kernel needs rho > 0");
    double cutoff;
    if (t_min) {
      require(*t_min > kE, "slow kernel needs t_min > e");
      cutoff = *t_min;
    } else {
      const double start = monotone_start(
          [rho](double s) {
            return -0.5 - 0.5 / s + 0.5 * (rho - 1.0) / (s * std::log(s));
          },
          1.0 + 1e-6);
      cutoff = std::max(std::exp(kE), std::exp(start));
    }
    return ResponseKernel(KernelFamily::slow, rho, 0.0, cutoff);
  }

  static ResponseKernel fast(double rho, double gamma,
                             std::optional<double> t_min = {}) {
    require(rho > 0.0, "fast kernel needs rho > 0");
    require(gamma > 0.0 && gamma < 1.0, "fast kernel needs gamma in (0,1)");
    double cutoff;
    if (t_min) {
      require(*t_min > 1.0, "fast kernel needs t_min > 1");
      cutoff = *t_min;
    } else {
      const double start = monotone_start(
          [rho, gamma](double s) {
            return -0.5 + 0.5 * rho * gamma * std::pow(s, gamma - 1.0) +
                   0.5 * (gamma - 1.0) / s;
          },
          1e-3);
      cutoff = std::exp(start);
    }
    return ResponseKernel(KernelFamily::fast, rho, gamma, cutoff);
  }

  static ResponseKernel pure_power(double beta,
                                   std::optional<double> t_min = {}) {
    require(beta > -0.5, "pure_power kernel needs beta > -1/2");
    const double cutoff = t_min.value_or(1.0);
    require(cutoff > 0.0, "pure_power kernel needs t_min > 0");
    return ResponseKernel(KernelFamily::pure_power, beta, 0.0, cutoff);
  }

  KernelFamily family() const { return family_; }
  double rho() const { return p1_; }
  double beta() const { return p1_; }
  double gamma_exponent() const { return p2_; }
  double cutoff() const { return cutoff_; }
  double plateau() const { return plateau_; }

  bool closed_form_primitive() const {
    return family_ == KernelFamily::pure_power ||
           (family_ == KernelFamily::moderate && p1_ == 1.0);
  }
  bool closed_form_square_integral() const { return true; }
  bool closed_form_inverse() const { return true; }

  // h(t); constant h(t_min) on [0, t_min).
  double h(double t) const {
    if (t <= cutoff_) return plateau_;
    return raw_h(t);
  }

  // H(t) = \int_0^t h(y) dy.
  double primitive(double t) const {
    if (t <= 0.0) return 0.0;
    if (t <= cutoff_) return t * plateau_;
    const double base = cutoff_ * plateau_;
    switch (family_) {
      case KernelFamily::moderate:
        if (p1_ == 1.0)
          return base + 2.0 * (std::sqrt(t) - std::sqrt(cutoff_));
        break;
      case KernelFamily::pure_power:
        return base + (std::pow(t, p1_ + 1.0) - std::pow(cutoff_, p1_ + 1.0)) /
                          (p1_ + 1.0);
      default:
        break;
    }
    const double s1 = std::log(t);
    return base + integrate(
                      [this](double s) {
                        const double y = std::exp(s);
                        return raw_h(y) * y;
                      },
                      log_cutoff_, s1, 1e-11);
  }

  // m(t) = \int_0^t h^2(y) dy, in closed form.
  double square_integral(double t) const {
    if (t <= 0.0) return 0.0;
    if (t <= cutoff_) return t * plateau_ * plateau_;
    switch (family_) {
      case KernelFamily::moderate: {
        const double s = std::log(t);
        return m0_ + (std::pow(s, p1_) - std::pow(log_cutoff_, p1_)) / p1_;
      }
      case KernelFamily::slow: {
        const double w = std::log(std::log(t));
        return m0_ +
               (std::pow(w, p1_) - std::pow(log_log_cutoff_, p1_)) / p1_;
      }
      case KernelFamily::fast: {
        const double s = std::log(t);
        return m0_ + (std::exp(p1_ * std::pow(s, p2_)) - fast_at_cutoff_) /
                         (p1_ * p2_);
      }
      case KernelFamily::pure_power: {
        const double e = 2.0 * p1_ + 1.0;
        return m0_ + (std::pow(t, e) - std::pow(cutoff_, e)) / e;
      }
    }
    return m0_;
  }

  // Same integral by adaptive quadrature after the substitution y = e^s;
  // kept as an independent route for cross-checks and the Karamata tables.
  double square_integral_quad(double t, double rel_tol = 1e-10) const {
    if (t <= 0.0) return 0.0;
    if (t <= cutoff_) return t * plateau_ * plateau_;
    return m0_ + integrate(
                     [this](double s) {
                       const double y = std::exp(s);
                       const double v = raw_h(y);
                       return v * v * y;
                     },
                     log_cutoff_, std::log(t), rel_tol);
  }

  // Generalized inverse of m: the least t with m(t) >= v.
  double square_integral_inverse(double v) const {
    if (v <= 0.0) return 0.0;
    if (v <= m0_) return v / (plateau_ * plateau_);
    switch (family_) {
      case KernelFamily::moderate:
        return std::exp(std::pow(
            p1_ * (v - m0_) + std::pow(log_cutoff_, p1_), 1.0 / p1_));
      case KernelFamily::slow:
        return std::exp(std::exp(std::pow(
            p1_ * (v - m0_) + std::pow(log_log_cutoff_, p1_), 1.0 / p1_)));
      case KernelFamily::fast: {
        const double rhs = p1_ * p2_ * (v - m0_) + fast_at_cutoff_;
        return std::exp(std::pow(std::log(rhs) / p1_, 1.0 / p2_));
      }
      case KernelFamily::pure_power: {
        const double e = 2.0 * p1_ + 1.0;
        return std::pow(e * (v - m0_) + std::pow(cutoff_, e), 1.0 / e);
      }
    }
    return 0.0;
  }

  // The same inverse by doubling an upper bracket until m covers v, then
  // bisecting; robust against the flatness of slowly varying m.
  double square_integral_inverse_bisect(double v) const {
    if (v <= 0.0) return 0.0;
    double hi = std::max(cutoff_, 1.0);
    while (square_integral(hi) < v) {
      hi *= 2.0;
      if (hi > 1e300)
        throw std::domain_error("square integral bracket overflow");
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (square_integral(mid) >= v ? hi : lo) = mid;
    }
    return hi;
  }

  // g(t,u) = m^{<-}(u m(t)); nondecreasing in u, g(t,0)=0, g(t,1)=t.
  double time_scaling(double t, double u) const {
    check_unit_interval(u);
    require(t > 0.0, "time scaling needs t > 0");
    return square_integral_inverse(u * square_integral(t));
  }

  // Closed-form large-t scalings:
  //   moderate: t^(u^(1/rho))
  //   slow:     exp((log t)^(u^(1/rho)))
  //   fast:     t u^((gamma rho)^(-1) (log t)^(1-gamma))
  double asymptotic_scaling(double t, double u) const {
    check_unit_interval(u);
    require(t > cutoff_, "asymptotic scaling needs t beyond the cutoff");
    switch (family_) {
      case KernelFamily::moderate:
        return std::pow(t, std::pow(u, 1.0 / p1_));
      case KernelFamily::slow:
        return std::exp(std::pow(std::log(t), std::pow(u, 1.0 / p1_)));
      case KernelFamily::fast:
        return t * std::pow(u, std::pow(std::log(t), 1.0 - p2_) / (p2_ * p1_));
      case KernelFamily::pure_power:
        throw std::invalid_argument(
            "asymptotic scaling is undefined for pure_power kernels");
    }
    return 0.0;
  }

  double scaling(ScalingKind kind, double t, double u) const {
    return kind == ScalingKind::inverse ? time_scaling(t, u)
                                        : asymptotic_scaling(t, u);
  }

 private:
  static constexpr double kE = 2.718281828459045235360287;

  ResponseKernel(KernelFamily family, double p1, double p2, double cutoff)
      : family_(family), p1_(p1), p2_(p2), cutoff_(cutoff) {
    log_cutoff_ = std::log(cutoff_);
    log_log_cutoff_ =
        family_ == KernelFamily::slow ? std::log(log_cutoff_) : 0.0;
    plateau_ = raw_h(cutoff_);
    if (!(plateau_ > 0.0) || !std::isfinite(plateau_))
      throw std::invalid_argument("kernel cutoff gives a degenerate plateau");
    m0_ = cutoff_ * plateau_ * plateau_;
    fast_at_cutoff_ = family_ == KernelFamily::fast
                          ? std::exp(p1_ * std::pow(log_cutoff_, p2_))
                          : 0.0;
  }

  double raw_h(double t) const {
    switch (family_) {
      case KernelFamily::moderate: {
        if (p1_ == 1.0) return 1.0 / std::sqrt(t);
        const double s = std::log(t);
        return std::pow(s, 0.5 * (p1_ - 1.0)) / std::sqrt(t);
      }
      case KernelFamily::slow: {
        const double s = std::log(t);
        return std::pow(std::log(s), 0.5 * (p1_ - 1.0)) /
               std::sqrt(t * s);
      }
      case KernelFamily::fast: {
        const double s = std::log(t);
        return std::exp(0.5 * p1_ * std::pow(s, p2_)) *
               std::pow(s, 0.5 * (p2_ - 1.0)) / std::sqrt(t);
      }
      case KernelFamily::pure_power:
        return std::pow(t, p1_);
    }
    return 0.0;
  }

  // Smallest log-time beyond which the slope of log h stays negative,
  // located by a geometric scan for the last sign change plus bisection.
  template <class Slope>
  static double monotone_start(Slope slope, double s_lo) {
    constexpr int n = 4096;
    const double s_hi = 1e8;
    double last_nonneg = -1.0;
    double next_s = 0.0;
    double prev = s_lo;
    for (int i = 1; i <= n; ++i) {
      const double s =
          s_lo * std::pow(s_hi / s_lo, static_cast<double>(i) / n);
      if (slope(prev) >= 0.0) {
        last_nonneg = prev;
        next_s = s;
      }
      prev = s;
    }
    if (last_nonneg < 0.0) return std::max(s_lo, 1.0);
    if (slope(prev) >= 0.0)
      throw std::invalid_argument(
          "kernel parameters give no practical monotone cutoff");
    double a = last_nonneg;
    double b = next_s;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      (slope(mid) >= 0.0 ? a : b) = mid;
    }
    if (b > 700.0)
      throw std::invalid_argument(
          "kernel parameters give an impractically large monotone cutoff");
    return b;
  }

  static void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  }

  static void check_unit_interval(double u) {
    if (!(u >= 0.0 && u <= 1.0))
      throw std::invalid_argument("scaling argument u must lie in [0,1]");
  }

  KernelFamily family_;
  double p1_;
  double p2_;
  double cutoff_;
  double log_cutoff_ = 0.0;
  double log_log_cutoff_ = 0.0;
  double plateau_ = 0.0;
  double m0_ = 0.0;
  double fast_at_cutoff_ = 0.0;
};

inline const char* to_string(ScalingKind kind) {
  return kind == ScalingKind::inverse ? "inverse" : "remark3";
}

}  // namespace shotnoise
