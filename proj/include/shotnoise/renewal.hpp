#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "shotnoise/jump_laws.hpp"
#include "shotnoise/response_kernel.hpp"
#include "shotnoise/rng.hpp"

namespace shotnoise {

// Strictly increasing evaluation times for multi-point shot-noise sweeps.
struct EvalGrid {
  explicit EvalGrid(std::vector<double> ts) : times(std::move(ts)) {
    if (times.empty()) throw std::invalid_argument("evaluation grid is empty");
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (!(times[i] >= 0.0) || !std::isfinite(times[i]))
        throw std::invalid_argument("evaluation times must be finite and >= 0");
      if (i > 0 && !(times[i] > times[i - 1]))
        throw std::invalid_argument("evaluation times must be increasing");
    }
  }
  std::vector<double> times;
};

// Streaming walk over the renewal epochs. next() yields S_0, S_1, S_2, ...
// where S_0 = 0 for the zero-delayed walk or a stationary-delay draw when a
// DelayLaw is supplied. The law is copied in (it is a few doubles); the delay
// law and the stream are borrowed and must outlive the cursor. Single-owner
// state.
class PathCursor {
 public:
  PathCursor(JumpLaw law, RngStream& rng)
      : law_(law), delay_(nullptr), rng_(&rng) {}
  PathCursor(JumpLaw law, const DelayLaw& delay, RngStream& rng)
      : law_(law), delay_(&delay), rng_(&rng) {}
  PathCursor(JumpLaw, DelayLaw&&, RngStream&) = delete;

  double next() {
    if (!started_) {
      started_ = true;
      position_ = delay_ ? delay_->sample(*rng_) : 0.0;
      return position_;
    }
    position_ += law_.sample(*rng_);
    ++index_;
    return position_;
  }

  double position() const { return position_; }
  std::uint64_t index() const { return index_; }

 private:
  JumpLaw law_;
  const DelayLaw* delay_;
  RngStream* rng_;
  double position_ = 0.0;
  std::uint64_t index_ = 0;
  bool started_ = false;
};

// N(t): number of walk points in [0, t] on a fresh zero-delayed path.
inline std::uint64_t count_renewals(const JumpLaw& law, double t,
                                    RngStream& rng) {
  if (!(t >= 0.0)) throw std::invalid_argument("count_renewals needs t >= 0");
  PathCursor path(law, rng);
  std::uint64_t n = 0;
  for (double s = path.next(); s <= t; s = path.next()) ++n;
  return n;
}

// N*(t) for a stationarily delayed path.
inline std::uint64_t count_renewals(const JumpLaw& law, const DelayLaw& delay,
                                    double t, RngStream& rng) {
  if (!(t >= 0.0)) throw std::invalid_argument("count_renewals needs t >= 0");
  PathCursor path(law, delay, rng);
  std::uint64_t n = 0;
  for (double s = path.next(); s <= t; s = path.next()) ++n;
  return n;
}

namespace detail {

// Single pass over one path: every shot at s <= times.back() adds h(tau - s)
// to each grid time tau >= s. Memory O(K), arithmetic O(N * active grid).
inline void accumulate_shot_noise(const ResponseKernel& kernel,
                                  std::span<const double> times,
                                  PathCursor& path, std::span<double> out) {
  const double horizon = times.back();
  std::size_t lo = 0;
  for (double s = path.next(); s <= horizon; s = path.next()) {
    while (times[lo] < s) ++lo;
    for (std::size_t i = lo; i < times.size(); ++i) out[i] += kernel.h(times[i] - s);
  }
}

}  // namespace detail

// (Y(tau_1), ..., Y(tau_K)) evaluated on one fresh zero-delayed path.
inline std::vector<double> evaluate_shot_noise(const JumpLaw& law,
                                               const ResponseKernel& kernel,
                                               const EvalGrid& grid,
                                               RngStream& rng) {
  std::vector<double> out(grid.times.size(), 0.0);
  PathCursor path(law, rng);
  detail::accumulate_shot_noise(kernel, grid.times, path, out);
  return out;
}

// Delayed variant (shots on the stationary path S*_k).
inline std::vector<double> evaluate_shot_noise(const JumpLaw& law,
                                               const DelayLaw& delay,
                                               const ResponseKernel& kernel,
                                               const EvalGrid& grid,
                                               RngStream& rng) {
  std::vector<double> out(grid.times.size(), 0.0);
  PathCursor path(law, delay, rng);
  detail::accumulate_shot_noise(kernel, grid.times, path, out);
  return out;
}

// One replication's normalized fluctuations on the u-grid.
struct FddSample {
  std::vector<double> z;
};

// Precomputed evaluation times, centerings and the common denominator for
// fdd replications:
//   Z_t(u) = (Y(t + g(t,u)) - mu^{-1} H(t + g(t,u))) / sqrt(sigma^2 mu^{-3} m(t)).
// All u are evaluated on the same path since the joint law is the object
// under study.
class FddPlan {
 public:
  FddPlan(const JumpLaw& law, const ResponseKernel& kernel, double t,
          std::span<const double> u_grid, ScalingKind scaling)
      : law_(law), kernel_(kernel), t_(t), scaling_(scaling) {
    if (!(law.variance() > 0.0))
      throw std::invalid_argument(
          "fdd statistics are undefined for zero-variance jump laws");
    if (!(t > 0.0)) throw std::invalid_argument("fdd plan needs t > 0");
    if (u_grid.empty()) throw std::invalid_argument("u grid is empty");
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
      if (!(u_grid[i] >= 0.0 && u_grid[i] <= 1.0))
        throw std::invalid_argument("u grid must lie in [0,1]");
      if (i > 0 && !(u_grid[i] > u_grid[i - 1]))
        throw std::invalid_argument("u grid must be strictly increasing");
    }
    u_grid_.assign(u_grid.begin(), u_grid.end());
    const double mu = law.mean();
    times_.reserve(u_grid_.size());
    centers_.reserve(u_grid_.size());
    for (double u : u_grid_) {
      const double tau = t + kernel.scaling(scaling, t, u);
      times_.push_back(tau);
      centers_.push_back(kernel.primitive(tau) / mu);
    }
    for (std::size_t i = 1; i < times_.size(); ++i)
      if (!(times_[i] > times_[i - 1]))
        throw std::invalid_argument("scaled evaluation times are not increasing");
    denominator_ = std::sqrt(law.variance() / std::pow(mu, 3) *
                             kernel.square_integral(t));
  }

  const JumpLaw& law() const { return law_; }
  const ResponseKernel& kernel() const { return kernel_; }
  double t() const { return t_; }
  ScalingKind scaling() const { return scaling_; }
  const std::vector<double>& u_grid() const { return u_grid_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& centers() const { return centers_; }
  double denominator() const { return denominator_; }

 private:
  JumpLaw law_;
  ResponseKernel kernel_;
  double t_;
  ScalingKind scaling_;
  std::vector<double> u_grid_;
  std::vector<double> times_;
  std::vector<double> centers_;
  double denominator_ = 0.0;
};

inline FddSample fdd_replication(const FddPlan& plan, RngStream& rng) {
  const std::size_t k = plan.times().size();
  FddSample sample;
  sample.z.assign(k, 0.0);
  PathCursor path(plan.law(), rng);
  detail::accumulate_shot_noise(plan.kernel(), plan.times(), path, sample.z);
  const double inv = 1.0 / plan.denominator();
  for (std::size_t i = 0; i < k; ++i)
    sample.z[i] = (sample.z[i] - plan.centers()[i]) * inv;
  return sample;
}

// Convenience form matching the one-shot call signature.
inline FddSample fdd_replication(const JumpLaw& law,
                                 const ResponseKernel& kernel, double t,
                                 std::span<const double> u_grid,
                                 ScalingKind scaling, RngStream& rng) {
  return fdd_replication(FddPlan(law, kernel, t, u_grid, scaling), rng);
}

}  // namespace shotnoise
