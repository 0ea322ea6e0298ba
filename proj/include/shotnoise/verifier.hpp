#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "shotnoise/accumulator.hpp"
#include "shotnoise/diagnostics.hpp"
#include "shotnoise/jump_laws.hpp"
#include "shotnoise/limit_law.hpp"
#include "shotnoise/parallel.hpp"
#include "shotnoise/quadrature.hpp"
#include "shotnoise/renewal.hpp"
#include "shotnoise/response_kernel.hpp"
#include "shotnoise/rng.hpp"

namespace shotnoise {

// Stream tags: one per experiment phase, so reruns of any phase reproduce
// the same draws regardless of which other phases ran.
inline constexpr std::uint16_t kStreamFdd = 1;
inline constexpr std::uint16_t kStreamLimit = 2;
inline constexpr std::uint16_t kStreamCampbell = 3;
inline constexpr std::uint16_t kStreamBackwardDelayed = 4;
inline constexpr std::uint16_t kStreamBackwardFresh = 5;
inline constexpr std::uint16_t kStreamSubadditivityIncrement = 6;
inline constexpr std::uint16_t kStreamSubadditivityBase = 7;
inline constexpr std::uint16_t kStreamRenewalCount = 8;
inline constexpr std::uint16_t kStreamProjection = 9;

// ---------------------------------------------------------------------------
// Deterministic oracles and quadrature checks
// ---------------------------------------------------------------------------

// Campbell moments of the shot noise driven by a unit-rate Poisson process:
// variance m(t) in both conventions; the mean gains h(t) when the fixed shot
// at the origin is included (matching the zero-delayed walk's S_0 = 0).
struct CampbellOracle {
  double mean_with_origin_shot = 0.0;
  double mean_pure = 0.0;
  double variance = 0.0;
};

inline CampbellOracle campbell_oracle(const ResponseKernel& kernel, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("campbell oracle needs t >= 0");
  const double primitive = kernel.primitive(t);
  return {primitive + kernel.h(t), primitive, kernel.square_integral(t)};
}

// \int_0^upper h(y) h(y + shift) dy by adaptive quadrature: a linear panel
// over the plateau and a log-substituted panel beyond the cutoff, with
// breakpoints at the plateau kink and at y = shift.
inline double cross_integral(const ResponseKernel& kernel, double upper,
                             double shift, double rel_tol = 1e-9) {
  if (!(shift >= 0.0))
    throw std::invalid_argument("cross integral needs shift >= 0");
  if (!(upper > 0.0)) return 0.0;
  const double cut = kernel.cutoff();
  auto f = [&kernel, shift](double y) {
    return kernel.h(y) * kernel.h(y + shift);
  };
  double total = 0.0;
  const double lin_hi = std::min(upper, cut);
  if (lin_hi > 0.0) {
    const std::array<double, 1> kinks = {cut - shift};
    total += integrate_with_breakpoints(f, 0.0, lin_hi, kinks, rel_tol);
  }
  if (upper > cut) {
    auto g = [&f](double s) {
      const double y = std::exp(s);
      return f(y) * y;
    };
    const std::array<double, 1> kinks = {
        shift > cut ? std::log(shift) : std::log(cut)};
    total += integrate_with_breakpoints(g, std::log(cut), std::log(upper),
                                        kinks, rel_tol);
  }
  return total;
}

// Ratio \int_0^{t + t^{(b)}} h(y) h(y + t^{(a)} - t^{(b)}) dy / m(t) with
// t^{(u)} = g(t,u) from the generalized-inverse scaling; tends to 1 - a.
inline double cross_covariance_ratio(const ResponseKernel& kernel, double t,
                                     double a, double b,
                                     double rel_tol = 1e-9) {
  if (!(b >= 0.0 && a <= 1.0 && b < a))
    throw std::invalid_argument(
        "cross covariance ratio needs 0 <= b < a <= 1");
  const double ta = kernel.time_scaling(t, a);
  const double tb = kernel.time_scaling(t, b);
  const double numerator = cross_integral(kernel, t + tb, ta - tb, rel_tol);
  return numerator / kernel.square_integral_quad(t, rel_tol);
}

// Karamata-style ratio table over a time grid, from the quadrature route:
//   m_over_th2 -> 1/(2 beta + 1) for pure_power kernels;
//   th2_over_m -> 0 for the index -1/2 families;
//   remark1 = sqrt(m) / ((2 beta + 1)^{-1/2} sqrt(t) h(t)) -> 1 (pure_power).
struct KaramataRow {
  double t = 0.0;
  double th2_over_m = 0.0;
  double m_over_th2 = 0.0;
  std::optional<double> normalization_ratio;
};

inline std::vector<KaramataRow> karamata_ratios(const ResponseKernel& kernel,
                                                std::span<const double> t_grid) {
  std::vector<KaramataRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    const double m = kernel.square_integral_quad(t);
    const double h = kernel.h(t);
    const double th2 = t * h * h;
    KaramataRow row{t, th2 / m, m / th2, {}};
    if (kernel.family() == KernelFamily::pure_power) {
      const double scale = std::sqrt(2.0 * kernel.beta() + 1.0);
      row.normalization_ratio = std::sqrt(m) * scale / (std::sqrt(t) * h);
    }
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Monte Carlo experiments
// ---------------------------------------------------------------------------

struct ExperimentSpec {
  JumpLaw law;
  ResponseKernel kernel;
  ScalingKind scaling = ScalingKind::inverse;
  double t = 0.0;
  std::vector<double> u_grid;
  std::optional<std::vector<double>> alphas;
  std::uint64_t replications = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct MarginalReport {
  double u = 0.0;
  double mean = 0.0;
  double mean_se = 0.0;
  double predicted_mean_bias = 0.0;  // Poisson-with-origin prediction h(tau)/denom
  NormalityStats normality;
};

struct ProjectionSummary {
  std::vector<double> alphas;
  double target_variance = 0.0;
  double sample_mean = 0.0;
  double mean_se = 0.0;
  double sample_variance = 0.0;
  double variance_se = 0.0;
  NormalityStats normality;
};

struct FddExperimentReport {
  double t = 0.0;
  ScalingKind scaling = ScalingKind::inverse;
  std::vector<double> u_grid;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool lattice_jump_law = false;
  std::vector<double> mean;
  std::vector<double> mean_se;
  Matrix cov;
  Matrix cov_se;
  Matrix limit_cov;
  std::optional<Matrix> poisson_cov;  // exact for exponential jumps
  double max_abs_deviation = 0.0;
  std::vector<MarginalReport> marginals;
  std::optional<ProjectionSummary> projection;
};

namespace detail {

inline void check_replications(std::uint64_t r) {
  if (r < 1000)
    throw std::invalid_argument("experiments need at least 1000 replications");
}

inline double sample_mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double sample_variance(std::span<const double> x, double mean) {
  double s = 0.0;
  for (double v : x) s += (v - mean) * (v - mean);
  return s / (static_cast<double>(x.size()) - 1.0);
}

// Standard error of the sample variance from the fourth central moment:
// Var(s^2) = (m4 - s^4 (n-3)/(n-1)) / n.
inline double variance_se(std::span<const double> x, double mean,
                          double sample_var) {
  const double n = static_cast<double>(x.size());
  double m4 = 0.0;
  for (double v : x) {
    const double d = (v - mean) * (v - mean);
    m4 += d * d;
  }
  m4 /= n;
  const double v =
      (m4 - sample_var * sample_var * (n - 3.0) / (n - 1.0)) / n;
  return std::sqrt(std::max(v, 0.0));
}

inline ProjectionSummary summarize_projection(std::vector<double> alphas,
                                              std::span<const double> s,
                                              double target) {
  ProjectionSummary out;
  out.alphas = std::move(alphas);
  out.target_variance = target;
  out.sample_mean = sample_mean(s);
  out.sample_variance = sample_variance(s, out.sample_mean);
  out.mean_se = std::sqrt(std::max(out.sample_variance, 0.0) /
                          static_cast<double>(s.size()));
  out.variance_se = variance_se(s, out.sample_mean, out.sample_variance);
  out.normality = normality_stats(s);
  return out;
}

}  // namespace detail

inline FddExperimentReport run_fdd_experiment(const ExperimentSpec& spec) {
  detail::check_replications(spec.replications);
  const FddPlan plan(spec.law, spec.kernel, spec.t, spec.u_grid, spec.scaling);
  const std::size_t k = plan.times().size();
  const std::uint64_t r_total = spec.replications;
  const unsigned workers = resolve_workers(spec.workers);

  std::vector<double> rows(r_total * k);
  std::vector<MomentAccumulator> accs(workers, MomentAccumulator(k));
  parallel_blocks(r_total, workers,
                  [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
                    for (std::uint64_t r = lo; r < hi; ++r) {
                      RngStream rng(spec.seed, stream_index(kStreamFdd, r));
                      const FddSample s = fdd_replication(plan, rng);
                      std::copy(s.z.begin(), s.z.end(),
                                rows.begin() + static_cast<std::ptrdiff_t>(r * k));
                      accs[w].add(s.z);
                    }
                  });
  const MomentAccumulator acc = tree_merge(std::move(accs));

  FddExperimentReport report;
  report.t = spec.t;
  report.scaling = spec.scaling;
  report.u_grid = plan.u_grid();
  report.replications = r_total;
  report.seed = spec.seed;
  report.workers = workers;
  report.lattice_jump_law = spec.law.is_lattice();
  report.mean = acc.mean();
  report.mean_se = acc.mean_se();
  report.cov = acc.covariance();
  report.cov_se = acc.covariance_se();

  report.limit_cov.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      report.limit_cov[i][j] =
          limit_covariance(plan.u_grid()[i], plan.u_grid()[j]);

  if (spec.law.family() == JumpFamily::exponential) {
    // For exponential jumps the shots form a Poisson process plus the origin
    // atom, so Campbell's theorem gives the exact finite-t covariance of Z.
    Matrix pc(k, std::vector<double>(k, 0.0));
    const double m_t = spec.kernel.square_integral(spec.t);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        const double lo = plan.times()[i];
        const double hi = plan.times()[j];
        pc[i][j] = cross_integral(spec.kernel, lo, hi - lo) / m_t;
        pc[j][i] = pc[i][j];
      }
    report.poisson_cov = std::move(pc);
  }

  double max_dev = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      max_dev = std::max(max_dev,
                         std::abs(report.cov[i][j] - report.limit_cov[i][j]));
  report.max_abs_deviation = max_dev;

  std::vector<double> column(r_total);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint64_t r = 0; r < r_total; ++r) column[r] = rows[r * k + i];
    MarginalReport m;
    m.u = plan.u_grid()[i];
    m.mean = report.mean[i];
    m.mean_se = report.mean_se[i];
    m.predicted_mean_bias =
        spec.kernel.h(plan.times()[i]) / plan.denominator();
    m.normality = normality_stats(column);
    report.marginals.push_back(std::move(m));
  }

  if (spec.alphas) {
    if (spec.alphas->size() != k)
      throw std::invalid_argument("alphas and u grid sizes differ");
    std::vector<double> s(r_total, 0.0);
    for (std::uint64_t r = 0; r < r_total; ++r)
      for (std::size_t i = 0; i < k; ++i)
        s[r] += (*spec.alphas)[i] * rows[r * k + i];
    report.projection = detail::summarize_projection(
        *spec.alphas, s, cramer_wold_variance(*spec.alphas, plan.u_grid()));
  }
  return report;
}

// Cramer-Wold projection experiment: accumulates S = sum_i alpha_i Z_t(u_i)
// per replication and compares the sample variance with the linear-form
// variance of the limit process.
struct CramerWoldReport {
  double t = 0.0;
  ScalingKind scaling = ScalingKind::inverse;
  std::vector<double> u_grid;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  ProjectionSummary projection;
};

inline CramerWoldReport cramer_wold_experiment(const ExperimentSpec& spec) {
  detail::check_replications(spec.replications);
  if (!spec.alphas)
    throw std::invalid_argument("cramer-wold experiment needs alphas");
  const FddPlan plan(spec.law, spec.kernel, spec.t, spec.u_grid, spec.scaling);
  const std::size_t k = plan.times().size();
  if (spec.alphas->size() != k)
    throw std::invalid_argument("alphas and u grid sizes differ");
  const std::uint64_t r_total = spec.replications;
  const unsigned workers = resolve_workers(spec.workers);
  std::vector<double> s(r_total, 0.0);
  parallel_blocks(r_total, workers,
                  [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                    for (std::uint64_t r = lo; r < hi; ++r) {
                      RngStream rng(spec.seed,
                                    stream_index(kStreamProjection, r));
                      const FddSample z = fdd_replication(plan, rng);
                      double acc = 0.0;
                      for (std::size_t i = 0; i < k; ++i)
                        acc += (*spec.alphas)[i] * z.z[i];
                      s[r] = acc;
                    }
                  });
  CramerWoldReport report;
  report.t = spec.t;
  report.scaling = spec.scaling;
  report.u_grid = plan.u_grid();
  report.replications = r_total;
  report.seed = spec.seed;
  report.workers = workers;
  report.projection = detail::summarize_projection(
      *spec.alphas, s, cramer_wold_variance(*spec.alphas, plan.u_grid()));
  return report;
}

// Raw-scale Campbell check: Monte Carlo mean and variance of Y(t) against
// the exact Poisson-with-origin values (exponential jumps only, where the
// renewal path is a Poisson process and the oracle is exact at finite t).
struct CampbellExperimentReport {
  double t = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  double sample_mean = 0.0;
  double mean_se = 0.0;
  double sample_variance = 0.0;
  double variance_se = 0.0;
  double oracle_mean = 0.0;      // origin-shot convention
  double oracle_variance = 0.0;
  double mean_error_in_se = 0.0;
  double variance_error_in_se = 0.0;
};

inline CampbellExperimentReport campbell_experiment(
    const JumpLaw& law, const ResponseKernel& kernel, double t,
    std::uint64_t replications, std::uint64_t seed, unsigned workers_req) {
  detail::check_replications(replications);
  if (law.family() != JumpFamily::exponential)
    throw std::invalid_argument(
        "the campbell experiment needs an exponential jump law");
  const double rate = 1.0 / law.mean();
  const unsigned workers = resolve_workers(workers_req);
  const EvalGrid grid({t});
  std::vector<double> y(replications, 0.0);
  parallel_blocks(replications, workers,
                  [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                    for (std::uint64_t r = lo; r < hi; ++r) {
                      RngStream rng(seed, stream_index(kStreamCampbell, r));
                      y[r] = evaluate_shot_noise(law, kernel, grid, rng)[0];
                    }
                  });
  const CampbellOracle oracle = campbell_oracle(kernel, t);
  CampbellExperimentReport report;
  report.t = t;
  report.replications = replications;
  report.seed = seed;
  report.workers = workers;
  report.oracle_mean = kernel.h(t) + rate * kernel.primitive(t);
  report.oracle_variance = rate * oracle.variance;
  report.sample_mean = detail::sample_mean(y);
  report.sample_variance = detail::sample_variance(y, report.sample_mean);
  report.mean_se = std::sqrt(report.sample_variance /
                             static_cast<double>(replications));
  report.variance_se =
      detail::variance_se(y, report.sample_mean, report.sample_variance);
  report.mean_error_in_se =
      std::abs(report.sample_mean - report.oracle_mean) / report.mean_se;
  report.variance_error_in_se =
      std::abs(report.sample_variance - report.oracle_variance) /
      report.variance_se;
  return report;
}

// ---------------------------------------------------------------------------
// Renewal-structure experiments
// ---------------------------------------------------------------------------

// Backward-time invariance of the stationary renewal process: the joint law
// of (N*(t) - N*((t-s_j)-))_j matches that of (N*(s_j))_j. Marginals are
// compared through two-sample KS distances against summed DKW bands plus a
// mean match within 5 standard errors.
struct BackwardMarginal {
  double s = 0.0;
  double mean_backward = 0.0;
  double mean_fresh = 0.0;
  double mean_diff_se = 0.0;
  double ks_distance = 0.0;
  double ks_bound = 0.0;
  bool mean_ok = false;
  bool ks_ok = false;
};

struct BackwardInvarianceReport {
  double t = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::vector<BackwardMarginal> marginals;
  bool pass = false;
};

inline BackwardInvarianceReport backward_invariance_experiment(
    const JumpLaw& law, double t, std::span<const double> s_grid,
    std::uint64_t replications, std::uint64_t seed, unsigned workers_req) {
  detail::check_replications(replications);
  for (double s : s_grid)
    if (!(s > 0.0 && s <= t))
      throw std::invalid_argument("s grid must lie in (0, t]");
  const DelayLaw delay(law);
  const unsigned workers = resolve_workers(workers_req);
  const std::size_t k = s_grid.size();
  std::vector<double> backward(replications * k, 0.0);
  std::vector<double> fresh(replications * k, 0.0);
  double s_max = 0.0;
  for (double s : s_grid) s_max = std::max(s_max, s);

  parallel_blocks(
      replications, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t r = lo; r < hi; ++r) {
          {
            RngStream rng(seed, stream_index(kStreamBackwardDelayed, r));
            PathCursor path(law, delay, rng);
            std::uint64_t total = 0;
            std::vector<std::uint64_t> strict(k, 0);
            for (double x = path.next(); x <= t; x = path.next()) {
              ++total;
              for (std::size_t j = 0; j < k; ++j)
                if (x < t - s_grid[j]) ++strict[j];
            }
            for (std::size_t j = 0; j < k; ++j)
              backward[r * k + j] = static_cast<double>(total - strict[j]);
          }
          {
            RngStream rng(seed, stream_index(kStreamBackwardFresh, r));
            PathCursor path(law, delay, rng);
            std::vector<std::uint64_t> weak(k, 0);
            for (double x = path.next(); x <= s_max; x = path.next())
              for (std::size_t j = 0; j < k; ++j)
                if (x <= s_grid[j]) ++weak[j];
            for (std::size_t j = 0; j < k; ++j)
              fresh[r * k + j] = static_cast<double>(weak[j]);
          }
        }
      });

  BackwardInvarianceReport report;
  report.t = t;
  report.replications = replications;
  report.seed = seed;
  report.workers = workers;
  report.pass = true;
  const double band = 2.0 * dkw_epsilon(replications, 0.01);
  std::vector<double> a(replications);
  std::vector<double> b(replications);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::uint64_t r = 0; r < replications; ++r) {
      a[r] = backward[r * k + j];
      b[r] = fresh[r * k + j];
    }
    BackwardMarginal m;
    m.s = s_grid[j];
    m.mean_backward = detail::sample_mean(a);
    m.mean_fresh = detail::sample_mean(b);
    const double va = detail::sample_variance(a, m.mean_backward);
    const double vb = detail::sample_variance(b, m.mean_fresh);
    m.mean_diff_se =
        std::sqrt((va + vb) / static_cast<double>(replications));
    m.ks_distance = ks_two_sample(a, b);
    m.ks_bound = band;
    m.mean_ok =
        std::abs(m.mean_backward - m.mean_fresh) <= 5.0 * m.mean_diff_se;
    m.ks_ok = m.ks_distance <= m.ks_bound;
    report.pass = report.pass && m.mean_ok && m.ks_ok;
    report.marginals.push_back(m);
  }
  return report;
}

// Distributional subadditivity N(t+s) - N(s) <=_d N(t): the increment's
// empirical distribution function must dominate the zero-delayed one up to
// summed DKW bands.
struct SubadditivityReport {
  double s = 0.0;
  double t = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  double min_cdf_gap = 0.0;   // inf_z (F_increment - F_base)
  double allowed_gap = 0.0;
  bool pass = false;
};

inline SubadditivityReport subadditivity_experiment(
    const JumpLaw& law, double s, double t, std::uint64_t replications,
    std::uint64_t seed, unsigned workers_req) {
  detail::check_replications(replications);
  if (!(s >= 0.0 && t >= 0.0))
    throw std::invalid_argument("subadditivity needs s, t >= 0");
  const unsigned workers = resolve_workers(workers_req);
  std::vector<double> increment(replications, 0.0);
  std::vector<double> base(replications, 0.0);
  parallel_blocks(
      replications, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t r = lo; r < hi; ++r) {
          {
            RngStream rng(seed,
                          stream_index(kStreamSubadditivityIncrement, r));
            PathCursor path(law, rng);
            std::uint64_t at_s = 0;
            std::uint64_t at_ts = 0;
            for (double x = path.next(); x <= t + s; x = path.next()) {
              ++at_ts;
              if (x <= s) ++at_s;
            }
            increment[r] = static_cast<double>(at_ts - at_s);
          }
          {
            RngStream rng(seed, stream_index(kStreamSubadditivityBase, r));
            base[r] = static_cast<double>(count_renewals(law, t, rng));
          }
        }
      });
  SubadditivityReport report;
  report.s = s;
  report.t = t;
  report.replications = replications;
  report.seed = seed;
  report.workers = workers;
  report.allowed_gap = 2.0 * dkw_epsilon(replications, 0.01);
  report.min_cdf_gap = empirical_cdf_compare(increment, base).second;
  report.pass = report.min_cdf_gap >= -report.allowed_gap;
  return report;
}

// CLT for the renewal counting process: moments of
// (N(t) - t/mu) / sqrt(sigma^2 mu^{-3} t), plus the elementary-renewal mean
// ratio E N(t) / (t/mu).
struct RenewalCltReport {
  double t = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  NormalityStats normality;
  double mean_ratio = 0.0;
  double mean_ratio_se = 0.0;
};

inline RenewalCltReport renewal_clt_experiment(const JumpLaw& law, double t,
                                               std::uint64_t replications,
                                               std::uint64_t seed,
                                               unsigned workers_req) {
  detail::check_replications(replications);
  if (!(law.variance() > 0.0))
    throw std::invalid_argument("renewal CLT needs a nondegenerate law");
  const unsigned workers = resolve_workers(workers_req);
  std::vector<double> z(replications, 0.0);
  const double mu = law.mean();
  const double denom =
      std::sqrt(law.variance() / std::pow(mu, 3) * t);
  parallel_blocks(replications, workers,
                  [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                    for (std::uint64_t r = lo; r < hi; ++r) {
                      RngStream rng(seed, stream_index(kStreamRenewalCount, r));
                      const double n =
                          static_cast<double>(count_renewals(law, t, rng));
                      z[r] = (n - t / mu) / denom;
                    }
                  });
  RenewalCltReport report;
  report.t = t;
  report.replications = replications;
  report.seed = seed;
  report.workers = workers;
  report.normality = normality_stats(z);
  const double zbar = detail::sample_mean(z);
  const double zvar = detail::sample_variance(z, zbar);
  report.mean_ratio = (zbar * denom + t / mu) / (t / mu);
  report.mean_ratio_se = std::sqrt(zvar / static_cast<double>(replications)) *
                         denom / (t / mu);
  return report;
}

}  // namespace shotnoise
