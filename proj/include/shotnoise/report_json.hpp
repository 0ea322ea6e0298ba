#pragma once

#include <cmath>
#include <json.hpp>

#include "shotnoise/diagnostics.hpp"
#include "shotnoise/verifier.hpp"

namespace shotnoise {

inline nlohmann::json to_json(const NormalityStats& s) {
  nlohmann::json j;
  j["degenerate"] = s.degenerate;
  j["skewness"] = s.degenerate ? nlohmann::json() : nlohmann::json(s.skewness);
  j["excess_kurtosis"] =
      s.degenerate ? nlohmann::json() : nlohmann::json(s.excess_kurtosis);
  j["ks_distance"] = s.ks_distance;
  return j;
}

inline nlohmann::json to_json(const ProjectionSummary& p) {
  nlohmann::json j;
  j["alphas"] = p.alphas;
  j["target_variance"] = p.target_variance;
  j["sample_mean"] = p.sample_mean;
  j["mean_se"] = p.mean_se;
  j["sample_variance"] = p.sample_variance;
  j["variance_se"] = p.variance_se;
  j["normality"] = to_json(p.normality);
  return j;
}

inline nlohmann::json to_json(const FddExperimentReport& r) {
  nlohmann::json j;
  j["t"] = r.t;
  j["scaling"] = to_string(r.scaling);
  j["u_grid"] = r.u_grid;
  j["replications"] = r.replications;
  j["seed"] = r.seed;
  j["workers"] = r.workers;
  j["lattice_jump_law"] = r.lattice_jump_law;
  j["mean"] = r.mean;
  j["mean_se"] = r.mean_se;
  j["cov"] = r.cov;
  j["cov_se"] = r.cov_se;
  j["limit_cov"] = r.limit_cov;
  j["poisson_cov"] =
      r.poisson_cov ? nlohmann::json(*r.poisson_cov) : nlohmann::json();
  j["max_abs_deviation"] = r.max_abs_deviation;
  nlohmann::json marg = nlohmann::json::array();
  for (const auto& m : r.marginals) {
    nlohmann::json mj;
    mj["u"] = m.u;
    mj["mean"] = m.mean;
    mj["mean_se"] = m.mean_se;
    mj["predicted_mean_bias"] = m.predicted_mean_bias;
    mj["normality"] = to_json(m.normality);
    marg.push_back(mj);
  }
  j["marginals"] = marg;
  j["projection"] =
      r.projection ? to_json(*r.projection) : nlohmann::json();
  return j;
}

inline nlohmann::json to_json(const CampbellExperimentReport& r) {
  nlohmann::json j;
  j["t"] = r.t;
  j["replications"] = r.replications;
  j["seed"] = r.seed;
  j["workers"] = r.workers;
  j["sample_mean"] = r.sample_mean;
  j["mean_se"] = r.mean_se;
  j["sample_variance"] = r.sample_variance;
  j["variance_se"] = r.variance_se;
  j["oracle_mean"] = r.oracle_mean;
  j["oracle_variance"] = r.oracle_variance;
  j["mean_error_in_se"] = r.mean_error_in_se;
  j["variance_error_in_se"] = r.variance_error_in_se;
  return j;
}

inline nlohmann::json to_json(const KaramataRow& row) {
  nlohmann::json j;
  j["t"] = row.t;
  j["th2_over_m"] = row.th2_over_m;
  j["m_over_th2"] = row.m_over_th2;
  j["normalization_ratio"] = row.normalization_ratio
                                 ? nlohmann::json(*row.normalization_ratio)
                                 : nlohmann::json();
  return j;
}

}  // namespace shotnoise
