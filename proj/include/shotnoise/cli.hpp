#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shotnoise/config.hpp"
#include "shotnoise/io.hpp"
#include "shotnoise/limit_law.hpp"
#include "shotnoise/report_json.hpp"
#include "shotnoise/verifier.hpp"

namespace shotnoise {

struct GateResult {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

namespace detail {

inline nlohmann::json gates_json(const std::vector<GateResult>& gates) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : gates) {
    nlohmann::json j;
    j["name"] = g.name;
    j["value"] = g.value;
    j["bound"] = g.bound;
    j["pass"] = g.pass;
    arr.push_back(j);
  }
  return arr;
}

inline std::vector<double> probe_grid(double cutoff, double t_max) {
  const double lo = std::max(cutoff / 4.0, 1e-3);
  const double hi = std::max(t_max, lo * 2.0);
  constexpr int n = 33;
  std::vector<double> grid;
  grid.reserve(n);
  for (int i = 0; i < n; ++i)
    grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return grid;
}

inline ExperimentSpec spec_from_config(const ExperimentConfig& cfg) {
  return ExperimentSpec{cfg.law,    cfg.kernel,       cfg.scaling,
                        cfg.t,      cfg.u_grid,       cfg.alphas,
                        cfg.replications, cfg.master_seed, cfg.workers};
}

}  // namespace detail

inline int run_simulate(const ExperimentConfig& cfg, std::ostream& log) {
  const FddPlan plan(cfg.law, cfg.kernel, cfg.t, cfg.u_grid, cfg.scaling);
  const std::size_t k = plan.u_grid().size();
  const std::uint64_t r_total = cfg.replications;
  const unsigned workers = resolve_workers(cfg.workers);
  std::vector<double> rows(r_total * k);
  parallel_blocks(r_total, workers,
                  [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                    for (std::uint64_t r = lo; r < hi; ++r) {
                      RngStream rng(cfg.master_seed, stream_index(kStreamFdd, r));
                      const FddSample s = fdd_replication(plan, rng);
                      std::copy(s.z.begin(), s.z.end(),
                                rows.begin() + static_cast<std::ptrdiff_t>(r * k));
                    }
                  });
  std::string csv = csv_header("fdd_samples", cfg.hash, cfg.master_seed,
                               workers, "replication,u,Z");
  for (std::uint64_t r = 0; r < r_total; ++r)
    for (std::size_t i = 0; i < k; ++i) {
      csv += std::to_string(r);
      csv += ',';
      csv += format_double(plan.u_grid()[i]);
      csv += ',';
      csv += format_double(rows[r * k + i]);
      csv += '\n';
    }
  const auto path = cfg.out_dir / "samples.csv";
  write_text_file(path, csv);
  log << "wrote " << path.string() << " (" << r_total << " replications)\n";
  return 0;
}

inline int run_limit_sample(const ExperimentConfig& cfg, std::ostream& log) {
  const std::uint64_t r_total = cfg.replications;
  const std::size_t k = cfg.u_grid.size();
  std::string csv = csv_header("limit_samples", cfg.hash, cfg.master_seed, 1,
                               "replication,u,X");
  for (std::uint64_t r = 0; r < r_total; ++r) {
    RngStream rng(cfg.master_seed, stream_index(kStreamLimit, r));
    const LimitGridSample s = sample_limit_fdd(cfg.u_grid, rng);
    for (std::size_t i = 0; i < k; ++i) {
      csv += std::to_string(r);
      csv += ',';
      csv += format_double(s.u_grid[i]);
      csv += ',';
      csv += format_double(s.values[i]);
      csv += '\n';
    }
  }
  write_text_file(cfg.out_dir / "limit_samples.csv", csv);

  nlohmann::json j;
  j["config_hash"] = cfg.hash;
  j["u_grid"] = cfg.u_grid;
  Matrix cov(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t jx = 0; jx < k; ++jx)
      cov[i][jx] = limit_covariance(cfg.u_grid[i], cfg.u_grid[jx]);
  j["covariance"] = cov;
  write_text_file(cfg.out_dir / "limit_covariance.json", j.dump(2) + "\n");
  log << "wrote " << (cfg.out_dir / "limit_samples.csv").string() << " and "
      << (cfg.out_dir / "limit_covariance.json").string() << "\n";
  return 0;
}

inline int run_kernel_probe(const ExperimentConfig& cfg, std::ostream& log) {
  std::string columns = "t,h,H,m";
  for (double u : cfg.u_grid) {
    columns += ",g_";
    columns += format_double(u);
  }
  std::string csv = csv_header("kernel_probe", cfg.hash, cfg.master_seed, 1,
                               columns);
  for (double t : detail::probe_grid(cfg.kernel.cutoff(), cfg.t)) {
    csv += format_double(t);
    csv += ',';
    csv += format_double(cfg.kernel.h(t));
    csv += ',';
    csv += format_double(cfg.kernel.primitive(t));
    csv += ',';
    csv += format_double(cfg.kernel.square_integral(t));
    for (double u : cfg.u_grid) {
      csv += ',';
      if (cfg.scaling == ScalingKind::asymptotic &&
          !(t > cfg.kernel.cutoff()))
        continue;  // asymptotic form undefined at or below the cutoff
      csv += format_double(cfg.kernel.scaling(cfg.scaling, t, u));
    }
    csv += '\n';
  }
  const auto path = cfg.out_dir / "kernel_probe.csv";
  write_text_file(path, csv);
  log << "wrote " << path.string() << "\n";
  return 0;
}

inline int run_verify(const ExperimentConfig& cfg, std::ostream& log) {
  std::vector<GateResult> gates;
  nlohmann::json report;
  report["config"] = cfg.echo;
  report["config_hash"] = cfg.hash;

  const FddExperimentReport fdd =
      run_fdd_experiment(detail::spec_from_config(cfg));
  report["fdd"] = to_json(fdd);

  double max_skew = 0.0;
  double max_kurt = 0.0;
  for (const auto& m : fdd.marginals)
    if (!m.normality.degenerate) {
      max_skew = std::max(max_skew, std::abs(m.normality.skewness));
      max_kurt = std::max(max_kurt, std::abs(m.normality.excess_kurtosis));
    }
  gates.push_back({"marginal_skewness", max_skew,
                   cfg.gates.marginal_skewness,
                   max_skew <= cfg.gates.marginal_skewness});
  gates.push_back({"marginal_excess_kurtosis", max_kurt,
                   cfg.gates.marginal_excess_kurtosis,
                   max_kurt <= cfg.gates.marginal_excess_kurtosis});
  if (cfg.gates.max_cov_deviation)
    gates.push_back({"max_cov_deviation", fdd.max_abs_deviation,
                     *cfg.gates.max_cov_deviation,
                     fdd.max_abs_deviation <= *cfg.gates.max_cov_deviation});

  if (cfg.law.family() == JumpFamily::exponential) {
    const CampbellExperimentReport camp =
        campbell_experiment(cfg.law, cfg.kernel, cfg.t, cfg.replications,
                            cfg.master_seed, cfg.workers);
    report["campbell"] = to_json(camp);
    gates.push_back({"campbell_mean_se", camp.mean_error_in_se,
                     cfg.gates.campbell_mean_se,
                     camp.mean_error_in_se <= cfg.gates.campbell_mean_se});
    gates.push_back({"campbell_variance_se", camp.variance_error_in_se,
                     cfg.gates.campbell_variance_se,
                     camp.variance_error_in_se <=
                         cfg.gates.campbell_variance_se});
  } else {
    report["campbell"] = nlohmann::json();
  }

  // Deterministic quadrature checks: lagged covariance ratios and the
  // Karamata table for this kernel.
  const std::vector<std::pair<double, double>> ab_pairs = {
      {0.5, 0.0}, {0.5, 0.2}, {1.0, 0.0}};
  const std::vector<double> ratio_grid = {1e3, 1e6, 1e9, 1e12};
  nlohmann::json ratio_rows = nlohmann::json::array();
  std::string ratio_csv =
      csv_header("covariance_ratio", cfg.hash, cfg.master_seed, 1,
                 "a,b,t,ratio,limit,abs_error");
  bool monotone = true;
  for (const auto& [a, b] : ab_pairs) {
    double prev_err = -1.0;
    for (double t : ratio_grid) {
      if (!(t > cfg.kernel.cutoff())) continue;
      const double ratio = cross_covariance_ratio(cfg.kernel, t, a, b);
      const double err = std::abs(ratio - (1.0 - a));
      if (prev_err >= 0.0 && err >= prev_err) monotone = false;
      prev_err = err;
      nlohmann::json row;
      row["a"] = a;
      row["b"] = b;
      row["t"] = t;
      row["ratio"] = ratio;
      row["limit"] = 1.0 - a;
      row["abs_error"] = err;
      ratio_rows.push_back(row);
      ratio_csv += format_double(a);
      ratio_csv += ',';
      ratio_csv += format_double(b);
      ratio_csv += ',';
      ratio_csv += format_double(t);
      ratio_csv += ',';
      ratio_csv += format_double(ratio);
      ratio_csv += ',';
      ratio_csv += format_double(1.0 - a);
      ratio_csv += ',';
      ratio_csv += format_double(err);
      ratio_csv += '\n';
    }
  }
  report["covariance_ratio"] = ratio_rows;
  gates.push_back({"covariance_ratio_monotone", monotone ? 1.0 : 0.0, 1.0,
                   monotone});

  std::vector<double> karamata_grid;
  for (double t = 1e2; t <= 1e10 + 1.0; t *= 100.0)
    if (t > cfg.kernel.cutoff()) karamata_grid.push_back(t);
  const auto karamata = karamata_ratios(cfg.kernel, karamata_grid);
  nlohmann::json karamata_rows = nlohmann::json::array();
  std::string karamata_csv =
      csv_header("karamata", cfg.hash, cfg.master_seed, 1,
                 "t,th2_over_m,m_over_th2,normalization_ratio");
  for (const auto& row : karamata) {
    karamata_rows.push_back(to_json(row));
    karamata_csv += format_double(row.t);
    karamata_csv += ',';
    karamata_csv += format_double(row.th2_over_m);
    karamata_csv += ',';
    karamata_csv += format_double(row.m_over_th2);
    karamata_csv += ',';
    if (row.normalization_ratio)
      karamata_csv += format_double(*row.normalization_ratio);
    karamata_csv += '\n';
  }
  report["karamata"] = karamata_rows;

  bool all_pass = true;
  for (const auto& g : gates) all_pass = all_pass && g.pass;
  report["gates"] = detail::gates_json(gates);
  report["pass"] = all_pass;

  write_text_file(cfg.out_dir / "report.json", report.dump(2) + "\n");
  write_text_file(cfg.out_dir / "covariance_ratio.csv", ratio_csv);
  write_text_file(cfg.out_dir / "karamata.csv", karamata_csv);

  for (const auto& g : gates)
    log << (g.pass ? "pass " : "FAIL ") << g.name << " (value "
        << format_double(g.value) << ", bound " << format_double(g.bound)
        << ")\n";
  log << "report: " << (cfg.out_dir / "report.json").string() << "\n";
  return all_pass ? 0 : 2;
}

inline int run_report(const ExperimentConfig& cfg, std::ostream& log) {
  const auto path = cfg.out_dir / "report.json";
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(read_text_file(path));
  } catch (const std::exception& e) {
    log << "cannot read " << path.string() << ": " << e.what() << "\n";
    return 1;
  }
  log << "report " << path.string() << " (config "
      << report.value("config_hash", std::string("?")) << ")\n";
  if (report.contains("fdd") && report["fdd"].is_object()) {
    const auto& fdd = report["fdd"];
    log << "t=" << fdd["t"].dump() << " scaling=" << fdd["scaling"].dump()
        << " replications=" << fdd["replications"].dump()
        << " max|cov-limit|=" << fdd["max_abs_deviation"].dump() << "\n";
  }
  bool all_pass = true;
  for (const auto& g : report.value("gates", nlohmann::json::array())) {
    const bool pass = g.value("pass", false);
    all_pass = all_pass && pass;
    log << (pass ? "pass " : "FAIL ") << g.value("name", std::string("?"))
        << " (value " << g["value"].dump() << ", bound " << g["bound"].dump()
        << ")\n";
  }
  return all_pass ? 0 : 2;
}

// Single entry point the CLI binary dispatches through; returns the process
// exit code (0 ok, 1 validation/I-O failure, 2 gate failure).
inline int run_subcommand(std::string_view name, const ExperimentConfig& cfg,
                          std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) {
    log << "cannot create output directory " << cfg.out_dir.string() << ": "
        << ec.message() << "\n";
    return 1;
  }
  try {
    if (name == "simulate") return run_simulate(cfg, log);
    if (name == "verify") return run_verify(cfg, log);
    if (name == "limit-sample") return run_limit_sample(cfg, log);
    if (name == "kernel-probe") return run_kernel_probe(cfg, log);
    if (name == "report") return run_report(cfg, log);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
  log << "unknown subcommand: " << name << "\n";
  return 1;
}

}  // namespace shotnoise
