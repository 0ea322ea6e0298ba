#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "shotnoise/jump_laws.hpp"
#include "shotnoise/response_kernel.hpp"

namespace shotnoise {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void config_fail(const std::string& message) {
  throw ConfigError(message);
}

inline double number_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    config_fail(std::string("missing or non-numeric field \"") + key + "\"");
  return j[key].get<double>();
}

inline std::optional<double> optional_number(const nlohmann::json& j,
                                             const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_number())
    config_fail(std::string("field \"") + key + "\" must be numeric");
  return j[key].get<double>();
}

}  // namespace detail

// Times are naturally log-scaled here, so "t" accepts plain numbers as well
// as "e^x" string literals (and numeric strings).
inline double parse_time_value(const nlohmann::json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    try {
      if (s.rfind("e^", 0) == 0) return std::exp(std::stod(s.substr(2)));
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    detail::config_fail("cannot parse time literal \"" + s + "\"");
  }
  detail::config_fail("field \"t\" must be a number or an \"e^x\" string");
}

inline JumpLaw parse_jump_law(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    detail::config_fail("\"jump\" needs a \"family\" string");
  const std::string family = j["family"].get<std::string>();
  const auto order = detail::optional_number(j, "moment_order");
  try {
    if (family == "exponential")
      return JumpLaw::exponential(detail::number_field(j, "rate"), order);
    if (family == "gamma")
      return JumpLaw::gamma(detail::number_field(j, "shape"),
                            detail::number_field(j, "scale"), order);
    if (family == "uniform")
      return JumpLaw::uniform(detail::number_field(j, "a"),
                              detail::number_field(j, "b"), order);
    if (family == "pareto")
      return JumpLaw::pareto(detail::number_field(j, "scale"),
                             detail::number_field(j, "index"), order);
    if (family == "point_mass")
      return JumpLaw::point_mass(detail::number_field(j, "value"), order);
  } catch (const std::invalid_argument& e) {
    detail::config_fail(std::string("invalid \"jump\": ") + e.what());
  }
  detail::config_fail("unknown jump family \"" + family + "\"");
}

inline ResponseKernel parse_kernel(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    detail::config_fail("\"kernel\" needs a \"family\" string");
  const std::string family = j["family"].get<std::string>();
  const auto t_min = detail::optional_number(j, "t_min");
  try {
    if (family == "moderate")
      return ResponseKernel::moderate(detail::number_field(j, "rho"), t_min);
    if (family == "slow")
      return ResponseKernel::slow(detail::number_field(j, "rho"), t_min);
    if (family == "fast")
      return ResponseKernel::fast(detail::number_field(j, "rho"),
                                  detail::number_field(j, "gamma"), t_min);
    if (family == "pure_power")
      return ResponseKernel::pure_power(detail::number_field(j, "beta"),
                                        t_min);
  } catch (const std::invalid_argument& e) {
    detail::config_fail(std::string("invalid \"kernel\": ") + e.what());
  }
  detail::config_fail("unknown kernel family \"" + family + "\"");
}

inline ScalingKind parse_scaling(const nlohmann::json& j) {
  const std::string s = j.get<std::string>();
  if (s == "inverse") return ScalingKind::inverse;
  if (s == "remark3") return ScalingKind::asymptotic;
  detail::config_fail("\"scaling\" must be \"inverse\" or \"remark3\"");
}

// Gate thresholds used by the verify subcommand; all overridable.
struct VerifyGates {
  double marginal_skewness = 0.15;
  double marginal_excess_kurtosis = 0.3;
  double campbell_mean_se = 4.0;
  double campbell_variance_se = 3.0;
  std::optional<double> max_cov_deviation;
};

struct ExperimentConfig {
  nlohmann::json echo;  // effective config after defaulting
  std::string hash;     // FNV-1a of the canonical echo
  JumpLaw law;
  ResponseKernel kernel;
  ScalingKind scaling = ScalingKind::inverse;
  double t = 0.0;
  std::vector<double> u_grid;
  std::optional<std::vector<double>> alphas;
  std::uint64_t replications = 10000;
  std::uint64_t master_seed = 1;
  unsigned workers = 0;
  std::filesystem::path out_dir = "out";
  VerifyGates gates;
};

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string to_hex16(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

inline ExperimentConfig config_from_json(nlohmann::json j) {
  if (!j.is_object()) detail::config_fail("config root must be an object");
  if (!j.contains("jump")) detail::config_fail("missing \"jump\"");
  if (!j.contains("kernel")) detail::config_fail("missing \"kernel\"");
  if (!j.contains("t")) detail::config_fail("missing \"t\"");

  ExperimentConfig cfg{nlohmann::json{},
                       "",
                       parse_jump_law(j["jump"]),
                       parse_kernel(j["kernel"]),
                       ScalingKind::inverse,
                       parse_time_value(j["t"]),
                       {},
                       {},
                       10000,
                       1,
                       0,
                       "out",
                       {}};

  if (j.contains("scaling")) cfg.scaling = parse_scaling(j["scaling"]);
  if (j.contains("u_grid")) {
    if (!j["u_grid"].is_array() || j["u_grid"].empty())
      detail::config_fail("\"u_grid\" must be a nonempty array");
    cfg.u_grid = j["u_grid"].get<std::vector<double>>();
  } else {
    cfg.u_grid = {0.0, 0.5, 1.0};
  }
  for (std::size_t i = 0; i < cfg.u_grid.size(); ++i) {
    if (!(cfg.u_grid[i] >= 0.0 && cfg.u_grid[i] <= 1.0))
      detail::config_fail("u_grid values must lie in [0,1]");
    if (i > 0 && !(cfg.u_grid[i] > cfg.u_grid[i - 1]))
      detail::config_fail("u_grid not increasing");
  }
  if (j.contains("alphas") && !j["alphas"].is_null()) {
    if (!j["alphas"].is_array())
      detail::config_fail("\"alphas\" must be an array");
    cfg.alphas = j["alphas"].get<std::vector<double>>();
    if (cfg.alphas->size() != cfg.u_grid.size())
      detail::config_fail("\"alphas\" length must match \"u_grid\"");
  }
  if (j.contains("replications")) {
    if (!j["replications"].is_number_integer() ||
        j["replications"].get<std::int64_t>() < 1)
      detail::config_fail("\"replications\" must be a positive integer");
    cfg.replications = j["replications"].get<std::uint64_t>();
  }
  if (j.contains("master_seed")) {
    if (!j["master_seed"].is_number_integer() ||
        j["master_seed"].get<std::int64_t>() < 0)
      detail::config_fail("\"master_seed\" must be a nonnegative integer");
    cfg.master_seed = j["master_seed"].get<std::uint64_t>();
  }
  if (j.contains("workers")) {
    if (!j["workers"].is_number_integer() ||
        j["workers"].get<std::int64_t>() < 0)
      detail::config_fail("\"workers\" must be a nonnegative integer");
    cfg.workers = j["workers"].get<unsigned>();
  }
  if (j.contains("out")) {
    if (!j["out"].is_string()) detail::config_fail("\"out\" must be a string");
    cfg.out_dir = j["out"].get<std::string>();
  }
  if (j.contains("gates")) {
    const auto& g = j["gates"];
    if (!g.is_object()) detail::config_fail("\"gates\" must be an object");
    if (auto v = detail::optional_number(g, "marginal_skewness"))
      cfg.gates.marginal_skewness = *v;
    if (auto v = detail::optional_number(g, "marginal_excess_kurtosis"))
      cfg.gates.marginal_excess_kurtosis = *v;
    if (auto v = detail::optional_number(g, "campbell_mean_se"))
      cfg.gates.campbell_mean_se = *v;
    if (auto v = detail::optional_number(g, "campbell_variance_se"))
      cfg.gates.campbell_variance_se = *v;
    if (auto v = detail::optional_number(g, "max_cov_deviation"))
      cfg.gates.max_cov_deviation = *v;
  }

  if (!(cfg.t > cfg.kernel.cutoff()))
    detail::config_fail("t must exceed the kernel cutoff t_min");

  // Canonical echo with defaults resolved; hashed for provenance.
  nlohmann::json echo = j;
  echo["t"] = cfg.t;
  echo["u_grid"] = cfg.u_grid;
  echo["scaling"] = to_string(cfg.scaling);
  echo["replications"] = cfg.replications;
  echo["master_seed"] = cfg.master_seed;
  echo["workers"] = cfg.workers;
  echo["out"] = cfg.out_dir.string();
  echo["kernel"]["t_min"] = cfg.kernel.cutoff();
  cfg.echo = echo;
  nlohmann::json hashed = echo;  // the output path is not semantic
  hashed.erase("out");
  cfg.hash = to_hex16(fnv1a64(hashed.dump()));
  return cfg;
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " +
                      e.what());
  }
  return config_from_json(std::move(j));
}

}  // namespace shotnoise
