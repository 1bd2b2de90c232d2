#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/disc.hpp"
#include "siegel/hardy.hpp"

namespace siegel {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builtin keys: "heisenberg(n)", "ex1(C|H,r,k,p)", "ex2(k,p,q)". Throws ConfigError on unknown keys.
std::shared_ptr<const SiegelSpec> builtin_domain(const std::string& key);

/// Keys listed by the example catalog.
std::vector<std::string> catalog_keys();

/// n, m, rank, b, spans_F, Omega and equivariance data for a builtin key.
nlohmann::json domain_metadata(const std::string& key);

/// A builtin key (string) or an inline description
///   { n, m, matrices: [re, im, ...] (row-major, A_1 first), cone, base_point }
/// with cone one of "half_line", "generated", "positive_definite(C|H,r)", "spin(q)".
std::shared_ptr<const SiegelSpec> domain_from_json(const nlohmann::json& j);

struct FunctionConfig {
  std::string kind = "kernel";  // kernel | control | constant
  int exponent = 0;             // 0: chosen per p
  double s = 0.5;
  RVec u;
  cplx c{0.0, 0.0};
};

struct GridConfig {
  RVec h0;
  RVec hdir;
  std::vector<double> t;
};

struct DiscConfig {
  int count = 100;
  int n_theta = kDefaultNodes;
  double coeff_scale = 0.3;
  double hpp_scale = 0.5;
};

struct ConeReportConfig {
  int vectors = 1000;
  int decompose_points = 100;
  int dual_probes = 1000;
};

struct CorollaryConfig {
  RVec direction;
  std::vector<double> to_zero{0.001, 0.01, 0.05};
  std::vector<double> global{0.1, 0.5, 1.0, 2.0, 5.0};
};

struct ExperimentConfig {
  std::string domain_name;
  std::shared_ptr<const SiegelSpec> domain;
  FunctionConfig function;
  std::vector<double> p{2.0};
  GridConfig grid;
  SamplerConfig sampler;
  DiscConfig disc;
  ConeReportConfig cone;
  CorollaryConfig corollary;
};

/// Parses a JSON or TOML document (TOML through CLI11's reader; arrays must be flat).
nlohmann::json parse_config_text(const std::string& text, bool toml);
/// Chooses the format from the extension (.toml / .json), sniffing otherwise.
nlohmann::json load_config_file(const std::string& path);

/// Builds and validates an experiment. Throws ConfigError on malformed input.
ExperimentConfig parse_experiment(const nlohmann::json& j);

/// Test function for one p of the experiment.
TestFunction make_function(const ExperimentConfig& cfg, double p);

}  // namespace siegel
