#pragma once

#include <string>

#include <json.hpp>

#include "siegel/registry.hpp"

namespace siegel {

enum class ReportFormat { Csv, Json };

/// Text of one report plus the number of failed checks it records.
struct RunOutput {
  std::string name;  // file stem
  std::string text;
  ReportFormat format = ReportFormat::Json;
  int violations = 0;
};

nlohmann::json to_json(const NormEstimate& e);
nlohmann::json to_json(const MembershipVerdict& v);
nlohmann::json to_json(const MonotonicityReport& r);

/// RFC 4180 quoting for fields containing commas, quotes or newlines.
std::string csv_field(const std::string& s);
/// Shortest round-trip decimal form; "inf" for infinity.
std::string format_number(double x);

/// Columns: domain, function, p, t, h, estimate, std_error, samples.
RunOutput run_monotonicity(const ExperimentConfig& cfg, ReportFormat format);
/// Columns: seed, domain, max_residual, N_theta.
RunOutput run_disc_check(const ExperimentConfig& cfg, ReportFormat format);
/// Always JSON.
RunOutput run_cone_report(const ExperimentConfig& cfg);
/// Always JSON.
RunOutput run_catalog();
RunOutput run_corollary(const ExperimentConfig& cfg, ReportFormat format);

}  // namespace siegel
