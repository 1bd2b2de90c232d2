// siegel_verify: config-driven verification runs.
//
// Exit codes: 0 ok, 1 violation (or no violation under --expect-violation),
// 2 config error, 3 precondition failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "siegel/runner.hpp"

namespace {

enum Exit { kOk = 0, kViolation = 1, kConfig = 2, kPrecondition = 3 };

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
  std::optional<int> workers;
  std::string out;
  std::string format = "csv";
  bool expect_violation = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "TOML or JSON experiment config");
  sub->add_option("--seed", c.seed, "master seed");
  sub->add_option("--samples", c.samples, "Monte-Carlo samples per height");
  sub->add_option("--workers", c.workers, "worker threads (results do not depend on it)");
  sub->add_option("--out", c.out, "output directory (default: stdout)");
  sub->add_option("--format", c.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--expect-violation", c.expect_violation, "succeed only if a violation is found");
}

siegel::ExperimentConfig load(const Common& c) {
  nlohmann::json j = c.config.empty() ? nlohmann::json::object() : siegel::load_config_file(c.config);
  siegel::ExperimentConfig cfg = siegel::parse_experiment(j);
  if (c.seed) cfg.sampler.seed = *c.seed;
  if (c.samples) {
    if (*c.samples < 1) throw siegel::ConfigError("--samples must be positive");
    cfg.sampler.samples = *c.samples;
  }
  if (c.workers) {
    if (*c.workers < 1) throw siegel::ConfigError("--workers must be positive");
    cfg.sampler.workers = *c.workers;
  }
  return cfg;
}

int emit(const siegel::RunOutput& r, const Common& c) {
  if (c.out.empty()) {
    std::cout << r.text;
  } else {
    std::filesystem::create_directories(c.out);
    const std::string ext = r.format == siegel::ReportFormat::Csv ? ".csv" : ".json";
    const auto path = std::filesystem::path(c.out) / (r.name + ext);
    std::ofstream(path, std::ios::binary) << r.text;
    std::cerr << "wrote " << path.string() << "\n";
  }
  std::cerr << r.name << ": " << r.violations << " violation(s)\n";
  const bool found = r.violations > 0;
  return found == c.expect_violation ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification runs for Siegel domains and slice norms"};
  app.require_subcommand(1);
  Common common;
  auto* mono = app.add_subcommand("verify-monotonicity", "slice-norm monotonicity scans");
  auto* disc = app.add_subcommand("disc-check", "analytic disc residuals and sub-mean checks");
  auto* cone = app.add_subcommand("cone-report", "cone membership and certificate audit (JSON)");
  auto* catalog = app.add_subcommand("example-catalog", "builtin domains with computed metadata (JSON)");
  auto* corollary = app.add_subcommand("corollary-check", "sup over heights against the small-height limit");
  for (auto* s : {mono, disc, cone, catalog, corollary}) add_common(s, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfig;
  }

  const siegel::ReportFormat format =
      common.format == "json" ? siegel::ReportFormat::Json : siegel::ReportFormat::Csv;
  try {
    if (catalog->parsed()) return emit(siegel::run_catalog(), common);
    const siegel::ExperimentConfig cfg = load(common);
    if (mono->parsed()) return emit(siegel::run_monotonicity(cfg, format), common);
    if (disc->parsed()) return emit(siegel::run_disc_check(cfg, format), common);
    if (cone->parsed()) return emit(siegel::run_cone_report(cfg), common);
    if (corollary->parsed()) return emit(siegel::run_corollary(cfg, format), common);
  } catch (const siegel::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const siegel::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const siegel::DomainError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const siegel::ArgumentError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  }
  return kConfig;
}
