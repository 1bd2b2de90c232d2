#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siegel/runner.hpp"

namespace py = pybind11;
using namespace siegel;
using nlohmann::json;

namespace {

std::shared_ptr<const SiegelSpec> domain(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return domain_from_json(json::parse(spec));
  return builtin_domain(spec);
}

ExperimentConfig experiment(const std::string& config_json) {
  return parse_experiment(config_json.empty() ? json::object() : json::parse(config_json));
}

py::tuple as_tuple(const RunOutput& r) { return py::make_tuple(r.name, r.text, r.violations); }

ReportFormat format_of(const std::string& f) {
  if (f == "csv") return ReportFormat::Csv;
  if (f == "json") return ReportFormat::Json;
  throw ConfigError("format must be csv or json");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hardy space checks on quadric Siegel domains";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

  m.def("catalog_keys", &catalog_keys);
  m.def("domain_metadata", [](const std::string& key) { return domain_metadata(key).dump(); });

  m.def("dims", [](const std::string& spec) {
    const auto d = domain(spec);
    return py::make_tuple(d->n(), d->m());
  });
  m.def("base_point", [](const std::string& spec) { return RVec(domain(spec)->base_point); });
  m.def("phi", [](const std::string& spec, const CVec& zeta) { return domain(spec)->form.diag(zeta); });
  m.def("psi", [](const std::string& spec, const std::vector<CVec>& v) { return psi(domain(spec)->form, v); });
  m.def("in_omega", [](const std::string& spec, const RVec& h) { return domain(spec)->omega.contains(h); });
  m.def("membership", [](const std::string& spec, const RVec& h) {
    return to_json(membership_closure(*domain(spec)->cone, h)).dump();
  });

  m.def(
      "lp_norm",
      [](const std::string& spec, const RVec& h, double p, std::int64_t samples, std::uint64_t seed, int workers,
         int exponent) {
        const auto d = domain(spec);
        const TestFunction f =
            TestFunction::dual_cone_kernel(d, exponent > 0 ? exponent : kernel_exponent_for(d->n(), d->m(), p));
        SamplerConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.workers = workers;
        NormEstimate e;
        {
          py::gil_scoped_release release;
          e = lp_norm(f, h, p, cfg);
        }
        return py::make_tuple(e.value, e.std_error, e.samples);
      },
      py::arg("domain"), py::arg("h"), py::arg("p") = 2.0, py::arg("samples") = 100000, py::arg("seed") = 1,
      py::arg("workers") = 1, py::arg("exponent") = 0);

  m.def("boundary_residual", [](const std::string& spec, const std::vector<CVec>& v, int n_theta) {
    return boundary_residual(domain(spec)->form, DiscCoefficients{v}, n_theta);
  }, py::arg("domain"), py::arg("v"), py::arg("n_theta") = kDefaultNodes);

  m.def("run_monotonicity", [](const std::string& cfg, const std::string& fmt) {
    return as_tuple(run_monotonicity(experiment(cfg), format_of(fmt)));
  }, py::arg("config") = "", py::arg("format") = "csv");
  m.def("run_disc_check", [](const std::string& cfg, const std::string& fmt) {
    return as_tuple(run_disc_check(experiment(cfg), format_of(fmt)));
  }, py::arg("config") = "", py::arg("format") = "csv");
  m.def("run_cone_report", [](const std::string& cfg) { return as_tuple(run_cone_report(experiment(cfg))); },
        py::arg("config") = "");
  m.def("run_corollary", [](const std::string& cfg, const std::string& fmt) {
    return as_tuple(run_corollary(experiment(cfg), format_of(fmt)));
  }, py::arg("config") = "", py::arg("format") = "csv");
  m.def("run_catalog", [] { return as_tuple(run_catalog()); });
}
