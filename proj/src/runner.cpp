#include "siegel/runner.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "siegel/disc.hpp"
#include "siegel/random.hpp"

namespace siegel {

using nlohmann::json;

namespace {

std::vector<double> to_std(const RVec& v) { return {v.data(), v.data() + v.size()}; }

std::string join_vector(const RVec& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_number(v[i]);
  }
  return out;
}

json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

const char* kMonotonicityHeader = "domain,function,p,t,h,estimate,std_error,samples\n";

void csv_row(std::ostringstream& os, const std::string& domain, const std::string& function, double p, double t,
             const NormEstimate& e) {
  os << csv_field(domain) << ',' << csv_field(function) << ',' << format_number(p) << ',' << format_number(t) << ','
     << csv_field(join_vector(e.h)) << ',' << format_number(e.value) << ',' << format_number(e.std_error) << ','
     << e.samples << '\n';
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json to_json(const NormEstimate& e) {
  return {{"h", to_std(e.h)},
          {"p", number_or_string(e.p)},
          {"value", number_or_string(e.value)},
          {"std_error", number_or_string(e.std_error)},
          {"samples", e.samples},
          {"lower_bound", e.lower_bound}};
}

json to_json(const MembershipVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["residual"] = v.residual;
  j["iterations"] = v.iterations;
  if (v.status == Membership::Inside) {
    json pts = json::array();
    for (std::size_t i = 0; i < v.points.size(); ++i) {
      json zeta = json::array();
      for (Eigen::Index k = 0; k < v.points[i].size(); ++k) {
        zeta.push_back({v.points[i][k].real(), v.points[i][k].imag()});
      }
      pts.push_back({{"weight", v.weights[i]}, {"zeta", zeta}});
    }
    j["inner_certificate"] = pts;
  }
  if (v.status == Membership::Outside) {
    j["outer_certificate"] = {{"lambda", to_std(v.lambda)}, {"pencil_min_eig", v.pencil_min_eig}};
  }
  return j;
}

json to_json(const MonotonicityReport& r) {
  json grid = json::array();
  for (std::size_t i = 0; i < r.t.size(); ++i) grid.push_back({{"t", r.t[i]}, {"h", to_std(r.h[i])}});
  json est = json::array();
  for (const auto& e : r.estimates) est.push_back(to_json(e));
  json viol = json::array();
  for (const auto& [a, b] : r.violations) viol.push_back({a, b});
  return {{"grid", grid}, {"estimates", est}, {"violations", viol}, {"sigmas", r.sigmas}};
}

RunOutput run_monotonicity(const ExperimentConfig& cfg, ReportFormat format) {
  RunOutput out{"monotonicity", "", format, 0};
  std::ostringstream csv;
  csv << kMonotonicityHeader;
  json runs = json::array();
  for (double p : cfg.p) {
    const TestFunction f = make_function(cfg, p);
    const MonotonicityReport rep = monotonicity_scan(f, p, cfg.grid.h0, cfg.grid.hdir, cfg.grid.t, cfg.sampler);
    out.violations += int(rep.violations.size());
    for (std::size_t i = 0; i < rep.t.size(); ++i) csv_row(csv, cfg.domain_name, f.label(), p, rep.t[i], rep.estimates[i]);
    json r = to_json(rep);
    r["p"] = number_or_string(p);
    r["function"] = f.label();
    r["holomorphic"] = f.holomorphic();
    runs.push_back(r);
  }
  if (format == ReportFormat::Csv) {
    out.text = csv.str();
  } else {
    json j = {{"domain", cfg.domain_name},
              {"seed", cfg.sampler.seed},
              {"samples", cfg.sampler.samples},
              {"blocks", cfg.sampler.blocks},
              {"h0", to_std(cfg.grid.h0)},
              {"hdir", to_std(cfg.grid.hdir)},
              {"runs", runs},
              {"violations", out.violations}};
    out.text = j.dump(2) + "\n";
  }
  return out;
}

RunOutput run_disc_check(const ExperimentConfig& cfg, ReportFormat format) {
  RunOutput out{"disc_check", "", format, 0};
  const SiegelSpec& spec = *cfg.domain;
  const HermitianForm& form = spec.form;
  const RVec hpp = cfg.disc.hpp_scale * spec.base_point;
  std::vector<TestFunction> fns;
  for (double p : cfg.p) fns.push_back(make_function(cfg, p));

  std::ostringstream csv;
  csv << "seed,domain,max_residual,N_theta\n";
  json rows = json::array();
  double worst_residual = 0.0;
  double worst_centre = 0.0;
  for (int i = 0; i < cfg.disc.count; ++i) {
    const std::uint64_t seed = sub_seed(cfg.sampler.seed, std::uint64_t(i));
    Rng rng(seed);
    DiscCoefficients d;
    for (int j = 0; j < form.m(); ++j) d.v.push_back(random_cvec(rng, form.n(), cfg.disc.coeff_scale));
    const NPoint base{random_cvec(rng, form.n()), random_rvec(rng, form.m())};

    const double residual = boundary_residual(form, d, cfg.disc.n_theta);
    const AmbientPoint centre = disc_eval(form, d, 0.0);
    const AmbientPoint expected{CVec::Zero(form.n()), kI * psi(form, d.v).cast<cplx>()};
    const double centre_error = distance(centre, expected);
    worst_residual = std::max(worst_residual, residual);
    worst_centre = std::max(worst_centre, centre_error);
    if (residual > 1e-9) ++out.violations;
    if (centre_error > 1e-12) ++out.violations;

    json sub = json::array();
    for (std::size_t k = 0; k < fns.size(); ++k) {
      json s = {{"p", number_or_string(cfg.p[k])}};
      try {
        const SubmeanResult r = submean_check(fns[k], d, base, hpp, cfg.p[k], cfg.disc.n_theta);
        const double conv = convolution_average(fns[k], d, base, hpp, cfg.p[k], cfg.disc.n_theta);
        const bool ok = r.lhs <= r.rhs + 1e-8;
        if (!ok) ++out.violations;
        s.update({{"lhs", r.lhs},
                  {"rhs", r.rhs},
                  {"exponent", r.exponent},
                  {"convolution_rhs", conv},
                  {"ok", ok}});
      } catch (const DomainError& e) {
        ++out.violations;
        s.update({{"ok", false}, {"error", e.what()}});
      }
      sub.push_back(s);
    }
    csv << seed << ',' << csv_field(spec.name) << ',' << format_number(residual) << ',' << cfg.disc.n_theta << '\n';
    rows.push_back({{"seed", seed},
                    {"max_residual", residual},
                    {"centre_error", centre_error},
                    {"N_theta", cfg.disc.n_theta},
                    {"submean", sub}});
  }
  if (format == ReportFormat::Csv) {
    out.text = csv.str();
  } else {
    json j = {{"domain", spec.name},
              {"hpp", to_std(hpp)},
              {"max_residual", worst_residual},
              {"max_centre_error", worst_centre},
              {"discs", rows},
              {"violations", out.violations}};
    out.text = j.dump(2) + "\n";
  }
  return out;
}

RunOutput run_cone_report(const ExperimentConfig& cfg) {
  RunOutput out{"cone_report", "", ReportFormat::Json, 0};
  const SiegelSpec& spec = *cfg.domain;
  const ConeModel& cone = *spec.cone;
  const HermitianForm& form = spec.form;
  const ConeOptions opt;
  Rng rng(sub_seed(cfg.sampler.seed, 0xc0e));

  int counts[3] = {0, 0, 0};
  int conflicts = 0, certificate_failures = 0, dual_failures = 0, scale_mismatches = 0;
  std::vector<RVec> outer_pool;
  std::vector<RVec> inner_targets;
  json listed = json::array();
  constexpr int kListed = 16;

  for (int i = 0; i < cfg.cone.vectors; ++i) {
    const RVec h = random_rvec(rng, form.m());
    const MembershipVerdict v = membership_closure(cone, h, opt);
    counts[int(v.status)]++;
    if (!verify_certificate(cone, h, v, opt.tol)) ++certificate_failures;
    if (membership_closure(cone, 2.0 * h, opt).status != v.status) ++scale_mismatches;
    if (v.status == Membership::Outside) {
      if (try_inner(cone, h, opt)) ++conflicts;
      for (int k = 0; k < cfg.cone.dual_probes; ++k) {
        const CVec z = random_cvec(rng, form.n());
        const double nz = z.squaredNorm();
        if (nz > 0.0 && v.lambda.dot(form.diag(z)) / nz < -opt.tol) {
          ++dual_failures;
          break;
        }
      }
      outer_pool.push_back(v.lambda);
    } else if (v.status == Membership::Inside) {
      inner_targets.push_back(h);
    }
    if (i < kListed) {
      json e = to_json(v);
      e["h"] = to_std(h);
      listed.push_back(e);
    }
  }
  // an Inside vector must not be separated by any outer certificate
  for (const RVec& h : inner_targets) {
    const double hn = h.norm();
    for (const RVec& lam : outer_pool) {
      if (lam.dot(h) < -opt.tol * hn) {
        ++conflicts;
        break;
      }
    }
  }

  double worst_decompose = 0.0;
  int decompose_failures = 0;
  double max_norm = 0.0;
  for (int i = 0; i < cfg.cone.decompose_points; ++i) {
    std::vector<CVec> v;
    for (int j = 0; j < form.m(); ++j) v.push_back(random_cvec(rng, form.n()));
    const RVec h = psi(form, v);
    try {
      const Decomposition d = decompose_info(cone, h, opt);
      const double r = (psi(form, d.v) - h).norm();
      worst_decompose = std::max(worst_decompose, r / (1.0 + h.norm()));
      max_norm = std::max(max_norm, d.max_norm);
      if (r > 1e-8 * (1.0 + h.norm())) ++decompose_failures;
    } catch (const NotInCone&) {
      ++decompose_failures;
    }
  }

  out.violations = conflicts + certificate_failures + dual_failures + scale_mismatches + decompose_failures;
  json j = {{"domain", spec.name},
            {"generators", cone.generators().cols()},
            {"spans_F", spans_F(cone)},
            {"vectors", cfg.cone.vectors},
            {"counts", {{"Inside", counts[0]}, {"Outside", counts[1]}, {"Undetermined", counts[2]}}},
            {"conflicts", conflicts},
            {"certificate_failures", certificate_failures},
            {"dual_soundness_failures", dual_failures},
            {"scale_mismatches", scale_mismatches},
            {"decompose", {{"points", cfg.cone.decompose_points},
                           {"max_relative_residual", worst_decompose},
                           {"max_coefficient_norm", max_norm},
                           {"failures", decompose_failures}}},
            {"verdicts", listed},
            {"violations", out.violations}};
  out.text = j.dump(2) + "\n";
  return out;
}

RunOutput run_catalog() {
  RunOutput out{"catalog", "", ReportFormat::Json, 0};
  json arr = json::array();
  for (const auto& key : catalog_keys()) arr.push_back(domain_metadata(key));
  out.text = json{{"domains", arr}}.dump(2) + "\n";
  return out;
}

RunOutput run_corollary(const ExperimentConfig& cfg, ReportFormat format) {
  RunOutput out{"corollary", "", format, 0};
  std::vector<RVec> to_zero, global;
  for (double s : cfg.corollary.to_zero) to_zero.push_back(s * cfg.corollary.direction);
  for (double s : cfg.corollary.global) global.push_back(s * cfg.corollary.direction);
  std::vector<double> scales = cfg.corollary.to_zero;
  scales.insert(scales.end(), cfg.corollary.global.begin(), cfg.corollary.global.end());

  std::ostringstream csv;
  csv << kMonotonicityHeader;
  json runs = json::array();
  for (double p : cfg.p) {
    const TestFunction f = make_function(cfg, p);
    const CorollaryResult r = sup_vs_liminf(f, p, to_zero, global, cfg.sampler);
    if (!r.agree) ++out.violations;
    for (std::size_t i = 0; i < r.estimates.size(); ++i) {
      csv_row(csv, cfg.domain_name, f.label(), p, scales[i], r.estimates[i]);
    }
    json est = json::array();
    for (const auto& e : r.estimates) est.push_back(to_json(e));
    runs.push_back({{"p", number_or_string(p)},
                    {"function", f.label()},
                    {"sup", to_json(r.sup_estimate)},
                    {"liminf", to_json(r.liminf_estimate)},
                    {"agree", r.agree},
                    {"estimates", est}});
  }
  if (format == ReportFormat::Csv) {
    out.text = csv.str();
  } else {
    out.text = json{{"domain", cfg.domain_name}, {"runs", runs}, {"violations", out.violations}}.dump(2) + "\n";
  }
  return out;
}

}  // namespace siegel
