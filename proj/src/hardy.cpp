#include "siegel/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "siegel/random.hpp"

namespace siegel {

cplx slice_eval(const TestFunction& f, const RVec& h, const NPoint& a) {
  return f.eval(slice_point(f.domain().form, a, h));
}

namespace {

// Importance proposal for kernel-type integrands. zeta follows a multivariate
// Student-t on R^{2n}; given zeta, each y_i = <lambda_i, x> follows a scaled
// Student-t whose shape matches |<lambda_i, z> + i|^{-Np} at the reference height.
struct Proposal {
  const HermitianForm* form = nullptr;
  std::vector<RVec> lambdas;
  RMat lambda_inv;
  double log_abs_det = 0.0;
  RVec offset;  // <lambda_i, h_ref> + 1
  double sigma = 1.0;
  double nu_zeta = 1.0;
  double nu_x = 1.0;
  double log_c_zeta = 0.0;
  double log_c_x = 0.0;
};

Proposal make_proposal(const TestFunction& f, const DualConeKernel& k, const RVec& href, double p) {
  const SiegelSpec& spec = f.domain();
  const int n = spec.n();
  const int m = spec.m();
  const double p_eff = std::isinf(p) ? 1.0 : p;
  Proposal q;
  q.form = &spec.form;
  q.lambdas = k.lambdas;
  RMat basis(m, m);
  for (int i = 0; i < m; ++i) basis.row(i) = k.lambdas[std::size_t(i)].transpose();
  Eigen::FullPivLU<RMat> lu(basis);
  q.lambda_inv = lu.inverse();
  q.log_abs_det = std::log(std::abs(lu.determinant()));
  q.offset.resize(m);
  for (int i = 0; i < m; ++i) q.offset[i] = k.lambdas[std::size_t(i)].dot(href) + 1.0;
  if (q.offset.minCoeff() <= 0.0) throw DomainError("lp_norm: reference height outside the function's domain");

  const double np = k.exponent * p_eff;
  q.nu_x = np - 1.0;
  if (q.nu_x <= 0.0) {
    throw PreconditionError("lp_norm: kernel exponent too small for p (|f_h|^p not integrable in x)");
  }
  if (n > 0) {
    double scale = 0.0;
    for (int i = 0; i < m; ++i) {
      const double mean_eig = spec.form.pencil(k.lambdas[std::size_t(i)]).trace().real() / n;
      scale += q.offset[i] / mean_eig;
    }
    q.sigma = std::sqrt(scale / m / (2.0 * n));
    q.nu_zeta = std::clamp(m * (np - 1.0) - n, 0.5, 4.0);
    const double d = 2.0 * n;
    q.log_c_zeta = std::lgamma(0.5 * (q.nu_zeta + d)) - std::lgamma(0.5 * q.nu_zeta) -
                   0.5 * d * std::log(q.nu_zeta * std::numbers::pi) - d * std::log(q.sigma);
  }
  q.log_c_x = std::lgamma(0.5 * (q.nu_x + 1.0)) - std::lgamma(0.5 * q.nu_x) -
              0.5 * std::log(q.nu_x * std::numbers::pi) + 0.5 * std::log(q.nu_x);
  return q;
}

struct BlockResult {
  std::vector<double> sum;
  std::vector<double> max;
};

BlockResult run_block(const Proposal& q, const TestFunction& f, const std::vector<RVec>& heights, double p,
                      std::uint64_t seed, std::int64_t count) {
  const HermitianForm& form = *q.form;
  const int n = form.n();
  const int m = form.m();
  const std::size_t H = heights.size();
  const bool sup_mode = std::isinf(p);
  BlockResult out{std::vector<double>(H, 0.0), std::vector<double>(H, 0.0)};

  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::gamma_distribution<double> chi_zeta(0.5 * q.nu_zeta, 2.0);
  std::gamma_distribution<double> chi_x(0.5 * q.nu_x, 2.0);

  NPoint a{CVec(n), RVec(m)};
  RVec y(m);
  for (std::int64_t s = 0; s < count; ++s) {
    double log_q = q.log_abs_det;
    if (n > 0) {
      const double mix = std::sqrt(q.nu_zeta / chi_zeta(rng));
      for (int k = 0; k < n; ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        a.zeta[k] = q.sigma * mix * cplx(re, im);
      }
      const double r2 = a.zeta.squaredNorm();
      log_q += q.log_c_zeta -
               0.5 * (q.nu_zeta + 2.0 * n) * std::log1p(r2 / (q.nu_zeta * q.sigma * q.sigma));
    }
    const RVec phi = form.diag(a.zeta);
    for (int i = 0; i < m; ++i) {
      const double scale = q.lambdas[std::size_t(i)].dot(phi) + q.offset[i];
      const double t = normal(rng) / std::sqrt(chi_x(rng) / q.nu_x);
      y[i] = scale * t / std::sqrt(q.nu_x);
      log_q += q.log_c_x - std::log(scale) - 0.5 * (q.nu_x + 1.0) * std::log1p(t * t / q.nu_x);
    }
    a.x = q.lambda_inv * y;
    for (std::size_t hi = 0; hi < H; ++hi) {
      const double la = f.log_abs(slice_point(form, a, heights[hi]));
      if (sup_mode) {
        out.max[hi] = std::max(out.max[hi], std::exp(la));
      } else {
        out.sum[hi] += std::exp(p * la - log_q);
      }
    }
  }
  return out;
}

void validate_heights(const TestFunction& f, const std::vector<RVec>& heights) {
  const SiegelSpec& spec = f.domain();
  for (const auto& h : heights) {
    if (h.size() != spec.m()) throw ArgumentError("lp_norm: height has wrong length");
    // kernel domains are unions of half-spaces in Im z containing Phi(E) + h
    if (!f.defined_at(slice_point(spec.form, n_identity(spec.form), h))) {
      throw DomainError("lp_norm: slice at this height leaves the function's domain");
    }
  }
}

}  // namespace

std::vector<NormEstimate> lp_norms_crn(const TestFunction& f, const std::vector<RVec>& heights, double p,
                                       const SamplerConfig& cfg) {
  if (!(p > 0.0)) throw ArgumentError("lp_norm: p must be positive");
  if (heights.empty()) return {};
  validate_heights(f, heights);
  const bool sup_mode = std::isinf(p);
  const int blocks = std::max(1, cfg.blocks);
  const std::int64_t per_block = std::max<std::int64_t>(1, (cfg.samples + blocks - 1) / blocks);

  std::vector<NormEstimate> out(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i) {
    out[i].p = p;
    out[i].h = heights[i];
    out[i].lower_bound = sup_mode;
    out[i].samples = per_block * blocks;
  }

  const DualConeKernel* kernel = f.kernel();
  if (kernel == nullptr) {
    const auto& c = std::get<ConstantFunction>(f.kind()).c;
    for (auto& e : out) {
      e.samples = 0;
      e.lower_bound = false;
      e.value = (c == cplx(0.0, 0.0)) ? 0.0 : (sup_mode ? std::abs(c) : std::numeric_limits<double>::infinity());
    }
    return out;
  }

  const RVec href = cfg.reference_height.value_or(heights.front());
  const Proposal proposal = make_proposal(f, *kernel, href, p);

  std::vector<BlockResult> results(static_cast<std::size_t>(blocks));
  const int workers = std::clamp(cfg.workers, 1, blocks);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    try {
      for (int b = w; b < blocks; b += workers) {
        results[std::size_t(b)] =
            run_block(proposal, f, heights, p, sub_seed(cfg.seed, std::uint64_t(b)), per_block);
      }
    } catch (...) {
      errors[std::size_t(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  // reduction in fixed block order
  for (std::size_t hi = 0; hi < heights.size(); ++hi) {
    NormEstimate& est = out[hi];
    if (sup_mode) {
      double mx = 0.0;
      for (const auto& r : results) mx = std::max(mx, r.max[hi]);
      est.value = mx;
      continue;
    }
    double mean = 0.0;
    for (const auto& r : results) mean += r.sum[hi] / double(per_block);
    mean /= blocks;
    double var = 0.0;
    for (const auto& r : results) {
      const double d = r.sum[hi] / double(per_block) - mean;
      var += d * d;
    }
    const double se_mean = blocks > 1 ? std::sqrt(var / (blocks - 1) / blocks) : 0.0;
    if (!std::isfinite(mean) || !std::isfinite(se_mean)) {
      est.value = std::numeric_limits<double>::infinity();
      est.std_error = std::numeric_limits<double>::infinity();
      continue;
    }
    if (mean <= 0.0) {
      est.value = 0.0;
      est.std_error = 0.0;
      continue;
    }
    est.value = std::pow(mean, 1.0 / p);
    est.std_error = est.value / (p * mean) * se_mean;  // delta method
  }
  return out;
}

NormEstimate lp_norm(const TestFunction& f, const RVec& h, double p, const SamplerConfig& cfg) {
  return lp_norms_crn(f, {h}, p, cfg).front();
}

std::vector<std::pair<int, int>> find_violations(const std::vector<NormEstimate>& estimates, double sigmas) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < estimates.size(); ++i) {
    const auto& a = estimates[i];
    const auto& b = estimates[i + 1];
    const double combined = std::hypot(a.std_error, b.std_error);
    if (b.value > a.value + sigmas * combined) out.emplace_back(int(i), int(i + 1));
  }
  return out;
}

MonotonicityReport monotonicity_scan(const TestFunction& f, double p, const RVec& h0, const RVec& hdir,
                                     const std::vector<double>& t_grid, const SamplerConfig& cfg) {
  const SiegelSpec& spec = f.domain();
  if (h0.size() != spec.m() || hdir.size() != spec.m()) {
    throw PreconditionError("monotonicity_scan: h0/hdir have wrong length");
  }
  if (t_grid.empty()) throw PreconditionError("monotonicity_scan: empty t grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0)) throw PreconditionError("monotonicity_scan: t values must be >= 0");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw PreconditionError("monotonicity_scan: t grid must increase");
  }
  if (!spec.omega.contains(h0)) throw PreconditionError("monotonicity_scan: h0 is not in Omega");
  if (membership_closure(*spec.cone, hdir).status == Membership::Outside) {
    throw PreconditionError("monotonicity_scan: hdir is outside the closed generated cone");
  }

  MonotonicityReport report;
  report.t = t_grid;
  for (double t : t_grid) report.h.push_back(h0 + t * hdir);
  SamplerConfig c = cfg;
  if (!c.reference_height) c.reference_height = h0;
  report.estimates = lp_norms_crn(f, report.h, p, c);
  report.violations = find_violations(report.estimates, report.sigmas);
  return report;
}

CorollaryResult sup_vs_liminf(const TestFunction& f, double p, const std::vector<RVec>& to_zero,
                              const std::vector<RVec>& global, const SamplerConfig& cfg) {
  const SiegelSpec& spec = f.domain();
  if (!spans_F(*spec.cone)) throw PreconditionError("sup_vs_liminf: generated cone has empty interior");
  if (to_zero.empty()) throw PreconditionError("sup_vs_liminf: empty to-zero grid");
  std::vector<RVec> heights = to_zero;
  heights.insert(heights.end(), global.begin(), global.end());
  for (const auto& h : heights)
    if (!spec.omega.contains(h)) throw PreconditionError("sup_vs_liminf: grid height outside Omega");

  std::size_t smallest = 0;
  for (std::size_t i = 1; i < to_zero.size(); ++i)
    if (to_zero[i].norm() < to_zero[smallest].norm()) smallest = i;

  SamplerConfig c = cfg;
  if (!c.reference_height) c.reference_height = to_zero[smallest];
  CorollaryResult out;
  out.estimates = lp_norms_crn(f, heights, p, c);
  out.liminf_estimate = out.estimates[smallest];
  out.sup_estimate = *std::max_element(out.estimates.begin(), out.estimates.end(),
                                       [](const auto& a, const auto& b) { return a.value < b.value; });
  const double combined = std::hypot(out.sup_estimate.std_error, out.liminf_estimate.std_error);
  out.agree = std::abs(out.sup_estimate.value - out.liminf_estimate.value) <= 3.0 * combined;
  return out;
}

}  // namespace siegel
