#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "siegel/test_function.hpp"

namespace siegel {

inline constexpr double kInfP = std::numeric_limits<double>::infinity();

struct SamplerConfig {
  std::int64_t samples = 100000;
  int blocks = 64;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Height the importance proposal is tuned to; defaults to the first height.
  std::optional<RVec> reference_height;
};

/// Monte-Carlo estimate of |f_h|_{L^p(N)} with Lebesgue measure on C^n x R^m
/// in the coordinates of the form.
struct NormEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  double p = 2.0;
  RVec h;
  /// p = infinity: sampled supremum, a lower bound of the true norm.
  bool lower_bound = false;
};

/// f_h(a) = f(zeta, x + i Phi(zeta) + i h). Throws DomainError off the function's domain.
cplx slice_eval(const TestFunction& f, const RVec& h, const NPoint& a);

NormEstimate lp_norm(const TestFunction& f, const RVec& h, double p, const SamplerConfig& cfg = {});

/// Estimates at several heights from one set of random numbers (common random numbers).
std::vector<NormEstimate> lp_norms_crn(const TestFunction& f, const std::vector<RVec>& heights, double p,
                                       const SamplerConfig& cfg = {});

struct MonotonicityReport {
  std::vector<double> t;
  std::vector<RVec> h;
  std::vector<NormEstimate> estimates;
  /// Adjacent pairs (i, i+1) whose estimate increases by more than
  /// `sigmas` combined standard errors.
  std::vector<std::pair<int, int>> violations;
  double sigmas = 3.0;
};

std::vector<std::pair<int, int>> find_violations(const std::vector<NormEstimate>& estimates, double sigmas = 3.0);

/// Estimates along h0 + t hdir. Preconditions (h0 in Omega, hdir not Outside
/// the generated cone, t increasing and >= 0) raise PreconditionError.
MonotonicityReport monotonicity_scan(const TestFunction& f, double p, const RVec& h0, const RVec& hdir,
                                     const std::vector<double>& t_grid, const SamplerConfig& cfg = {});

struct CorollaryResult {
  NormEstimate sup_estimate;
  NormEstimate liminf_estimate;
  std::vector<NormEstimate> estimates;  // to-zero grid first, then global grid
  bool agree = false;
};

/// sup over `global` (and the to-zero grid) versus the estimate at the
/// smallest height of `to_zero`; they agree within 3 combined standard errors
/// for holomorphic f. Requires the generated cone to span F.
CorollaryResult sup_vs_liminf(const TestFunction& f, double p, const std::vector<RVec>& to_zero,
                              const std::vector<RVec>& global, const SamplerConfig& cfg = {});

}  // namespace siegel
