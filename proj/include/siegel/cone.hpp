#pragma once

#include <optional>
#include <vector>

#include "siegel/quadric.hpp"

namespace siegel {

/// Result of a Lawson-Hanson solve of min ||A x - b|| subject to x >= 0.
struct NnlsResult {
  RVec x;
  double residual = 0.0;
  int iterations = 0;
};

NnlsResult nnls(const RMat& a, const RVec& b, int max_iterations = 0);

/// The closed convex cone generated by Phi(E), represented by a cached set of
/// sampled generators Phi(zeta_i) and by the dual pencil of the form.
class ConeModel {
 public:
  /// `generator_count` <= 0 selects 64 m.
  explicit ConeModel(HermitianForm form, int generator_count = 0);

  const HermitianForm& form() const { return form_; }
  int m() const { return form_.m(); }
  const std::vector<CVec>& generator_points() const { return points_; }
  /// m x K matrix whose columns are Phi(zeta_i).
  const RMat& generators() const { return generators_; }

 private:
  HermitianForm form_;
  std::vector<CVec> points_;
  RMat generators_;
};

/// Deterministic low-discrepancy unit vectors in C^n (Sobol points pushed
/// through Box-Muller and normalized).
std::vector<CVec> sphere_directions(int n, int count);

enum class Membership { Inside, Outside, Undetermined };
const char* to_string(Membership m);

struct MembershipVerdict {
  Membership status = Membership::Undetermined;
  /// Inner certificate: h ~ sum_i weights[i] * Phi(points[i]), weights >= 0.
  std::vector<CVec> points;
  std::vector<double> weights;
  /// Outer certificate: unit lambda with PSD pencil and <lambda, h/|h|> < -tol.
  RVec lambda;
  /// Relative residual |sum w_i Phi(zeta_i) - h| / |h| of the best inner fit.
  double residual = 0.0;
  /// Smallest eigenvalue of the pencil of `lambda` (outer certificates).
  double pencil_min_eig = 0.0;
  int iterations = 0;
};

struct ConeOptions {
  double tol = 1e-8;
  int max_iterations = 400;
};

/// Psi(v) = sum_j Phi(v_j).
RVec psi(const HermitianForm& form, const std::vector<CVec>& v);

/// Decides h in closure(C). Tolerances are relative to |h|, so verdicts are
/// invariant under positive scaling of h.
MembershipVerdict membership_closure(const ConeModel& model, const RVec& h, const ConeOptions& opt = {});

/// Inner certificate using only the model's cached generators (no column generation).
std::optional<MembershipVerdict> try_inner(const ConeModel& model, const RVec& h, const ConeOptions& opt = {});

/// Recomputes a certificate from scratch and checks that it proves its status.
bool verify_certificate(const ConeModel& model, const RVec& h, const MembershipVerdict& v, double tol);

struct Decomposition {
  std::vector<CVec> v;  // length m
  double residual = 0.0;
  double max_norm = 0.0;  // max_j |v_j|
};

/// m-tuple v with Psi(v) ~ h. Throws NotInCone unless h receives an Inside verdict.
Decomposition decompose_info(const ConeModel& model, const RVec& h, const ConeOptions& opt = {});
std::vector<CVec> decompose(const ConeModel& model, const RVec& h, const ConeOptions& opt = {});

/// True iff the generators have rank m.
bool spans_F(const ConeModel& model);

/// Smallest eigenvalue and its unit eigenvector of a Hermitian matrix.
std::pair<double, CVec> min_eigenpair(const CMat& hermitian);

}  // namespace siegel
