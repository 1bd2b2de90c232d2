#pragma once

#include <vector>

#include "siegel/types.hpp"

namespace siegel {

/// Hermitian map Phi: E x E -> F_C stored as an m-tuple of n x n Hermitian
/// matrices, with Phi(zeta, zeta')_k = zeta'^* A_k zeta.
class HermitianForm {
 public:
  HermitianForm() = default;

  /// Throws ArgumentError on shape mismatch or if some A_k is not Hermitian
  /// within `hermitian_tol`.
  HermitianForm(int n, std::vector<CMat> matrices, double hermitian_tol = 1e-12);

  /// n = 1, m = 1, A = (1): the Heisenberg group. For n > 1, A = I_n.
  static HermitianForm heisenberg(int n);

  int n() const { return n_; }
  int m() const { return static_cast<int>(matrices_.size()); }
  const std::vector<CMat>& matrices() const { return matrices_; }
  const CMat& matrix(int k) const { return matrices_[static_cast<std::size_t>(k)]; }

  /// (zeta2^* A_k zeta)_k. Linear in `zeta`, conjugate-linear in `zeta2`.
  CVec eval(const CVec& zeta, const CVec& zeta2) const;

  /// Phi(zeta) = Phi(zeta, zeta), which is real.
  RVec diag(const CVec& zeta) const;

  /// The dual pencil lambda -> sum_k lambda_k A_k.
  CMat pencil(const RVec& lambda) const;

  void check_dim(const CVec& zeta) const;

 private:
  int n_ = 0;
  std::vector<CMat> matrices_;
};

/// A point (zeta, z) of E x F_C.
struct AmbientPoint {
  CVec zeta;
  CVec z;
};

/// A point (zeta, x) of the group N = E x F.
struct NPoint {
  CVec zeta;
  RVec x;
};

CVec eval_form(const HermitianForm& form, const CVec& zeta, const CVec& zeta2);

/// rho(zeta, z) = Im z - Phi(zeta).
RVec rho(const HermitianForm& form, const AmbientPoint& p);

AmbientPoint mul_ambient(const HermitianForm& form, const AmbientPoint& p, const AmbientPoint& q);
AmbientPoint inv_ambient(const HermitianForm& form, const AmbientPoint& p);
AmbientPoint ambient_identity(const HermitianForm& form);

NPoint mul_N(const HermitianForm& form, const NPoint& a, const NPoint& b);
NPoint inv_N(const NPoint& a);
NPoint n_identity(const HermitianForm& form);

/// iota(zeta, x) = (zeta, x + i Phi(zeta)); lands on the quadric rho = 0.
AmbientPoint iota(const HermitianForm& form, const NPoint& a);

/// (zeta, z) -> (zeta, Re z). On the quadric this inverts iota.
NPoint project_pi(const AmbientPoint& p);

/// (zeta, x + i Phi(zeta) + i h); satisfies rho = h.
AmbientPoint slice_point(const HermitianForm& form, const NPoint& a, const RVec& h);

/// Maximum coordinate distance between two ambient points.
double distance(const AmbientPoint& p, const AmbientPoint& q);
double distance(const NPoint& a, const NPoint& b);

}  // namespace siegel
