#pragma once

#include <cstdint>

#include "siegel/random.hpp"
#include "siegel/siegel_spec.hpp"

namespace siegel {

// ---------------------------------------------------------------------------
// Matrix domains: E = k x r matrices over K with columns p+1..r zero,
// F = self-adjoint r x r matrices over K, Omega = positive definite cone,
// Phi(zeta) = zeta^* zeta, T+ = upper triangular matrices acting by t h t^*.
// ---------------------------------------------------------------------------

struct MatrixDomainSpec {
  Field field = Field::Complex;
  int r = 1;
  int k = 1;
  int p = 1;

  /// Throws ArgumentError unless 0 <= p <= r and k >= 0.
  void validate() const;
  int n() const { return k * p * complex_dim(field); }
  int m() const { return layout().dim(); }
  SelfAdjointLayout layout() const { return {field, r}; }

  /// Complex coordinates of zeta for the complex structure given by left
  /// multiplication by i: each entry alpha + beta j contributes alpha (and beta over H).
  CVec to_coords(const QMatrix& zeta) const;
  QMatrix from_coords(const CVec& coords) const;
  bool in_E(const QMatrix& zeta, double tol = 0.0) const;
};

/// Element of F_C = F + i F, kept as a pair so the formal unit never mixes
/// with the quaternion unit i.
struct FComplex {
  QMatrix re;
  QMatrix im;
};

/// 1/2 [ (zeta2^* zeta + zeta^* zeta2) + i (zeta^* i zeta2 - zeta2^* i zeta) ].
FComplex ex1_phi(const MatrixDomainSpec& spec, const QMatrix& zeta, const QMatrix& zeta2);
/// F_C element in the form's complex coordinates.
CVec ex1_phi_coords(const MatrixDomainSpec& spec, const QMatrix& zeta, const QMatrix& zeta2);

/// Matrix realization of ex1_phi in the coordinates of to_coords / SelfAdjointLayout.
HermitianForm ex1_form(const MatrixDomainSpec& spec);
SiegelSpec ex1_domain(const MatrixDomainSpec& spec);

/// Upper triangular r x r matrix over K with strictly positive real diagonal.
class TriangularElement {
 public:
  /// Throws ArgumentError if `t` is not of that shape.
  explicit TriangularElement(QMatrix t, Field field = Field::Quaternion);
  static TriangularElement identity(int r) { return TriangularElement(QMatrix::identity(r)); }

  const QMatrix& matrix() const { return t_; }
  int r() const { return t_.rows(); }
  TriangularElement operator*(const TriangularElement& o) const { return TriangularElement(t_ * o.t_); }

 private:
  QMatrix t_;
};

TriangularElement random_triangular(Field field, int r, Rng& rng);
QMatrix random_E(const MatrixDomainSpec& spec, Rng& rng);

/// t . h = t h t^*.
QMatrix ex1_action(const TriangularElement& t, const QMatrix& h);
/// |t . Phi(zeta) - Phi(zeta t^*)|_max.
double ex1_equivariance_residual(const MatrixDomainSpec& spec, const TriangularElement& t, const QMatrix& zeta);

/// Delta_j(t) = t_jj^2.
RVec delta(const TriangularElement& t);
/// prod_j Delta_j(t)^{s_j}.
cplx delta_power(const TriangularElement& t, const CVec& s);

/// Upper triangular t with positive diagonal and t t^* = h. Throws DomainError
/// unless h is positive definite.
TriangularElement triangular_factor(const QMatrix& h);
/// Delta_Omega^s(h) with e_Omega = identity.
cplx delta_omega_power(const QMatrix& h, const CVec& s);
cplx delta_omega_power(const MatrixDomainSpec& spec, const RVec& h, const CVec& s);

/// |det_C g|^2 for g: zeta -> zeta t^* acting on E.
double det_g_abs2(const MatrixDomainSpec& spec, const TriangularElement& t);

/// b_j = -k dim_C K for j <= p, 0 otherwise.
RVec b_vector_closed_form(const MatrixDomainSpec& spec);

struct BCalibration {
  RVec b;
  double max_rel_error = 0.0;
  int trials = 0;
};

/// Closed-form b together with a numeric check Delta^{-b}(t) = |det_C g(t)|^2
/// over random t. Throws CalibrationError above `tol` relative error.
BCalibration b_vector(const MatrixDomainSpec& spec, int trials = 100, std::uint64_t seed = 7, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Rank-two spin domains: E = formal k x 2 matrices (first column in C,
// second in C^q), F = formal self-adjoint 2 x 2 matrices with off-diagonal in C^q.
// ---------------------------------------------------------------------------

struct SpinDomainSpec {
  int k = 1;
  int p = 2;
  int q = 1;

  void validate() const;
  int n() const { return k * (p >= 1 ? 1 : 0) + k * q * (p >= 2 ? 1 : 0); }
  int m() const { return 2 + 2 * q; }
};

/// Rows (a_j, b_j) with a_j in C and b_j in C^q.
struct SpinMatrix {
  CVec a;  // k
  CMat b;  // k x q
};

CVec ex2_to_coords(const SpinDomainSpec& spec, const SpinMatrix& zeta);
SpinMatrix ex2_from_coords(const SpinDomainSpec& spec, const CVec& coords);
SpinMatrix random_spin_E(const SpinDomainSpec& spec, Rng& rng);

/// [[sum |a_j|^2, sum conj(a_j) b_j], [., sum |b_j|^2]].
SpinElement ex2_phi(const SpinDomainSpec& spec, const SpinMatrix& zeta);

/// Formal upper triangular [[a, b], [0, c]] with a, c > 0, b in C^q.
struct SpinTriangular {
  double a = 1.0;
  double c = 1.0;
  CVec b;
};

SpinTriangular random_spin_triangular(int q, Rng& rng);
SpinElement ex2_action(const SpinTriangular& t, const SpinElement& h);
/// Formal product zeta t^*: rows (a_j a + <b_j, b>, c b_j), <x, y> = sum_l x_l conj(y_l).
SpinMatrix ex2_right_adjoint(const SpinMatrix& zeta, const SpinTriangular& t);
double ex2_equivariance_residual(const SpinDomainSpec& spec, const SpinTriangular& t, const SpinMatrix& zeta);

/// Delta(t) = (a^2, c^2).
RVec spin_delta(const SpinTriangular& t);
/// |det_C g|^2 for g: zeta -> zeta t^* (formal product) acting on E.
double ex2_det_g_abs2(const SpinDomainSpec& spec, const SpinTriangular& t);
/// b = (-k, -k q) truncated by p, so that Delta^{-b}(t) = |det_C g|^2.
RVec ex2_b_vector_closed_form(const SpinDomainSpec& spec);
BCalibration ex2_b_vector(const SpinDomainSpec& spec, int trials = 100, std::uint64_t seed = 7, double tol = 1e-9);

/// zeta with Phi(zeta) = [[a, b], [conj(b), c]] for a boundary point |b|^2 = ac.
SpinMatrix ex2_boundary_witness(const SpinDomainSpec& spec, double a, double c, const CVec& b);

/// Matrix realization of ex2_phi obtained by polarization.
HermitianForm ex2_form(const SpinDomainSpec& spec);
SiegelSpec ex2_domain(const SpinDomainSpec& spec);

/// The Heisenberg-type domain: Phi(zeta) = |zeta|^2 on C^n, Omega = (0, inf).
SiegelSpec heisenberg_domain(int n);

}  // namespace siegel
