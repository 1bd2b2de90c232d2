#include "siegel/quadric.hpp"

#include <string>

namespace siegel {

HermitianForm::HermitianForm(int n, std::vector<CMat> matrices, double hermitian_tol)
    : n_(n), matrices_(std::move(matrices)) {
  if (n_ < 0) throw ArgumentError("HermitianForm: negative dimension");
  for (std::size_t k = 0; k < matrices_.size(); ++k) {
    const CMat& a = matrices_[k];
    if (a.rows() != n_ || a.cols() != n_) {
      throw ArgumentError("HermitianForm: matrix " + std::to_string(k) + " is not " +
                          std::to_string(n_) + "x" + std::to_string(n_));
    }
    if (n_ > 0 && (a - a.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol) {
      throw ArgumentError("HermitianForm: matrix " + std::to_string(k) + " is not Hermitian");
    }
  }
}

HermitianForm HermitianForm::heisenberg(int n) {
  return HermitianForm(n, {CMat::Identity(n, n)});
}

void HermitianForm::check_dim(const CVec& zeta) const {
  if (zeta.size() != n_) {
    throw ArgumentError("expected a vector of length " + std::to_string(n_) + ", got " +
                        std::to_string(zeta.size()));
  }
}

CVec HermitianForm::eval(const CVec& zeta, const CVec& zeta2) const {
  check_dim(zeta);
  check_dim(zeta2);
  CVec out(m());
  for (int k = 0; k < m(); ++k) out[k] = zeta2.dot(matrix(k) * zeta);
  return out;
}

RVec HermitianForm::diag(const CVec& zeta) const {
  check_dim(zeta);
  RVec out(m());
  for (int k = 0; k < m(); ++k) out[k] = zeta.dot(matrix(k) * zeta).real();
  return out;
}

CMat HermitianForm::pencil(const RVec& lambda) const {
  if (lambda.size() != m()) throw ArgumentError("pencil: lambda has wrong length");
  CMat p = CMat::Zero(n_, n_);
  for (int k = 0; k < m(); ++k) p += lambda[k] * matrix(k);
  return p;
}

CVec eval_form(const HermitianForm& form, const CVec& zeta, const CVec& zeta2) {
  return form.eval(zeta, zeta2);
}

RVec rho(const HermitianForm& form, const AmbientPoint& p) {
  return p.z.imag() - form.diag(p.zeta);
}

AmbientPoint mul_ambient(const HermitianForm& form, const AmbientPoint& p, const AmbientPoint& q) {
  // 2i Phi(zeta', zeta)
  return {p.zeta + q.zeta, p.z + q.z + 2.0 * kI * form.eval(q.zeta, p.zeta)};
}

AmbientPoint inv_ambient(const HermitianForm& form, const AmbientPoint& p) {
  return {-p.zeta, -p.z + 2.0 * kI * form.diag(p.zeta).cast<cplx>()};
}

AmbientPoint ambient_identity(const HermitianForm& form) {
  return {CVec::Zero(form.n()), CVec::Zero(form.m())};
}

NPoint mul_N(const HermitianForm& form, const NPoint& a, const NPoint& b) {
  return {a.zeta + b.zeta, a.x + b.x + 2.0 * form.eval(a.zeta, b.zeta).imag()};
}

NPoint inv_N(const NPoint& a) { return {-a.zeta, -a.x}; }

NPoint n_identity(const HermitianForm& form) {
  return {CVec::Zero(form.n()), RVec::Zero(form.m())};
}

AmbientPoint iota(const HermitianForm& form, const NPoint& a) {
  if (a.x.size() != form.m()) throw ArgumentError("iota: x has wrong length");
  CVec z = a.x.cast<cplx>() + kI * form.diag(a.zeta).cast<cplx>();
  return {a.zeta, std::move(z)};
}

NPoint project_pi(const AmbientPoint& p) { return {p.zeta, p.z.real()}; }

AmbientPoint slice_point(const HermitianForm& form, const NPoint& a, const RVec& h) {
  if (h.size() != form.m()) throw ArgumentError("slice_point: h has wrong length");
  AmbientPoint p = iota(form, a);
  p.z += kI * h.cast<cplx>();
  return p;
}

double distance(const AmbientPoint& p, const AmbientPoint& q) {
  double d = 0.0;
  if (p.zeta.size() > 0) d = std::max(d, (p.zeta - q.zeta).cwiseAbs().maxCoeff());
  if (p.z.size() > 0) d = std::max(d, (p.z - q.z).cwiseAbs().maxCoeff());
  return d;
}

double distance(const NPoint& a, const NPoint& b) {
  double d = 0.0;
  if (a.zeta.size() > 0) d = std::max(d, (a.zeta - b.zeta).cwiseAbs().maxCoeff());
  if (a.x.size() > 0) d = std::max(d, (a.x - b.x).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace siegel
