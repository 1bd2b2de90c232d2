#include "siegel/zoo.hpp"

#include <cmath>
#include <string>

namespace siegel {

// ----------------------------------------------------------------- matrix domains

void MatrixDomainSpec::validate() const {
  if (r < 1 || k < 0 || p < 0 || p > r) {
    throw ArgumentError("MatrixDomainSpec: need r >= 1, k >= 0 and 0 <= p <= r");
  }
}

CVec MatrixDomainSpec::to_coords(const QMatrix& zeta) const {
  if (zeta.rows() != k || zeta.cols() != r) throw ArgumentError("to_coords: zeta must be k x r");
  const int cd = complex_dim(field);
  CVec out(n());
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < p; ++c) {
      const int base = (a * p + c) * cd;
      out[base] = zeta(a, c).alpha();
      if (cd == 2) out[base + 1] = zeta(a, c).beta();
    }
  return out;
}

QMatrix MatrixDomainSpec::from_coords(const CVec& coords) const {
  if (coords.size() != n()) throw ArgumentError("from_coords: wrong coordinate length");
  const int cd = complex_dim(field);
  QMatrix z(k, r);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < p; ++c) {
      const int base = (a * p + c) * cd;
      z(a, c) = Quaternion::from_complex_pair(coords[base], cd == 2 ? coords[base + 1] : cplx(0.0, 0.0));
    }
  return z;
}

bool MatrixDomainSpec::in_E(const QMatrix& zeta, double tol) const {
  if (zeta.rows() != k || zeta.cols() != r) return false;
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < r; ++c) {
      const Quaternion& q = zeta(a, c);
      if (c >= p && std::sqrt(q.norm2()) > tol) return false;
      if (field == Field::Complex && (std::abs(q.y) > tol || std::abs(q.z) > tol)) return false;
    }
  return true;
}

FComplex ex1_phi(const MatrixDomainSpec& spec, const QMatrix& zeta, const QMatrix& zeta2) {
  if (!spec.in_E(zeta, 1e-12) || !spec.in_E(zeta2, 1e-12)) throw ArgumentError("ex1_phi: arguments are not in E");
  const QMatrix za = zeta.adjoint();
  const QMatrix z2a = zeta2.adjoint();
  FComplex out;
  out.re = (z2a * zeta + za * zeta2) * 0.5;
  out.im = (za * zeta2.left_scale(kQuatI) - z2a * zeta.left_scale(kQuatI)) * 0.5;
  return out;
}

CVec ex1_phi_coords(const MatrixDomainSpec& spec, const QMatrix& zeta, const QMatrix& zeta2) {
  const FComplex v = ex1_phi(spec, zeta, zeta2);
  const SelfAdjointLayout lay = spec.layout();
  return lay.encode(v.re).cast<cplx>() + kI * lay.encode(v.im).cast<cplx>();
}

HermitianForm ex1_form(const MatrixDomainSpec& spec) {
  spec.validate();
  const int n = spec.n();
  const int m = spec.m();
  std::vector<CMat> mats(std::size_t(m), CMat::Zero(n, n));
  std::vector<QMatrix> basis;
  for (int b = 0; b < n; ++b) basis.push_back(spec.from_coords(CVec::Unit(n, b)));
  // (A_k)_{ab} = Phi_k(e_b, e_a)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const CVec v = ex1_phi_coords(spec, basis[std::size_t(b)], basis[std::size_t(a)]);
      for (int k = 0; k < m; ++k) mats[std::size_t(k)](a, b) = v[k];
    }
  return HermitianForm(n, std::move(mats));
}

SiegelSpec ex1_domain(const MatrixDomainSpec& spec) {
  const std::string name = std::string("ex1(") + field_name(spec.field) + "," + std::to_string(spec.r) + "," +
                           std::to_string(spec.k) + "," + std::to_string(spec.p) + ")";
  const RVec base = spec.layout().encode(QMatrix::identity(spec.r));
  return make_siegel_spec(name, ex1_form(spec), OmegaCone::positive_definite(spec.field, spec.r), base, spec.r);
}

TriangularElement::TriangularElement(QMatrix t, Field field) : t_(std::move(t)) {
  if (t_.rows() != t_.cols()) throw ArgumentError("TriangularElement: matrix must be square");
  for (int i = 0; i < t_.rows(); ++i)
    for (int j = 0; j < t_.cols(); ++j) {
      const Quaternion& q = t_(i, j);
      if (i > j && q.norm2() != 0.0) throw ArgumentError("TriangularElement: not upper triangular");
      if (i == j && !(q.w > 0.0 && q.x == 0.0 && q.y == 0.0 && q.z == 0.0)) {
        throw ArgumentError("TriangularElement: diagonal must be real and positive");
      }
      if (field == Field::Complex && (q.y != 0.0 || q.z != 0.0)) {
        throw ArgumentError("TriangularElement: entries must be complex");
      }
    }
}

namespace {

Quaternion random_entry(Field f, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  const double w = g(rng), x = g(rng);
  if (f == Field::Complex) return {w, x};
  const double y = g(rng), z = g(rng);
  return {w, x, y, z};
}

}  // namespace

TriangularElement random_triangular(Field field, int r, Rng& rng) {
  std::uniform_real_distribution<double> diag(0.3, 2.0);
  QMatrix t(r, r);
  for (int i = 0; i < r; ++i) {
    t(i, i) = Quaternion(diag(rng));
    for (int j = i + 1; j < r; ++j) t(i, j) = random_entry(field, rng, 0.7);
  }
  return TriangularElement(std::move(t), field);
}

QMatrix random_E(const MatrixDomainSpec& spec, Rng& rng) {
  QMatrix z(spec.k, spec.r);
  for (int a = 0; a < spec.k; ++a)
    for (int c = 0; c < spec.p; ++c) z(a, c) = random_entry(spec.field, rng, 1.0);
  return z;
}

QMatrix ex1_action(const TriangularElement& t, const QMatrix& h) {
  return t.matrix() * h * t.matrix().adjoint();
}

double ex1_equivariance_residual(const MatrixDomainSpec& spec, const TriangularElement& t, const QMatrix& zeta) {
  const QMatrix lhs = ex1_action(t, ex1_phi(spec, zeta, zeta).re);
  const QMatrix moved = zeta * t.matrix().adjoint();
  return (lhs - ex1_phi(spec, moved, moved).re).max_abs();
}

RVec delta(const TriangularElement& t) {
  RVec out(t.r());
  for (int j = 0; j < t.r(); ++j) {
    const double d = t.matrix()(j, j).w;
    out[j] = d * d;
  }
  return out;
}

cplx delta_power(const TriangularElement& t, const CVec& s) {
  if (s.size() != t.r()) throw ArgumentError("delta_power: exponent has wrong length");
  const RVec d = delta(t);
  cplx log_sum(0.0, 0.0);
  for (int j = 0; j < t.r(); ++j) log_sum += s[j] * std::log(d[j]);
  return std::exp(log_sum);
}

TriangularElement triangular_factor(const QMatrix& h) {
  const int r = h.rows();
  if (h.cols() != r) throw ArgumentError("triangular_factor: matrix must be square");
  QMatrix t(r, r);
  // (t t^*)_{ij} = sum_{l >= max(i,j)} t_il conj(t_jl); solve from the bottom-right corner.
  for (int j = r - 1; j >= 0; --j) {
    double d = h(j, j).w;
    for (int l = j + 1; l < r; ++l) d -= t(j, l).norm2();
    if (!(d > 0.0)) throw DomainError("triangular_factor: matrix is not positive definite");
    const double tjj = std::sqrt(d);
    t(j, j) = Quaternion(tjj);
    for (int i = 0; i < j; ++i) {
      Quaternion acc = h(i, j);
      for (int l = j + 1; l < r; ++l) acc -= t(i, l) * t(j, l).conj();
      t(i, j) = acc * (1.0 / tjj);
    }
  }
  return TriangularElement(std::move(t));
}

cplx delta_omega_power(const QMatrix& h, const CVec& s) { return delta_power(triangular_factor(h), s); }

cplx delta_omega_power(const MatrixDomainSpec& spec, const RVec& h, const CVec& s) {
  return delta_omega_power(spec.layout().decode(h), s);
}

double det_g_abs2(const MatrixDomainSpec& spec, const TriangularElement& t) {
  const int n = spec.n();
  if (n == 0) return 1.0;
  const QMatrix ta = t.matrix().adjoint();
  CMat g(n, n);
  for (int b = 0; b < n; ++b) g.col(b) = spec.to_coords(spec.from_coords(CVec::Unit(n, b)) * ta);
  return std::norm(g.determinant());
}

RVec b_vector_closed_form(const MatrixDomainSpec& spec) {
  RVec b = RVec::Zero(spec.r);
  for (int j = 0; j < spec.p; ++j) b[j] = -static_cast<double>(spec.k * complex_dim(spec.field));
  return b;
}

BCalibration b_vector(const MatrixDomainSpec& spec, int trials, std::uint64_t seed, double tol) {
  spec.validate();
  BCalibration out;
  out.b = b_vector_closed_form(spec);
  out.trials = trials;
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const TriangularElement t = random_triangular(spec.field, spec.r, rng);
    const double lhs = delta_power(t, (-out.b).cast<cplx>()).real();
    const double rhs = det_g_abs2(spec, t);
    out.max_rel_error = std::max(out.max_rel_error, std::abs(lhs - rhs) / std::abs(rhs));
  }
  if (out.max_rel_error > tol) {
    throw CalibrationError("b_vector: Delta^{-b}(t) differs from |det g|^2 (relative error " +
                           std::to_string(out.max_rel_error) + ")");
  }
  return out;
}

// ----------------------------------------------------------------- spin domains

void SpinDomainSpec::validate() const {
  if (k < 0 || p < 0 || p > 2 || q < 1) throw ArgumentError("SpinDomainSpec: need k >= 0, 0 <= p <= 2, q >= 1");
}

CVec ex2_to_coords(const SpinDomainSpec& spec, const SpinMatrix& zeta) {
  CVec out(spec.n());
  int pos = 0;
  if (spec.p >= 1)
    for (int j = 0; j < spec.k; ++j) out[pos++] = zeta.a[j];
  if (spec.p >= 2)
    for (int j = 0; j < spec.k; ++j)
      for (int l = 0; l < spec.q; ++l) out[pos++] = zeta.b(j, l);
  return out;
}

SpinMatrix ex2_from_coords(const SpinDomainSpec& spec, const CVec& coords) {
  if (coords.size() != spec.n()) throw ArgumentError("ex2_from_coords: wrong coordinate length");
  SpinMatrix z{CVec::Zero(spec.k), CMat::Zero(spec.k, spec.q)};
  int pos = 0;
  if (spec.p >= 1)
    for (int j = 0; j < spec.k; ++j) z.a[j] = coords[pos++];
  if (spec.p >= 2)
    for (int j = 0; j < spec.k; ++j)
      for (int l = 0; l < spec.q; ++l) z.b(j, l) = coords[pos++];
  return z;
}

SpinMatrix random_spin_E(const SpinDomainSpec& spec, Rng& rng) {
  return ex2_from_coords(spec, random_cvec(rng, spec.n()));
}

SpinElement ex2_phi(const SpinDomainSpec& spec, const SpinMatrix& zeta) {
  if (zeta.a.size() != spec.k || zeta.b.rows() != spec.k || zeta.b.cols() != spec.q) {
    throw ArgumentError("ex2_phi: zeta has wrong shape");
  }
  SpinElement out;
  out.a = zeta.a.squaredNorm();
  out.c = zeta.b.squaredNorm();
  out.b = zeta.b.transpose() * zeta.a.conjugate();  // sum_j conj(a_j) b_j
  return out;
}

SpinTriangular random_spin_triangular(int q, Rng& rng) {
  std::uniform_real_distribution<double> diag(0.3, 2.0);
  SpinTriangular t;
  t.a = diag(rng);
  t.c = diag(rng);
  t.b = random_cvec(rng, q, 0.7);
  return t;
}

SpinElement ex2_action(const SpinTriangular& t, const SpinElement& h) {
  if (t.b.size() != h.b.size()) throw ArgumentError("ex2_action: q mismatch");
  SpinElement out;
  out.a = h.a * t.a * t.a + h.c * t.b.squaredNorm() + 2.0 * t.a * h.b.dot(t.b).real();
  out.b = t.a * t.c * h.b + t.c * h.c * t.b;
  out.c = t.c * t.c * h.c;
  return out;
}

SpinMatrix ex2_right_adjoint(const SpinMatrix& zeta, const SpinTriangular& t) {
  SpinMatrix out;
  // sum_l b_jl conj(t.b_l)
  out.a = zeta.a * t.a + zeta.b * t.b.conjugate();
  out.b = zeta.b * t.c;
  return out;
}

double ex2_equivariance_residual(const SpinDomainSpec& spec, const SpinTriangular& t, const SpinMatrix& zeta) {
  const SpinElement lhs = ex2_action(t, ex2_phi(spec, zeta));
  const SpinElement rhs = ex2_phi(spec, ex2_right_adjoint(zeta, t));
  return (lhs.encode() - rhs.encode()).cwiseAbs().maxCoeff();
}

RVec spin_delta(const SpinTriangular& t) {
  RVec d(2);
  d << t.a * t.a, t.c * t.c;
  return d;
}

double ex2_det_g_abs2(const SpinDomainSpec& spec, const SpinTriangular& t) {
  const int n = spec.n();
  if (n == 0) return 1.0;
  CMat g(n, n);
  for (int b = 0; b < n; ++b) {
    g.col(b) = ex2_to_coords(spec, ex2_right_adjoint(ex2_from_coords(spec, CVec::Unit(n, b)), t));
  }
  return std::norm(g.determinant());
}

RVec ex2_b_vector_closed_form(const SpinDomainSpec& spec) {
  RVec b = RVec::Zero(2);
  if (spec.p >= 1) b[0] = -spec.k;
  if (spec.p >= 2) b[1] = -spec.k * spec.q;
  return b;
}

BCalibration ex2_b_vector(const SpinDomainSpec& spec, int trials, std::uint64_t seed, double tol) {
  spec.validate();
  BCalibration out;
  out.b = ex2_b_vector_closed_form(spec);
  out.trials = trials;
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const SpinTriangular t = random_spin_triangular(spec.q, rng);
    const RVec d = spin_delta(t);
    const double lhs = std::pow(d[0], -out.b[0]) * std::pow(d[1], -out.b[1]);
    const double rhs = ex2_det_g_abs2(spec, t);
    out.max_rel_error = std::max(out.max_rel_error, std::abs(lhs - rhs) / std::abs(rhs));
  }
  if (out.max_rel_error > tol) {
    throw CalibrationError("ex2_b_vector: Delta^{-b}(t) differs from |det g|^2 (relative error " +
                           std::to_string(out.max_rel_error) + ")");
  }
  return out;
}

SpinMatrix ex2_boundary_witness(const SpinDomainSpec& spec, double a, double c, const CVec& b) {
  if (spec.p != 2) throw PreconditionError("ex2_boundary_witness: requires p = 2");
  if (spec.k < 1) throw PreconditionError("ex2_boundary_witness: requires k >= 1");
  if (b.size() != spec.q) throw ArgumentError("ex2_boundary_witness: b has wrong length");
  if (a < 0.0 || c < 0.0) throw PreconditionError("ex2_boundary_witness: a and c must be nonnegative");
  if (std::abs(b.squaredNorm() - a * c) > 1e-12 * std::max(1.0, a * c)) {
    throw PreconditionError("ex2_boundary_witness: |b|^2 != ac");
  }
  SpinMatrix z{CVec::Zero(spec.k), CMat::Zero(spec.k, spec.q)};
  if (a > 0.0) {
    z.a[0] = std::sqrt(a);
    z.b.row(0) = (b / std::sqrt(a)).transpose();
  } else {
    z.b(0, 0) = std::sqrt(c);  // a = 0 forces b = 0
  }
  return z;
}

HermitianForm ex2_form(const SpinDomainSpec& spec) {
  spec.validate();
  const int n = spec.n();
  const int m = spec.m();
  auto quad = [&](const CVec& v) { return ex2_phi(spec, ex2_from_coords(spec, v)).encode(); };
  std::vector<CMat> mats(std::size_t(m), CMat::Zero(n, n));
  const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  // B(zeta, zeta') = 1/4 sum_s i^s Q(zeta + i^s zeta'); (A_k)_{ab} = B_k(e_b, e_a)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CVec acc = CVec::Zero(m);
      for (const cplx w : powers) acc += w * quad(CVec::Unit(n, b) + w * CVec::Unit(n, a)).cast<cplx>();
      acc *= 0.25;
      for (int k = 0; k < m; ++k) mats[std::size_t(k)](a, b) = acc[k];
    }
  return HermitianForm(n, std::move(mats));
}

SiegelSpec ex2_domain(const SpinDomainSpec& spec) {
  const std::string name =
      "ex2(" + std::to_string(spec.k) + "," + std::to_string(spec.p) + "," + std::to_string(spec.q) + ")";
  RVec base = RVec::Zero(spec.m());
  base[0] = 1.0;
  base[1] = 1.0;
  return make_siegel_spec(name, ex2_form(spec), OmegaCone::spin(spec.q), base, 2);
}

SiegelSpec heisenberg_domain(int n) {
  if (n < 1) throw ArgumentError("heisenberg: n must be positive");
  return make_siegel_spec("heisenberg(" + std::to_string(n) + ")", HermitianForm::heisenberg(n),
                          OmegaCone::half_line(), RVec::Ones(1), 1);
}

}  // namespace siegel
