#include "siegel/disc.hpp"

#include <cmath>
#include <numbers>

namespace siegel {

namespace {

void check_coefficients(const HermitianForm& form, const DiscCoefficients& d) {
  if (static_cast<int>(d.v.size()) != form.m()) {
    throw ArgumentError("disc: expected " + std::to_string(form.m()) + " coefficient vectors");
  }
  for (const auto& vj : d.v) form.check_dim(vj);
}

}  // namespace

BoundarySample BoundarySample::uniform(int n_theta) {
  if (n_theta <= 0) throw ArgumentError("BoundarySample: need at least one node");
  BoundarySample s;
  s.nodes.reserve(std::size_t(n_theta));
  for (int j = 0; j < n_theta; ++j) {
    s.nodes.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / n_theta));
  }
  s.weights.assign(std::size_t(n_theta), 1.0 / n_theta);
  return s;
}

AmbientPoint disc_eval(const HermitianForm& form, const DiscCoefficients& d, cplx w) {
  check_coefficients(form, d);
  const int m = form.m();
  AmbientPoint out{CVec::Zero(form.n()), CVec::Zero(m)};
  // powers w^1 .. w^m
  std::vector<cplx> pw(std::size_t(m) + 1, cplx(1.0, 0.0));
  for (int j = 1; j <= m; ++j) pw[std::size_t(j)] = pw[std::size_t(j - 1)] * w;

  for (int j = 1; j <= m; ++j) {
    const CVec& vj = d.v[std::size_t(j - 1)];
    out.zeta += vj * pw[std::size_t(j)];
    out.z += kI * form.diag(vj).cast<cplx>();
    for (int k = 1; k < j; ++k) {
      out.z += 2.0 * kI * pw[std::size_t(j - k)] * form.eval(vj, d.v[std::size_t(k - 1)]);
    }
  }
  return out;
}

double boundary_residual(const HermitianForm& form, const DiscCoefficients& d, int n_theta) {
  double worst = 0.0;
  for (const cplx w : BoundarySample::uniform(n_theta).nodes) {
    const RVec r = rho(form, disc_eval(form, d, w));
    if (r.size() > 0) worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

AmbientPoint translated_disc_point(const HermitianForm& form, const DiscCoefficients& d, const NPoint& base,
                                   const RVec& hpp, cplx w) {
  if (hpp.size() != form.m()) throw ArgumentError("translated disc: hpp has wrong length");
  AmbientPoint a = disc_eval(form, d, w);
  a.z += kI * hpp.cast<cplx>();
  return mul_ambient(form, iota(form, base), a);
}

std::vector<AmbientPoint> translated_disc_nodes(const HermitianForm& form, const DiscCoefficients& d,
                                                const NPoint& base, const RVec& hpp, int n_theta) {
  std::vector<AmbientPoint> out;
  for (const cplx w : BoundarySample::uniform(n_theta).nodes) {
    out.push_back(translated_disc_point(form, d, base, hpp, w));
  }
  return out;
}

void check_disc_in_domain(const TestFunction& f, const DiscCoefficients& d, const NPoint& base, const RVec& hpp,
                          int n_theta) {
  const SiegelSpec& spec = f.domain();
  auto check = [&](const AmbientPoint& p) {
    if (!in_domain(spec, p)) throw DomainError("translated disc leaves the Siegel domain");
    if (!f.defined_at(p)) throw DomainError("translated disc leaves the test function's domain");
  };
  const BoundarySample circle = BoundarySample::uniform(n_theta);
  for (const cplx w : circle.nodes) check(translated_disc_point(spec.form, d, base, hpp, w));
  constexpr int kRadii = 8;
  const int stride = std::max(1, n_theta / 32);
  for (int ri = 0; ri < kRadii; ++ri) {
    const double r = static_cast<double>(ri) / kRadii;
    for (std::size_t j = 0; j < circle.nodes.size(); j += std::size_t(stride)) {
      check(translated_disc_point(spec.form, d, base, hpp, r * circle.nodes[j]));
      if (ri == 0) break;
    }
  }
}

SubmeanResult submean_check(const TestFunction& f, const DiscCoefficients& d, const NPoint& base, const RVec& hpp,
                            double p, int n_theta) {
  if (!(p > 0.0)) throw ArgumentError("submean_check: p must be positive");
  check_disc_in_domain(f, d, base, hpp, n_theta);
  const HermitianForm& form = f.domain().form;
  SubmeanResult out;
  out.exponent = std::min(1.0, p);
  out.lhs = std::exp(out.exponent * f.log_abs(translated_disc_point(form, d, base, hpp, 0.0)));
  const BoundarySample circle = BoundarySample::uniform(n_theta);
  for (std::size_t j = 0; j < circle.nodes.size(); ++j) {
    const AmbientPoint node = translated_disc_point(form, d, base, hpp, circle.nodes[j]);
    out.rhs += circle.weights[j] * std::exp(out.exponent * f.log_abs(node));
  }
  return out;
}

double convolution_average(const TestFunction& f, const DiscCoefficients& d, const NPoint& base, const RVec& hpp,
                           double p, int n_theta) {
  const HermitianForm& form = f.domain().form;
  const double q = std::min(1.0, p);
  const BoundarySample circle = BoundarySample::uniform(n_theta);
  double acc = 0.0;
  for (std::size_t j = 0; j < circle.nodes.size(); ++j) {
    const NPoint pushed = project_pi(disc_eval(form, d, circle.nodes[j]));
    const NPoint moved = mul_N(form, base, pushed);
    acc += circle.weights[j] * std::exp(q * f.log_abs(slice_point(form, moved, hpp)));
  }
  return acc;
}

}  // namespace siegel
