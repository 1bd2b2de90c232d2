#include "siegel/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/random/sobol.hpp>

namespace siegel {

NnlsResult nnls(const RMat& a, const RVec& b, int max_iterations) {
  const Eigen::Index cols = a.cols();
  if (a.rows() != b.size()) throw ArgumentError("nnls: row count mismatch");
  if (max_iterations <= 0) max_iterations = static_cast<int>(3 * cols + 30);

  NnlsResult out;
  out.x = RVec::Zero(cols);
  if (cols == 0) {
    out.residual = b.norm();
    return out;
  }
  std::vector<char> passive(std::size_t(cols), 0);
  const double wtol = 1e-13 * std::max(1.0, a.norm()) * std::max(1.0, b.norm());
  RVec& x = out.x;
  RVec w = a.transpose() * (b - a * x);

  auto passive_indices = [&] {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (passive[std::size_t(j)]) idx.push_back(j);
    return idx;
  };

  // Columns that were added and immediately dropped are skipped until x moves.
  std::vector<char> blocked(std::size_t(cols), 0);
  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    Eigen::Index best = -1;
    double best_w = wtol;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (!passive[std::size_t(j)] && !blocked[std::size_t(j)] && w[j] > best_w) {
        best_w = w[j];
        best = j;
      }
    }
    if (best < 0) break;
    passive[std::size_t(best)] = 1;

    bool moved = false;
    for (int inner = 0; inner < max_iterations; ++inner) {
      const auto idx = passive_indices();
      RMat sub(a.rows(), Eigen::Index(idx.size()));
      for (std::size_t c = 0; c < idx.size(); ++c) sub.col(Eigen::Index(c)) = a.col(idx[c]);
      const RVec z = sub.colPivHouseholderQr().solve(b);

      bool feasible = true;
      for (Eigen::Index c = 0; c < z.size(); ++c) feasible = feasible && z[c] > 0.0;
      if (feasible) {
        for (std::size_t c = 0; c < idx.size(); ++c) x[idx[c]] = z[Eigen::Index(c)];
        moved = true;
        break;
      }
      double alpha = 1.0;
      for (std::size_t c = 0; c < idx.size(); ++c) {
        const double zc = z[Eigen::Index(c)];
        if (zc <= 0.0) {
          const double xc = x[idx[c]];
          alpha = std::min(alpha, xc / (xc - zc));
        }
      }
      for (std::size_t c = 0; c < idx.size(); ++c) {
        const Eigen::Index j = idx[c];
        x[j] += alpha * (z[Eigen::Index(c)] - x[j]);
        if (x[j] <= 1e-300) {
          x[j] = 0.0;
          passive[std::size_t(j)] = 0;
        }
      }
      if (alpha > 0.0) moved = true;
    }
    if (!passive[std::size_t(best)] && !moved) {
      blocked[std::size_t(best)] = 1;
    } else {
      std::fill(blocked.begin(), blocked.end(), 0);
    }
    w = a.transpose() * (b - a * x);
  }
  out.residual = (a * x - b).norm();
  return out;
}

std::vector<CVec> sphere_directions(int n, int count) {
  std::vector<CVec> out;
  if (n <= 0 || count <= 0) return out;
  const unsigned dim = static_cast<unsigned>(2 * n);
  boost::random::sobol qrng(dim);
  qrng.discard(dim);  // first Sobol point is the origin
  const double scale = 1.0 / (static_cast<double>(qrng.max()) + 1.0);
  out.reserve(std::size_t(count));
  while (static_cast<int>(out.size()) < count) {
    CVec v(n);
    for (int k = 0; k < n; ++k) {
      const double u1 = (static_cast<double>(qrng()) + 0.5) * scale;
      const double u2 = (static_cast<double>(qrng()) + 0.5) * scale;
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double t = 2.0 * std::numbers::pi * u2;
      v[k] = cplx(r * std::cos(t), r * std::sin(t));
    }
    const double nv = v.norm();
    if (nv > 1e-12) out.push_back(v / nv);
  }
  return out;
}

ConeModel::ConeModel(HermitianForm form, int generator_count) : form_(std::move(form)) {
  if (generator_count <= 0) generator_count = 64 * std::max(1, form_.m());
  points_ = sphere_directions(form_.n(), generator_count);
  generators_.resize(form_.m(), Eigen::Index(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    generators_.col(Eigen::Index(i)) = form_.diag(points_[i]);
  }
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "inside";
    case Membership::Outside: return "outside";
    case Membership::Undetermined: return "undetermined";
  }
  return "?";
}

RVec psi(const HermitianForm& form, const std::vector<CVec>& v) {
  if (static_cast<int>(v.size()) != form.m()) {
    throw ArgumentError("psi: expected an m-tuple of length " + std::to_string(form.m()));
  }
  RVec out = RVec::Zero(form.m());
  for (const auto& vj : v) out += form.diag(vj);
  return out;
}

std::pair<double, CVec> min_eigenpair(const CMat& hermitian) {
  if (hermitian.rows() == 0) return {0.0, CVec()};
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian);
  return {es.eigenvalues()[0], es.eigenvectors().col(0)};
}

namespace {

MembershipVerdict inner_verdict(const std::vector<CVec>& pts, const RVec& x, double scale, double rel,
                                int iterations) {
  MembershipVerdict v;
  v.status = Membership::Inside;
  v.residual = rel;
  v.iterations = iterations;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) {
      v.points.push_back(pts[std::size_t(i)]);
      v.weights.push_back(x[i] * scale);
    }
  }
  return v;
}

}  // namespace

MembershipVerdict membership_closure(const ConeModel& model, const RVec& h, const ConeOptions& opt) {
  const HermitianForm& form = model.form();
  if (h.size() != form.m()) throw ArgumentError("membership_closure: h has wrong length");
  const double hn = h.norm();
  if (hn == 0.0) {
    MembershipVerdict v;
    v.status = Membership::Inside;
    return v;
  }
  const RVec target = h / hn;
  RMat gens = model.generators();
  std::vector<CVec> pts = model.generator_points();

  MembershipVerdict last;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const NnlsResult fit = nnls(gens, target);
    const RVec r = gens * fit.x - target;
    const double rel = r.norm();
    if (rel <= opt.tol) return inner_verdict(pts, fit.x, hn, rel, it + 1);

    // KKT: <r, g_i> >= 0 on every current generator and <r, target> = -|r|^2.
    const RVec lambda = r / rel;
    const auto [mu, vec] = min_eigenpair(form.pencil(lambda));
    if (mu >= -opt.tol) {
      MembershipVerdict v;
      v.lambda = lambda;
      v.pencil_min_eig = mu;
      v.residual = rel;
      v.iterations = it + 1;
      v.status = lambda.dot(target) < -opt.tol ? Membership::Outside : Membership::Undetermined;
      return v;
    }
    // The pencil eigenvector is the generator most violating lambda.
    gens.conservativeResize(Eigen::NoChange, gens.cols() + 1);
    gens.col(gens.cols() - 1) = form.diag(vec);
    pts.push_back(vec);
    last.residual = rel;
    last.pencil_min_eig = mu;
    last.iterations = it + 1;
  }
  last.status = Membership::Undetermined;
  return last;
}

std::optional<MembershipVerdict> try_inner(const ConeModel& model, const RVec& h, const ConeOptions& opt) {
  if (h.size() != model.m()) throw ArgumentError("try_inner: h has wrong length");
  const double hn = h.norm();
  if (hn == 0.0) {
    MembershipVerdict v;
    v.status = Membership::Inside;
    return v;
  }
  const RVec target = h / hn;
  const NnlsResult fit = nnls(model.generators(), target);
  const double rel = (model.generators() * fit.x - target).norm();
  if (rel > opt.tol) return std::nullopt;
  return inner_verdict(model.generator_points(), fit.x, hn, rel, 1);
}

bool verify_certificate(const ConeModel& model, const RVec& h, const MembershipVerdict& v, double tol) {
  const HermitianForm& form = model.form();
  const double hn = h.norm();
  switch (v.status) {
    case Membership::Inside: {
      if (v.points.size() != v.weights.size()) return false;
      RVec sum = RVec::Zero(form.m());
      for (std::size_t i = 0; i < v.points.size(); ++i) {
        if (!(v.weights[i] >= 0.0)) return false;
        sum += v.weights[i] * form.diag(v.points[i]);
      }
      return (sum - h).norm() <= tol * hn;
    }
    case Membership::Outside: {
      if (v.lambda.size() != form.m() || hn == 0.0) return false;
      if (std::abs(v.lambda.norm() - 1.0) > 1e-9) return false;
      const double mu = min_eigenpair(form.pencil(v.lambda)).first;
      return mu >= -tol && v.lambda.dot(h) / hn < -tol;
    }
    case Membership::Undetermined: return true;
  }
  return false;
}

namespace {

// Caratheodory reduction: shrink the support of a nonnegative combination to
// linearly independent generators without changing the sum.
void reduce_support(std::vector<CVec>& pts, std::vector<double>& w, const HermitianForm& form) {
  while (true) {
    const Eigen::Index k = Eigen::Index(pts.size());
    if (k == 0) return;
    RMat g(form.m(), k);
    for (Eigen::Index i = 0; i < k; ++i) g.col(i) = form.diag(pts[std::size_t(i)]);
    Eigen::FullPivLU<RMat> lu(g);
    lu.setThreshold(1e-12);
    if (lu.rank() == k) return;
    RVec d = lu.kernel().col(0);
    if (d.maxCoeff() <= 0.0) d = -d;
    double alpha = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < k; ++i)
      if (d[i] > 0.0) alpha = std::min(alpha, w[std::size_t(i)] / d[i]);
    std::vector<CVec> np;
    std::vector<double> nw;
    for (Eigen::Index i = 0; i < k; ++i) {
      const double wi = w[std::size_t(i)] - alpha * d[i];
      if (wi > 1e-15 * alpha) {
        np.push_back(pts[std::size_t(i)]);
        nw.push_back(wi);
      }
    }
    if (np.size() == pts.size()) {
      // numerical stall; drop the smallest-weight generator
      const auto it = std::min_element(nw.begin(), nw.end());
      const auto pos = std::size_t(it - nw.begin());
      np.erase(np.begin() + std::ptrdiff_t(pos));
      nw.erase(nw.begin() + std::ptrdiff_t(pos));
    }
    pts = std::move(np);
    w = std::move(nw);
  }
}

}  // namespace

Decomposition decompose_info(const ConeModel& model, const RVec& h, const ConeOptions& opt) {
  const HermitianForm& form = model.form();
  const MembershipVerdict verdict = membership_closure(model, h, opt);
  if (verdict.status != Membership::Inside) {
    throw NotInCone(std::string("decompose: membership verdict is ") + to_string(verdict.status));
  }
  std::vector<CVec> pts = verdict.points;
  std::vector<double> w = verdict.weights;
  if (static_cast<int>(pts.size()) > form.m()) reduce_support(pts, w, form);

  Decomposition out;
  out.v.assign(std::size_t(form.m()), CVec::Zero(form.n()));
  for (std::size_t i = 0; i < pts.size() && i < out.v.size(); ++i) {
    out.v[i] = std::sqrt(w[i]) * pts[i];  // Phi(sqrt(t) zeta) = t Phi(zeta)
    out.max_norm = std::max(out.max_norm, out.v[i].norm());
  }
  out.residual = (psi(form, out.v) - h).norm();
  return out;
}

std::vector<CVec> decompose(const ConeModel& model, const RVec& h, const ConeOptions& opt) {
  return decompose_info(model, h, opt).v;
}

bool spans_F(const ConeModel& model) {
  const RMat& g = model.generators();
  if (g.rows() == 0) return true;
  if (g.cols() == 0) return false;
  Eigen::JacobiSVD<RMat> svd(g);
  const RVec& s = svd.singularValues();
  if (s.size() < g.rows() || s[0] == 0.0) return false;
  return s[s.size() - 1] > 1e-9 * s[0];
}

}  // namespace siegel
