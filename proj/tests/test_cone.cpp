#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/cone.hpp"
#include "siegel/random.hpp"
#include "siegel/zoo.hpp"

using namespace siegel;

namespace {

RVec r1(double a) { return RVec::Constant(1, a); }

// Brute-force NNLS: least squares on every support, keep the best feasible one.
double brute_nnls_residual(const RMat& a, const RVec& b) {
  const int k = int(a.cols());
  double best = b.norm();
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < k; ++j)
      if (mask & (1 << j)) cols.push_back(j);
    RMat sub(a.rows(), Eigen::Index(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) sub.col(Eigen::Index(j)) = a.col(cols[j]);
    const RVec x = sub.colPivHouseholderQr().solve(b);
    if (x.minCoeff() < -1e-12) continue;
    best = std::min(best, (sub * x - b).norm());
  }
  return best;
}

std::vector<SiegelSpec> audit_domains() {
  std::vector<CMat> lorentz = {CMat::Identity(2, 2), CMat::Zero(2, 2)};
  lorentz[1](0, 0) = 1.0;
  lorentz[1](1, 1) = -1.0;
  return {heisenberg_domain(2), ex1_domain({Field::Complex, 2, 1, 2}), ex2_domain({1, 2, 2}),
          make_siegel_spec("lorentz", HermitianForm(2, lorentz), OmegaCone(OmegaCone::GeneratedInterior{}),
                           (RVec(2) << 1.0, 0.0).finished())};
}

}  // namespace

TEST_CASE("nnls matches brute force on small problems") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const RMat a = RMat::NullaryExpr(4, 6, [&] { return random_rvec(rng, 1)[0]; });
    const RVec b = random_rvec(rng, 4);
    const NnlsResult r = nnls(a, b);
    CHECK(r.x.minCoeff() >= 0.0);
    CHECK(r.residual == doctest::Approx(brute_nnls_residual(a, b)).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("psi and membership hand values") {
  const ConeModel model(HermitianForm::heisenberg(1));
  CHECK(psi(model.form(), {CVec::Constant(1, 2.0)})[0] == doctest::Approx(4.0));
  CHECK(psi(model.form(), {CVec::Zero(1)})[0] == 0.0);
  CHECK_THROWS_AS(psi(model.form(), {CVec::Zero(1), CVec::Zero(1)}), ArgumentError);

  const MembershipVerdict in = membership_closure(model, r1(4.0));
  CHECK(in.status == Membership::Inside);
  CHECK(verify_certificate(model, r1(4.0), in, 1e-8));

  const MembershipVerdict out = membership_closure(model, r1(-1.0));
  REQUIRE(out.status == Membership::Outside);
  CHECK(out.lambda[0] > 0.0);
  CHECK(out.pencil_min_eig >= 0.0);

  const MembershipVerdict zero = membership_closure(model, r1(0.0));
  CHECK(zero.status == Membership::Inside);
  for (double w : zero.weights) CHECK(w == 0.0);
}

TEST_CASE("decompose hand values") {
  const ConeModel model(HermitianForm::heisenberg(1));
  const auto v = decompose(model, r1(9.0));
  REQUIRE(v.size() == 1);
  CHECK(std::abs(v[0][0]) == doctest::Approx(3.0));
  const auto z = decompose(model, r1(0.0));
  CHECK(z[0].norm() == 0.0);
  CHECK_THROWS_AS(decompose(model, r1(-2.0)), NotInCone);
}

TEST_CASE("spans_F") {
  CHECK(spans_F(ConeModel(HermitianForm::heisenberg(1))));
  CHECK_FALSE(spans_F(ConeModel(HermitianForm(1, {CMat::Zero(1, 1)}))));
  CHECK(spans_F(*ex1_domain({Field::Complex, 1, 1, 1}).cone));
  CHECK_FALSE(spans_F(*ex1_domain({Field::Complex, 3, 2, 1}).cone));
}

TEST_CASE("sphere directions are deterministic unit vectors") {
  const auto a = sphere_directions(3, 50), b = sphere_directions(3, 50);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].norm() == doctest::Approx(1.0));
    CHECK((a[i] - b[i]).norm() == 0.0);
  }
}

TEST_CASE("cone properties on configured domains") {
  for (const SiegelSpec& spec : audit_domains()) {
    CAPTURE(spec.name);
    const ConeModel& cone = *spec.cone;
    const HermitianForm& f = spec.form;
    Rng rng(17);
    int scale_mismatch = 0, psi_outside = 0, dual_bad = 0, bad_cert = 0;
    double round_trip = 0.0;
    for (int i = 0; i < 300; ++i) {
      const RVec h = random_rvec(rng, f.m());
      const MembershipVerdict v = membership_closure(cone, h);
      if (!verify_certificate(cone, h, v, 1e-8)) ++bad_cert;
      if (membership_closure(cone, 2.0 * h).status != v.status) ++scale_mismatch;
      if (v.status == Membership::Outside) {
        for (int k = 0; k < 50; ++k) {
          CVec z = random_cvec(rng, f.n());
          z /= z.norm();
          if (v.lambda.dot(f.diag(z)) < -1e-8) ++dual_bad;
        }
      }
      std::vector<CVec> vs;
      for (int j = 0; j < f.m(); ++j) vs.push_back(random_cvec(rng, f.n()));
      const RVec hp = psi(f, vs);
      if (membership_closure(cone, hp).status == Membership::Outside) ++psi_outside;
      if (i < 100) {
        const auto d = decompose(cone, hp);
        round_trip = std::max(round_trip, (psi(f, d) - hp).norm() / (1.0 + hp.norm()));
      }
    }
    CHECK(bad_cert == 0);
    CHECK(scale_mismatch == 0);
    CHECK(psi_outside == 0);
    CHECK(dual_bad == 0);
    CHECK(round_trip <= 1e-8);
  }
}

TEST_CASE("Omega interior points are inside the generated cone") {
  // p = r for the matrix family and p = 2 for the spin family
  for (const SiegelSpec& spec : {ex1_domain({Field::Complex, 2, 1, 2}), ex1_domain({Field::Quaternion, 2, 1, 2}),
                                 ex1_domain({Field::Complex, 3, 1, 3}), ex2_domain({1, 2, 1}),
                                 ex2_domain({2, 2, 2})}) {
    CAPTURE(spec.name);
    Rng rng(23);
    int tested = 0, inside = 0;
    while (tested < 50) {
      const RVec h = spec.base_point + random_rvec(rng, spec.m(), 0.6);
      if (!spec.omega.contains(h)) continue;
      ++tested;
      if (membership_closure(*spec.cone, h).status == Membership::Inside) ++inside;
    }
    CHECK(inside == tested);
  }
}
