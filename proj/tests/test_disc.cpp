#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/disc.hpp"
#include "siegel/random.hpp"
#include "siegel/zoo.hpp"

using namespace siegel;

namespace {

RVec r1(double a) { return RVec::Constant(1, a); }

std::vector<std::shared_ptr<const SiegelSpec>> domains() {
  return {std::make_shared<const SiegelSpec>(heisenberg_domain(1)),
          std::make_shared<const SiegelSpec>(heisenberg_domain(2)),
          std::make_shared<const SiegelSpec>(ex1_domain({Field::Complex, 2, 1, 2})),
          std::make_shared<const SiegelSpec>(ex1_domain({Field::Quaternion, 1, 1, 1})),
          std::make_shared<const SiegelSpec>(ex1_domain({Field::Quaternion, 2, 2, 2})),
          std::make_shared<const SiegelSpec>(ex2_domain({1, 2, 1})),
          std::make_shared<const SiegelSpec>(ex2_domain({2, 2, 2}))};
}

DiscCoefficients random_disc(Rng& rng, const HermitianForm& f, double scale) {
  DiscCoefficients d;
  for (int j = 0; j < f.m(); ++j) d.v.push_back(random_cvec(rng, f.n(), scale));
  return d;
}

}  // namespace

TEST_CASE("boundary sample") {
  const BoundarySample s = BoundarySample::uniform(7);
  double total = 0.0;
  for (double w : s.weights) total += w;
  CHECK(total == doctest::Approx(1.0));
  for (cplx w : s.nodes) CHECK(std::abs(w) == doctest::Approx(1.0));
  CHECK_THROWS_AS(BoundarySample::uniform(0), ArgumentError);
}

TEST_CASE("disc hand values") {
  const HermitianForm h = HermitianForm::heisenberg(1);
  const DiscCoefficients one{{CVec::Constant(1, 1.0)}};
  for (cplx w : {cplx(0.3, -0.2), cplx(1, 0), cplx(0, 1)}) {
    const AmbientPoint p = disc_eval(h, one, w);
    CHECK(std::abs(p.zeta[0] - w) < 1e-15);
    CHECK(std::abs(p.z[0] - kI) < 1e-15);
  }
  CHECK(boundary_residual(h, one) < 1e-15);

  const DiscCoefficients zero{{CVec::Zero(1)}};
  const AmbientPoint z = disc_eval(h, zero, cplx(0.5, 0.5));
  CHECK(z.zeta.norm() == 0.0);
  CHECK(z.z.norm() == 0.0);
  CHECK(boundary_residual(h, zero) == 0.0);

  const AmbientPoint t = translated_disc_point(h, one, n_identity(h), r1(1.0), 1.0);
  CHECK(std::abs(t.zeta[0] - 1.0) < 1e-15);
  CHECK(std::abs(t.z[0] - 2.0 * kI) < 1e-15);

  CHECK_THROWS_AS(disc_eval(h, DiscCoefficients{}, 0.0), ArgumentError);
}

TEST_CASE("boundary lies on the quadric and the centre is (0, i psi)") {
  for (const auto& spec : domains()) {
    CAPTURE(spec->name);
    const HermitianForm& f = spec->form;
    Rng rng(31);
    double worst = 0.0, centre = 0.0;
    for (int i = 0; i < 200; ++i) {
      const DiscCoefficients d = random_disc(rng, f, 1.0);
      worst = std::max(worst, boundary_residual(f, d, 64));
      const AmbientPoint c = disc_eval(f, d, 0.0);
      centre = std::max(centre, distance(c, AmbientPoint{CVec::Zero(f.n()), kI * psi(f, d.v).cast<cplx>()}));
    }
    CHECK(worst <= 1e-9);
    CHECK(centre <= 1e-12);
  }
}

TEST_CASE("translated nodes keep rho = hpp") {
  for (const auto& spec : domains()) {
    const HermitianForm& f = spec->form;
    Rng rng(37);
    for (int i = 0; i < 20; ++i) {
      const DiscCoefficients d = random_disc(rng, f, 0.7);
      const NPoint base{random_cvec(rng, f.n()), random_rvec(rng, f.m())};
      const RVec hpp = random_rvec(rng, f.m());
      for (const auto& node : translated_disc_nodes(f, d, base, hpp, 32)) {
        CHECK((rho(f, node) - hpp).cwiseAbs().maxCoeff() <= 1e-9);
      }
    }
    // trivial base and height reproduce the bare disc
    Rng r2(1);
    const DiscCoefficients d = random_disc(r2, f, 1.0);
    const auto nodes = translated_disc_nodes(f, d, n_identity(f), RVec::Zero(f.m()), 16);
    const auto circle = BoundarySample::uniform(16).nodes;
    for (std::size_t j = 0; j < nodes.size(); ++j) CHECK(distance(nodes[j], disc_eval(f, d, circle[j])) < 1e-14);
  }
}

TEST_CASE("rho inside the disc stays in the closed generated cone") {
  for (const auto& spec : domains()) {
    const HermitianForm& f = spec->form;
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
      const DiscCoefficients d = random_disc(rng, f, 1.0);
      for (double r : {0.0, 0.3, 0.7, 0.95}) {
        const RVec h = rho(f, disc_eval(f, d, std::polar(r, 0.7 * i)));
        CHECK(spec->omega.closure_contains(h, 1e-9));
      }
    }
  }
}

TEST_CASE("sub-mean inequality") {
  const auto heis = std::make_shared<const SiegelSpec>(heisenberg_domain(1));
  const TestFunction f = TestFunction::dual_cone_kernel(heis, 2);
  const DiscCoefficients d{{CVec::Constant(1, 0.3)}};
  const SubmeanResult r = submean_check(f, d, n_identity(heis->form), r1(0.5), 2.0);
  CHECK(r.exponent == 1.0);
  CHECK(r.lhs <= r.rhs + 1e-8);

  const TestFunction c = TestFunction::constant(heis, cplx(3.0, 4.0));
  for (double p : {0.5, 1.0, 2.0}) {
    const SubmeanResult rc = submean_check(c, d, n_identity(heis->form), r1(0.5), p);
    CHECK(rc.exponent == std::min(1.0, p));
    CHECK(rc.lhs == doctest::Approx(std::pow(5.0, std::min(1.0, p))));
    CHECK(rc.rhs == doctest::Approx(rc.lhs));
  }

  CHECK_THROWS_AS(submean_check(f, d, n_identity(heis->form), r1(-3.0), 2.0), DomainError);

  for (const auto& spec : domains()) {
    CAPTURE(spec->name);
    Rng rng(43);
    for (double p : {0.5, 1.0, 2.0}) {
      const TestFunction k = TestFunction::dual_cone_kernel(spec, kernel_exponent_for(spec->n(), spec->m(), p));
      for (int i = 0; i < 10; ++i) {
        const DiscCoefficients dd = random_disc(rng, spec->form, 0.4);
        const NPoint base{random_cvec(rng, spec->n()), random_rvec(rng, spec->m())};
        const RVec hpp = 0.5 * spec->base_point;
        const SubmeanResult s = submean_check(k, dd, base, hpp, p, 128);
        CHECK(s.lhs <= s.rhs + 1e-8);
        CHECK(convolution_average(k, dd, base, hpp, p, 128) == doctest::Approx(s.rhs).epsilon(1e-10));
      }
    }
  }
}
