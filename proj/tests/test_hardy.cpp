#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <numbers>

#include "siegel/hardy.hpp"
#include "siegel/random.hpp"
#include "siegel/zoo.hpp"

using namespace siegel;
using std::numbers::pi;

namespace {

RVec r1(double a) { return RVec::Constant(1, a); }

std::shared_ptr<const SiegelSpec> heis(int n) { return std::make_shared<const SiegelSpec>(heisenberg_domain(n)); }

// |f_h|_2^2 for (z + i)^{-2} on heisenberg(n) by nested quadrature:
// radial integral over C^n, full line in x.
double quadrature_norm2(int n, double h) {
  boost::math::quadrature::exp_sinh<double> half_line;
  const double sphere = 2.0 * std::pow(pi, n) / std::tgamma(double(n));  // area of S^{2n-1}
  auto radial = [&](double r) {
    const double a = r * r + h + 1.0;
    if (a > 1e50) return 0.0;  // integrand is O(r^{2n-7}) there
    auto in_x = [a](double x) { return 1.0 / ((x * x + a * a) * (x * x + a * a)); };
    const double line = 2.0 * half_line.integrate(in_x);
    return sphere * std::pow(r, 2 * n - 1) * line;
  };
  return std::sqrt(half_line.integrate(radial));
}

SamplerConfig sampler(std::int64_t samples, std::uint64_t seed = 1, int workers = 1) {
  SamplerConfig c;
  c.samples = samples;
  c.seed = seed;
  c.workers = workers;
  return c;
}

}  // namespace

TEST_CASE("quadrature oracle agrees with the closed forms") {
  for (double h : {0.25, 0.5, 1.0, 2.0}) {
    CHECK(quadrature_norm2(1, h) == doctest::Approx(pi / (2.0 * (1.0 + h))).epsilon(1e-9));
    CHECK(quadrature_norm2(2, h) == doctest::Approx(std::sqrt(std::pow(pi, 3) / (4.0 * (1.0 + h)))).epsilon(1e-9));
  }
}

TEST_CASE("slice_eval") {
  const auto d = heis(1);
  const TestFunction f = TestFunction::dual_cone_kernel(d, 2);
  const cplx v = slice_eval(f, r1(1.0), n_identity(d->form));
  CHECK(std::abs(v - cplx(-0.25, 0.0)) < 1e-15);

  const TestFunction c = TestFunction::constant(d, cplx(2.0, -1.0));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const NPoint a{random_cvec(rng, 1), random_rvec(rng, 1)};
    CHECK(slice_eval(c, random_rvec(rng, 1), a) == cplx(2.0, -1.0));
    CHECK(slice_eval(f, r1(0.0), a) == f.eval(iota(d->form, a)));
  }
  CHECK_THROWS_AS(slice_eval(f, r1(-2.0), n_identity(d->form)), DomainError);
}

TEST_CASE("kernel invariants are enforced") {
  const auto d = heis(1);
  CHECK_THROWS_AS(TestFunction(d, DualConeKernel{{r1(-1.0)}, 2}), ArgumentError);
  CHECK_THROWS_AS(TestFunction(d, DualConeKernel{{}, 2}), ArgumentError);
  const auto e = std::make_shared<const SiegelSpec>(ex2_domain({1, 2, 1}));
  RVec flat = RVec::Zero(4);
  flat[0] = 1.0;  // pencil is only semidefinite
  CHECK_THROWS_AS(TestFunction(e, DualConeKernel{{flat, flat, flat, flat}, 2}), ArgumentError);
  CHECK(TestFunction::dual_cone_kernel(e, 2).holomorphic());
  CHECK_FALSE(TestFunction::scaled_control(d, 2, 0.5, r1(1.0)).holomorphic());
  CHECK(kernel_exponent_for(1, 1, 2.0) == 2);
  CHECK(kernel_exponent_for(1, 1, 0.5) == 6);
  CHECK(kernel_exponent_for(1, 1, kInfP) == 2);
}

TEST_CASE("lp_norm on the Heisenberg kernel") {
  const auto d = heis(1);
  const TestFunction f = TestFunction::dual_cone_kernel(d, 2);
  for (double h : {0.25, 1.0, 2.0}) {
    const NormEstimate e = lp_norm(f, r1(h), 2.0, sampler(200000, 5));
    const double exact = pi / (2.0 * (1.0 + h));
    CHECK(std::abs(e.value - exact) <= 3.0 * e.std_error + 1e-3 * exact);
    CHECK(e.std_error > 0.0);
    CHECK_FALSE(e.lower_bound);
  }
  const TestFunction zero = TestFunction::constant(d, 0.0);
  CHECK(lp_norm(zero, r1(1.0), 2.0).value == 0.0);
  CHECK(std::isinf(lp_norm(TestFunction::constant(d, 1.0), r1(1.0), 2.0).value));

  const NormEstimate sup = lp_norm(f, r1(0.0), kInfP, sampler(200000));
  CHECK(sup.lower_bound);
  CHECK(sup.value <= 1.0 + 1e-12);
  CHECK(sup.value > 0.95);
}

TEST_CASE("lp_norm on heisenberg(2)") {
  const TestFunction f = TestFunction::dual_cone_kernel(heis(2), 2);
  const NormEstimate e = lp_norm(f, r1(0.5), 2.0, sampler(200000, 9));
  const double exact = std::sqrt(std::pow(pi, 3) / (4.0 * 1.5));
  CHECK(std::abs(e.value - exact) <= 3.0 * e.std_error + 1e-3 * exact);
}

TEST_CASE("monotonicity scan examples") {
  const auto d = heis(1);
  const TestFunction f = TestFunction::dual_cone_kernel(d, 2);
  const std::vector<double> grid{0.0, 0.25, 0.75, 1.75};
  const MonotonicityReport r = monotonicity_scan(f, 2.0, r1(0.25), r1(1.0), grid, sampler(200000));
  REQUIRE(r.estimates.size() == 4);
  const double expected[] = {1.2566, 1.0472, 0.7854, 0.5236};
  for (int i = 0; i < 4; ++i) CHECK(r.estimates[std::size_t(i)].value == doctest::Approx(expected[i]).epsilon(0.01));
  CHECK(r.violations.empty());
  CHECK(find_violations(r.estimates, r.sigmas) == r.violations);

  const MonotonicityReport flat = monotonicity_scan(f, 2.0, r1(0.5), r1(0.0), grid, sampler(20000));
  for (const auto& e : flat.estimates) CHECK(e.value == flat.estimates.front().value);
  CHECK(flat.violations.empty());

  const TestFunction ctl = TestFunction::scaled_control(d, 2, 0.5, r1(1.0));
  const MonotonicityReport bad = monotonicity_scan(ctl, 2.0, r1(0.25), r1(1.0), grid, sampler(200000));
  CHECK_FALSE(bad.violations.empty());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double h = 0.25 + grid[i];
    const double exact = pi * std::exp(0.5 * h) / (2.0 * (1.0 + h));
    CHECK(bad.estimates[i].value == doctest::Approx(exact).epsilon(0.01));
  }
}

TEST_CASE("monotonicity scan preconditions") {
  const TestFunction f = TestFunction::dual_cone_kernel(heis(1), 2);
  const auto cfg = sampler(1000);
  CHECK_THROWS_AS(monotonicity_scan(f, 2.0, r1(0.25), r1(1.0), {}, cfg), PreconditionError);
  CHECK_THROWS_AS(monotonicity_scan(f, 2.0, r1(0.25), r1(1.0), {0.0, 1.0, 0.5}, cfg), PreconditionError);
  CHECK_THROWS_AS(monotonicity_scan(f, 2.0, r1(0.25), r1(1.0), {-1.0, 1.0}, cfg), PreconditionError);
  CHECK_THROWS_AS(monotonicity_scan(f, 2.0, r1(-0.25), r1(1.0), {0.0, 1.0}, cfg), PreconditionError);
  CHECK_THROWS_AS(monotonicity_scan(f, 2.0, r1(0.25), r1(-1.0), {0.0, 1.0}, cfg), PreconditionError);
}

TEST_CASE("estimates are independent of the worker count") {
  const TestFunction f = TestFunction::dual_cone_kernel(heis(2), 2);
  const std::vector<RVec> hs{r1(0.3), r1(1.0)};
  const auto a = lp_norms_crn(f, hs, 1.0, sampler(40000, 77, 1));
  const auto b = lp_norms_crn(f, hs, 1.0, sampler(40000, 77, 3));
  const auto c = lp_norms_crn(f, hs, 1.0, sampler(40000, 78, 3));
  for (std::size_t i = 0; i < hs.size(); ++i) {
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].std_error == b[i].std_error);
    CHECK(a[i].value != c[i].value);
  }
}

TEST_CASE("sup versus small-height limit") {
  const auto d = heis(1);
  const TestFunction f = TestFunction::dual_cone_kernel(d, 2);
  std::vector<RVec> to_zero{r1(0.001), r1(0.01)}, global{r1(0.5), r1(2.0)};
  const CorollaryResult r = sup_vs_liminf(f, 2.0, to_zero, global, sampler(200000));
  CHECK(r.agree);
  CHECK(r.sup_estimate.h[0] == 0.001);
  CHECK(r.liminf_estimate.value == doctest::Approx(pi / 2.0).epsilon(0.01));

  const CorollaryResult z = sup_vs_liminf(TestFunction::constant(d, 0.0), 2.0, to_zero, global);
  CHECK(z.sup_estimate.value == 0.0);
  CHECK(z.liminf_estimate.value == 0.0);

  const auto flat = std::make_shared<const SiegelSpec>(ex1_domain({Field::Complex, 3, 2, 1}));
  CHECK_THROWS_AS(sup_vs_liminf(TestFunction::constant(flat, 0.0), 2.0, {flat->base_point}, {}), PreconditionError);
}

TEST_CASE("monotone along inside directions on configured domains") {
  std::vector<std::shared_ptr<const SiegelSpec>> domains{
      heis(2), std::make_shared<const SiegelSpec>(ex1_domain({Field::Quaternion, 2, 1, 2})),
      std::make_shared<const SiegelSpec>(ex2_domain({2, 2, 2}))};
  for (const auto& d : domains) {
    CAPTURE(d->name);
    Rng rng(99);
    for (double p : {0.5, 1.0, 2.0, kInfP}) {
      const TestFunction f = TestFunction::dual_cone_kernel(d, kernel_exponent_for(d->n(), d->m(), p));
      const RVec hdir = d->form.diag(random_cvec(rng, d->n()));
      const auto rep = monotonicity_scan(f, p, 0.5 * d->base_point, hdir, {0.0, 0.5, 1.0}, sampler(30000, 3));
      CHECK(rep.violations.empty());
    }
  }
}
