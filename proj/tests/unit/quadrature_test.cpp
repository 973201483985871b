#include <cmath>

#include "doctest.h"
#include "gatom/params.hpp"
#include "gatom/quadrature.hpp"

using namespace gatom;

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
}

TEST_CASE("gaussian integral against the closed form") {
  QuadSpec spec;
  spec.truncation = 30.0;
  const QuadResult r = integrate([](double k) { return std::exp(-k * k); }, spec);
  CHECK(std::abs(r.value - std::sqrt(kPi)) < 1e-12);
  CHECK(r.err_estimate < 1e-8);
  CHECK(std::abs(r.value - std::sqrt(kPi)) <= r.err_estimate + 1e-14);
}

TEST_CASE("near-pole integrals against closed forms") {
  // int_{-40}^{40} e^{-k^2/2}/(k + 0.01i) dk = -i pi e^{eps^2/2} erfc(eps/sqrt 2), eps = 0.01
  QuadSpec spec;
  spec.truncation = 40.0;
  const QuadResult a =
      integrate([](double k) { return std::exp(-k * k / 2.0) / cplx(k, 0.01); }, spec);
  CHECK(std::abs(a.value - cplx(0.0, -3.1166826188437500)) < 1e-10);

  spec.truncation = 30.0;
  const QuadResult b = integrate(
      [](double k) { return std::exp(-k * k) / (k - cplx(0.0, 0.04 * kPi)); }, spec);
  CHECK(std::abs(b.value - cplx(0.0, 2.7414107944405579)) < 1e-10);
}

TEST_CASE("oscillatory integrand against the closed form") {
  // int_{-1}^{1} e^{i w x} dx = 2 sin(w)/w
  const double w = 73.0;
  const QuadResult r = integrate_interval(
      [&](double x) { return std::exp(cplx(0.0, w * x)); }, -1.0, 1.0, QuadSpec{});
  CHECK(std::abs(r.value - 2.0 * std::sin(w) / w) < 1e-12);
}

TEST_CASE("subdivision starvation raises NonConvergence with a best estimate") {
  QuadSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-14;
  spec.max_subdivisions = 3;
  try {
    integrate_interval([](double x) { return std::exp(cplx(0.0, 200.0 * x)) / (x * x + 1e-4); },
                       -1.0, 1.0, spec);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(std::isfinite(e.best_estimate.real()));
    CHECK(std::isfinite(e.best_estimate.imag()));
    CHECK(e.achieved_error > 0.0);
  }
}

TEST_CASE("non-finite integrand values raise NonConvergence") {
  CHECK_THROWS_AS(integrate_interval([](double x) { return 1.0 / x; }, -1.0, 1.0, QuadSpec{}),
                  NonConvergence);
}

TEST_CASE("the two independent rules agree on a smooth integrand") {
  auto f = [](double x) { return std::exp(cplx(0.0, 3.0 * x)) * std::exp(-x * x / 7.0); };
  QuadSpec spec;
  spec.truncation = 25.0;
  const QuadResult gk = integrate(f, spec);
  const QuadResult simpson = integrate_simpson(f, spec);
  // Each rule only guarantees its own abs_tol (1e-10); the Simpson error
  // estimate is not a hard bound, so allow slack on the cross-check.
  CHECK(std::abs(gk.value - simpson.value) < 2e-9);
}

TEST_CASE("invalid truncation is rejected") {
  CHECK_THROWS_AS(integrate([](double) { return cplx(1.0); }, QuadSpec{}), InvalidParams);
}

TEST_CASE("default truncation covers pulse and pole scales") {
  const GaussianPulse narrow(0.25, 0.0, 0.1);
  CHECK(default_truncation(narrow, cplx(0.0, 1.0)) == doctest::Approx(40.0));
  const GaussianPulse wide(10.0, 0.0, 0.1);
  // far-detuned pole dominates
  CHECK(default_truncation(wide, cplx(-50.0, 2.0)) == doctest::Approx(90.0));
}
