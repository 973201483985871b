#include <cmath>

#include "doctest.h"
#include "gatom/params.hpp"
#include "gatom/pulse.hpp"
#include "gatom/quadrature.hpp"

using namespace gatom;

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
}

TEST_CASE("spectral amplitude peak value") {
  const GaussianPulse pulse(1.0, 0.0, 0.1);
  CHECK(spectral_amplitude(pulse, 0.0).real() ==
        doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(spectral_amplitude(pulse, 0.0).imag() == 0.0);
}

TEST_CASE("spectral amplitude carries the arrival-time phase") {
  const GaussianPulse pulse(2.0, 1.5, 0.1);
  const cplx f = spectral_amplitude(pulse, 0.7);
  CHECK(std::arg(f) == doctest::Approx(0.7 * 1.5).epsilon(1e-12));
  CHECK(std::abs(f) ==
        doctest::Approx(std::pow(4.0 / kPi, 0.25) * std::exp(-0.49 * 4.0 / 2.0)).epsilon(1e-14));
}

TEST_CASE("spectral amplitude is L2-normalized") {
  for (double width : {0.5, 1.0, 3.0}) {
    const GaussianPulse pulse(width, 0.4, 0.1);
    QuadSpec spec;
    spec.truncation = 12.0 / width;
    const QuadResult norm =
        integrate([&](double k) { return std::norm(spectral_amplitude(pulse, k)); }, spec);
    CHECK(norm.value.real() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("temporal profile is the Fourier transform of the spectrum") {
  const GaussianPulse pulse(1.3, -0.6, 0.1);
  QuadSpec spec;
  spec.truncation = 15.0;
  for (double t : {-2.0, -0.6, 0.0, 1.7}) {
    const QuadResult ft = integrate(
        [&](double k) {
          return spectral_amplitude(pulse, k) * std::exp(cplx(0.0, -k * t));
        },
        spec);
    const cplx direct = temporal_profile(pulse, t);
    CHECK(std::abs(ft.value / std::sqrt(2.0 * kPi) - direct) < 1e-10);
  }
}

TEST_CASE("invalid pulse parameters are rejected") {
  CHECK_THROWS_AS(GaussianPulse(0.0, 0.0, 0.1), InvalidParams);
  CHECK_THROWS_AS(GaussianPulse(-1.0, 0.0, 0.1), InvalidParams);
  CHECK_THROWS_AS(GaussianPulse(1.0, 0.0, -0.1), InvalidParams);
}
