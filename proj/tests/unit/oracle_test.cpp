#include <cmath>
#include <random>

#include "doctest.h"
#include "gatom/oracle.hpp"

using namespace gatom;

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
const double kG = std::sqrt(1.0 / (4.0 * kPi));
const SystemParams kP3(kG, kG, kPi / 2.0, -1.0);
const SystemParams kGeneric(cplx(0.05, 0.02), cplx(0.03, -0.07), 2.3, 0.17);
}  // namespace

TEST_CASE("parameter draws stay inside the advertised ranges") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const SystemParams p = draw_params(rng);
    for (cplx g : {p.g1, p.g2}) {
      const double partial = 2.0 * kPi * std::norm(g);
      CHECK(partial >= 0.5e-3);
      CHECK(partial <= 20e-3);
    }
    CHECK(p.phi0 >= 0.0);
    CHECK(p.phi0 < 2.0 * kPi);
    CHECK(std::abs(p.delta) <= 10.0 * total_decay(p) + 1e-12);
  }
}

TEST_CASE("draws are reproducible from the seed") {
  std::mt19937_64 a(123), b(123);
  for (int i = 0; i < 20; ++i) {
    const SystemParams pa = draw_params(a), pb = draw_params(b);
    CHECK(pa.g1 == pb.g1);
    CHECK(pa.g2 == pb.g2);
    CHECK(pa.phi0 == pb.phi0);
    CHECK(pa.delta == pb.delta);
  }
}

TEST_CASE("unitarity check passes and reports sane fields") {
  const OracleReport r = check_unitarity(100, 5, 7);
  CHECK(r.pass);
  CHECK(r.max_dev < r.tolerance);
  CHECK(r.samples == 500);
  CHECK(r.name == "unitarity");
}

TEST_CASE("pole form check passes on the reference set") {
  const OracleReport r = check_pole_form(kGeneric, 50, 7);
  CHECK(r.pass);
  CHECK(r.max_dev < 1e-13);
}

TEST_CASE("fused coupling points reduce to a single-point emitter") {
  const OracleReport r = check_smallatom_reduction(kGeneric, 50, 7);
  CHECK(r.pass);
}

TEST_CASE("closed-form frequency-sum integral holds on a coarse grid") {
  const OracleReport r = check_contour_identity(kP3, 5, 5);
  CHECK(r.pass);
  CHECK(r.max_dev < 1e-9);  // far tighter than the advertised tolerance
  const OracleReport rg = check_contour_identity(kGeneric, 4, 4);
  CHECK(rg.pass);
}

TEST_CASE("factorization check sees monotone convergence") {
  const GaussianPulse pulse(1.0, 0.0, 0.1);
  const OracleReport r = check_factorization(kP3, pulse, kTT);
  CHECK(r.pass);
  CHECK(r.max_dev < 1e-3);
}

TEST_CASE("identity suite holds over random draws") {
  const OracleReport r = check_identity_suite(300, 5);
  CHECK(r.pass);
  CHECK(r.samples > 0);
}
