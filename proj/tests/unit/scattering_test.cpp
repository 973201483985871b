#include <cmath>
#include <random>

#include "doctest.h"
#include "gatom/oracle.hpp"
#include "gatom/scattering.hpp"

using namespace gatom;

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
const SystemParams kGeneric(cplx(0.05, 0.02), cplx(0.03, -0.07), 2.3, 0.17);

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) < tol; }
}  // namespace

TEST_CASE("all six amplitudes at the reference point") {
  const double k = 0.9;
  CHECK(close(s_r(kGeneric, k), cplx(3.0359346350285898e-01, 2.8361725471270266e-01), 1e-15));
  CHECK(close(s_l(kGeneric, k), cplx(-6.4694915651618501e-02, 1.5697702993080651e-01), 1e-15));
  CHECK(close(t_r(kGeneric, k), cplx(9.9070913906503433e-01, -1.2584190152570085e-01), 1e-15));
  CHECK(close(r_r(kGeneric, k), cplx(-4.9461602956128052e-02, -1.4586549503723012e-02), 1e-15));
  CHECK(close(t_l(kGeneric, k), cplx(9.9844833322527893e-01, -2.1016857192456904e-02), 1e-15));
  CHECK(close(r_l(kGeneric, k), cplx(4.6783151601412984e-02, -2.1692264050887505e-02), 1e-15));
}

TEST_CASE("probability conservation across random parameter sets") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const SystemParams p = draw_params(rng);
    const double k = draw_k(rng, p);
    CHECK(std::abs(std::norm(t_r(p, k)) + std::norm(r_r(p, k)) - 1.0) < 1e-12);
    CHECK(std::abs(std::norm(t_l(p, k)) + std::norm(r_l(p, k)) - 1.0) < 1e-12);
  }
}

TEST_CASE("left and right incidence share transmission and reflection probabilities") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const SystemParams p = draw_params(rng);
    const double k = draw_k(rng, p);
    CHECK(std::abs(std::norm(t_r(p, k)) - std::norm(t_l(p, k))) < 1e-12);
    CHECK(std::abs(std::norm(r_r(p, k)) - std::norm(r_l(p, k))) < 1e-12);
  }
}

TEST_CASE("order-one working point reduces to the textbook pole") {
  // equal real couplings, quarter-wave phase, resonant detuning -1:
  // t_r(k) = k/(k+i), r_r(k) = 1/(k+i)
  const double g = std::sqrt(1.0 / (4.0 * kPi));
  const SystemParams p(g, g, kPi / 2.0, -1.0);
  for (double k : {-3.0, -0.4, 0.0, 0.8, 2.5}) {
    CHECK(close(t_r(p, k), k / cplx(k, 1.0), 1e-14));
    CHECK(close(r_r(p, k), 1.0 / cplx(k, 1.0), 1e-14));
  }
  // full extinction on resonance
  CHECK(std::abs(t_r(p, 0.0)) < 1e-15);
  CHECK(std::abs(r_r(p, 0.0) - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("decoupled points yield exact unit transmission") {
  // g2 = -g1 e^{-i phi0} kills the forward coupling for right incidence
  const cplx g1(0.21, -0.13);
  const double phi = 1.1;
  const cplx g2 = -g1 * std::exp(cplx(0.0, -phi));
  const SystemParams p(g1, g2, phi, 0.37);
  CHECK(right_decoupled(p));
  for (double k : {-2.0, 0.0, 0.37, 5.0}) {
    CHECK(t_r(p, k) == cplx(1.0, 0.0));
    CHECK(r_r(p, k) == cplx(0.0, 0.0));
    CHECK(s_r(p, k) == cplx(0.0, 0.0));
  }
  // and the mirrored case for left incidence
  const cplx g2l = -g1 * std::exp(cplx(0.0, phi));
  const SystemParams q(g1, g2l, phi, 0.37);
  CHECK(left_decoupled(q));
  for (double k : {-2.0, 0.0, 5.0}) {
    CHECK(t_l(q, k) == cplx(1.0, 0.0));
    CHECK(r_l(q, k) == cplx(0.0, 0.0));
    CHECK(s_l(q, k) == cplx(0.0, 0.0));
  }
  // out-of-phase equal couplings decouple both directions at once
  const SystemParams dark(0.5, -0.5, 0.0, 0.0);
  CHECK(right_decoupled(dark));
  CHECK(left_decoupled(dark));
  CHECK(total_decay(dark) == 0.0);
}

TEST_CASE("channel dispatch returns the matching amplitude") {
  const double k = -0.3;
  CHECK(chi(kGeneric, Channel::Transmit, k) == t_r(kGeneric, k));
  CHECK(chi(kGeneric, Channel::Reflect, k) == r_r(kGeneric, k));
}
