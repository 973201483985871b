#include <cmath>
#include <random>

#include "doctest.h"
#include "gatom/oracle.hpp"
#include "gatom/two_photon.hpp"

using namespace gatom;

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
const SystemParams kGeneric(cplx(0.05, 0.02), cplx(0.03, -0.07), 2.3, 0.17);

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) < tol; }
}  // namespace

TEST_CASE("nonlinear constants at the reference point") {
  const NonlinearConstants nc = nonlinear_constants(kGeneric);
  CHECK(close(nc.pole, cplx(-1.7093708080652723e-01, 5.3826445030976118e-02), 1e-16));
  CHECK(close(nc.residue, cplx(-3.5275478534129462e-02, -1.3296854614806394e-02), 1e-16));
  CHECK(close(nc.b_tt, cplx(-4.4623336797973870e+01, -2.3765831894725842e+01), 1e-12));
  CHECK(close(nc.b_rr, cplx(2.9782031710196599e+00, 7.9009318423769157e+00), 1e-13));
  CHECK(close(nc.b_tr, cplx(-1.5520340705612201e+01, 1.3638406094330483e+01), 1e-13));
}

TEST_CASE("order-one working point constants") {
  const double g = std::sqrt(1.0 / (4.0 * kPi));
  const NonlinearConstants nc = nonlinear_constants(SystemParams(g, g, kPi / 2.0, -1.0));
  CHECK(close(nc.pole, cplx(0.0, 1.0), 1e-14));
  CHECK(close(nc.residue, cplx(1.0, 0.0), 1e-14));
  CHECK(close(nc.b_tt, cplx(0.0, 1.0 / kPi), 1e-14));
  CHECK(close(nc.b_rr, cplx(0.0, -1.0 / kPi), 1e-14));
}

TEST_CASE("reflected-pair coefficient cancels the residue universally") {
  // i * residue * b_rr = 1/pi for every coupled parameter set; this is what
  // forces the reflected two-photon amplitude to vanish at equal times.
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const SystemParams p = draw_params(rng);
    if (right_decoupled(p)) continue;
    const NonlinearConstants nc = nonlinear_constants(p);
    CHECK(std::abs(cplx(0.0, 1.0) * nc.residue * nc.b_rr - 1.0 / kPi) < 1e-12);
  }
}

TEST_CASE("interaction weights at the reference kinematics") {
  const double p1 = 0.3, p2 = -0.2, k1 = 0.45, k2 = -0.35;
  CHECK(close(interaction_weight(kGeneric, kTT, p1, p2, k1, k2),
              cplx(-6.3149621940474104e-02, -6.6794689848873864e-02), 1e-14));
  CHECK(close(interaction_weight(kGeneric, kRR, p1, p2, k1, k2),
              cplx(5.5879943022530722e-04, 1.5341494646994379e-02), 1e-14));
  CHECK(close(interaction_weight(kGeneric, kTR, p1, p2, k1, k2),
              cplx(-3.4645184890557804e-02, 1.4520552058928991e-02), 1e-14));
}

TEST_CASE("interaction weight equals its pole-factorized form") {
  // For every channel pair the weight factorizes through reflection
  // amplitudes: W = B_c r_r(p1) r_r(p2) (r_r(k1) + r_r(k2)).
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const SystemParams p = draw_params(rng);
    if (right_decoupled(p)) continue;
    const NonlinearConstants nc = nonlinear_constants(p);
    const double k1 = draw_k(rng, p), k2 = draw_k(rng, p), p1 = draw_k(rng, p);
    const double p2 = k1 + k2 - p1;
    for (ChannelPair pair : {kTT, kRR, kTR}) {
      const cplx lhs = interaction_weight(p, pair, p1, p2, k1, k2);
      const cplx rhs = bound_state_coefficient(nc, pair) * r_r(p, p1) * r_r(p, p2) *
                       (r_r(p, k1) + r_r(p, k2));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("weights vanish smoothly at a decoupled point") {
  const cplx g1(0.21, -0.13);
  const double phi = 1.1;
  const SystemParams p(g1, -g1 * std::exp(cplx(0.0, -phi)), phi, 0.0);
  CHECK(interaction_weight(p, kTT, 0.1, 0.2, 0.15, 0.15) == cplx(0.0, 0.0));
  CHECK_THROWS_AS(nonlinear_constants(p), DecoupledPoint);
}

TEST_CASE("elastic kernel structure per channel pair") {
  const double p1 = 0.3, p2 = -0.2;
  const TwoPhotonKernel tt = smatrix2(kGeneric, kTT, p1, p2, p1, p2);
  CHECK(close(tt.elastic_direct, t_r(kGeneric, p1) * t_r(kGeneric, p2), 1e-15));
  CHECK(close(tt.elastic_exchange, t_r(kGeneric, p1) * t_r(kGeneric, p2), 1e-15));

  const TwoPhotonKernel rr = smatrix2(kGeneric, kRR, p1, p2, p1, p2);
  CHECK(close(rr.elastic_direct, r_r(kGeneric, p1) * r_r(kGeneric, p2), 1e-15));

  // mixed pair: the transmitted leg always carries p1
  const TwoPhotonKernel tr = smatrix2(kGeneric, kTR, p1, p2, p1, p2);
  CHECK(close(tr.elastic_direct, t_r(kGeneric, p1) * r_r(kGeneric, p2), 1e-15));
  CHECK(close(tr.elastic_exchange, t_r(kGeneric, p2) * r_r(kGeneric, p1), 1e-15));

  CHECK(close(tt.interaction, interaction_weight(kGeneric, kTT, p1, p2, p1, p2), 1e-15));
}
