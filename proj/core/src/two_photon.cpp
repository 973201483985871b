#include "gatom/two_photon.hpp"

#include <cmath>

namespace gatom {

namespace {

constexpr double kPi = 3.141592653589793238462643383280;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

cplx phase(double phi) { return std::exp(cplx(0.0, phi)); }

}  // namespace

NonlinearConstants nonlinear_constants(const SystemParams& p) {
  if (right_decoupled(p)) {
    throw DecoupledPoint("bound-state coefficients are singular at a decoupled point");
  }
  const cplx e = phase(p.phi0);
  const cplx a = std::conj(p.g1) + std::conj(p.g2) * e;        // conj coupling, +phi0
  const cplx bb = std::conj(p.g1) + std::conj(p.g2) / e;       // conj coupling, -phi0
  const cplx fwd = p.g1 + p.g2 * e;

  NonlinearConstants c;
  c.pole = -p.delta + cplx(0.0, 2.0 * kPi) * (std::norm(p.g1) + std::norm(p.g2)) +
           cplx(0.0, 4.0 * kPi) * std::real(p.g1 * std::conj(p.g2)) * e;
  c.residue = cplx(0.0, -2.0 * kPi) *
              (std::norm(p.g1) + std::norm(p.g2) * phase(2.0 * p.phi0) +
               2.0 * std::real(p.g1 * std::conj(p.g2)) * e);
  const double norm2pi2 = 2.0 * kPi * kPi;
  c.b_tt = bb * bb / (a * a * a * fwd) / norm2pi2;
  c.b_rr = 1.0 / (a * fwd) / norm2pi2;
  c.b_tr = bb / (a * a * fwd) / norm2pi2;
  return c;
}

cplx bound_state_coefficient(const NonlinearConstants& c, ChannelPair pair) {
  if (pair.a == Channel::Transmit && pair.b == Channel::Transmit) return c.b_tt;
  if (pair.a == Channel::Reflect && pair.b == Channel::Reflect) return c.b_rr;
  return c.b_tr;
}

namespace {

// Smooth part of the two-photon element. All three channel pairs share the
// core i sqrt(2pi)/pi * s_r(p2) s_r(p1) [s_r(k1)+s_r(k2)] / (g1+g2 e^{i phi0});
// the channel enters through two conjugated coupling factors.
cplx weight(const SystemParams& p, cplx lead, cplx tail, double p1, double p2, double k1,
            double k2) {
  if (right_decoupled(p)) return 0.0;
  const cplx core = s_r(p, p2) * s_r(p, p1) * (s_r(p, k1) + s_r(p, k2)) / kPi;
  const cplx fwd = p.g1 + p.g2 * phase(p.phi0);
  return cplx(0.0, kSqrt2Pi) * lead * core * tail / fwd;
}

}  // namespace

cplx interaction_weight(const SystemParams& p, ChannelPair pair, double p1, double p2, double k1,
                        double k2) {
  const cplx am = std::conj(p.g1) + std::conj(p.g2) * phase(-p.phi0);
  const cplx ap = std::conj(p.g1) + std::conj(p.g2) * phase(p.phi0);
  if (pair.a == Channel::Transmit && pair.b == Channel::Transmit) {
    return weight(p, am, am, p1, p2, k1, k2);
  }
  if (pair.a == Channel::Reflect && pair.b == Channel::Reflect) {
    return weight(p, ap, ap, p1, p2, k1, k2);
  }
  return weight(p, ap, am, p1, p2, k1, k2);
}

TwoPhotonKernel smatrix2_tt(const SystemParams& p, double p1, double p2, double k1, double k2) {
  const cplx el = t_r(p, k1) * t_r(p, k2);
  return {el, el, interaction_weight(p, kTT, p1, p2, k1, k2)};
}

TwoPhotonKernel smatrix2_rr(const SystemParams& p, double p1, double p2, double k1, double k2) {
  const cplx el = r_r(p, k1) * r_r(p, k2);
  return {el, el, interaction_weight(p, kRR, p1, p2, k1, k2)};
}

TwoPhotonKernel smatrix2_tr(const SystemParams& p, double p1, double p2, double k1, double k2) {
  // p1 is transmitted: the direct support pairs it with k1, the exchange
  // support with k2.
  return {t_r(p, k1) * r_r(p, k2), t_r(p, k2) * r_r(p, k1),
          interaction_weight(p, kTR, p1, p2, k1, k2)};
}

TwoPhotonKernel smatrix2(const SystemParams& p, ChannelPair pair, double p1, double p2, double k1,
                         double k2) {
  if (pair.a == Channel::Transmit && pair.b == Channel::Transmit) {
    return smatrix2_tt(p, p1, p2, k1, k2);
  }
  if (pair.a == Channel::Reflect && pair.b == Channel::Reflect) {
    return smatrix2_rr(p, p1, p2, k1, k2);
  }
  return smatrix2_tr(p, p1, p2, k1, k2);
}

}  // namespace gatom
