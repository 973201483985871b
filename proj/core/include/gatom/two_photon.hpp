#pragma once

#include <complex>

#include "gatom/scattering.hpp"

namespace gatom {

// Constants of the two-photon bound-state term. Every single-photon
// reflection amplitude is r_r(k) = residue/(k + pole); the bound state decays
// in the detection-time difference at rate Im(pole) = total_decay.
struct NonlinearConstants {
  cplx pole;  // C
  cplx residue;  // D
  cplx b_tt;  // both photons transmitted
  cplx b_rr;  // both reflected
  cplx b_tr;  // one transmitted (first argument), one reflected
};

// Throws DecoupledPoint when |g1 + g2 e^{i phi0}| is negligible: the b
// coefficients are singular there while every physical kernel vanishes.
NonlinearConstants nonlinear_constants(const SystemParams& p);

struct ChannelPair {
  Channel a;
  Channel b;
};
inline constexpr ChannelPair kTT{Channel::Transmit, Channel::Transmit};
inline constexpr ChannelPair kRR{Channel::Reflect, Channel::Reflect};
inline constexpr ChannelPair kTR{Channel::Transmit, Channel::Reflect};

cplx bound_state_coefficient(const NonlinearConstants& c, ChannelPair pair);

// Two-photon scattering element for incoming momenta (k1, k2) and outgoing
// (p1, p2), decomposed so the delta-function supports stay symbolic:
//   elastic_direct   multiplies delta(p1 - k1) delta(p2 - k2)
//   elastic_exchange multiplies delta(p1 - k2) delta(p2 - k1)
//   interaction      multiplies delta(p1 + p2 - k1 - k2) and is smooth.
// For mixed channels p1 is the transmitted output, p2 the reflected one.
struct TwoPhotonKernel {
  cplx elastic_direct;
  cplx elastic_exchange;
  cplx interaction;
};

TwoPhotonKernel smatrix2_tt(const SystemParams& p, double p1, double p2, double k1, double k2);
TwoPhotonKernel smatrix2_rr(const SystemParams& p, double p1, double p2, double k1, double k2);
TwoPhotonKernel smatrix2_tr(const SystemParams& p, double p1, double p2, double k1, double k2);
TwoPhotonKernel smatrix2(const SystemParams& p, ChannelPair pair, double p1, double p2, double k1,
                         double k2);

// The smooth interaction weight alone (the `interaction` member above).
cplx interaction_weight(const SystemParams& p, ChannelPair pair, double p1, double p2, double k1,
                        double k2);

}  // namespace gatom
