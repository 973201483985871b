#pragma once

#include <complex>

#include "gatom/params.hpp"

namespace gatom {

enum class Channel { Transmit, Reflect };

// True when the emitter decouples from right-movers (|g1 + g2 e^{i phi0}| ~ 0)
// or left-movers (|g1 + g2 e^{-i phi0}| ~ 0). At such points the amplitudes
// below return their exact limits (t = 1, r = 0, s = 0) instead of evaluating
// a 0/0 form.
bool right_decoupled(const SystemParams& p);
bool left_decoupled(const SystemParams& p);

// k - delta + 2pi i(|g1|^2+|g2|^2) + 4pi i Re(g1 conj(g2)) e^{i phi0};
// shared by every single-photon amplitude. Equal to k + C with C the pole
// offset reported by nonlinear_constants.
cplx denominator(const SystemParams& p, double k);

// Excitation amplitudes for right/left incidence.
cplx s_r(const SystemParams& p, double k);
cplx s_l(const SystemParams& p, double k);

// Transmission and reflection for right incidence.
cplx t_r(const SystemParams& p, double k);
cplx r_r(const SystemParams& p, double k);

// Left incidence.
cplx t_l(const SystemParams& p, double k);
cplx r_l(const SystemParams& p, double k);

// Output filter for right incidence: Transmit -> t_r, Reflect -> r_r.
cplx chi(const SystemParams& p, Channel c, double k);

}  // namespace gatom
