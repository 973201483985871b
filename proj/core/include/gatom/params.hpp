#pragma once

#include <complex>

#include "gatom/errors.hpp"

namespace gatom {

using cplx = std::complex<double>;

// A two-level emitter coupled to a bidirectional line at two points.
// g1, g2 are the coupling amplitudes at the two points, phi0 the propagation
// phase accumulated between them, delta the drive detuning from the bare
// transition. Couplings may be complex; phi0 is stored normalized to [0, 2pi).
struct SystemParams {
  cplx g1;
  cplx g2;
  double phi0;
  double delta;

  SystemParams(cplx g1, cplx g2, double phi0, double delta);
};

// 2pi(|g1|^2 + |g2|^2) + 4pi Re(g1 conj(g2)) cos(phi0). Non-negative for any
// parameter set; zero only when the emitter decouples from both directions.
double total_decay(const SystemParams& p);

// 1/total_decay. Throws InvalidParams at a decay-free point.
double lifetime(const SystemParams& p);

// Detuning that centers the pulse on the dressed resonance:
// delta = -4pi Re(g1 conj(g2)) sin(phi0).
double resonant_detuning(const SystemParams& p);

SystemParams with_resonant_detuning(SystemParams p);

// Conversion between physical units (ns, MHz with 1 MHz = 1e-3/ns) and the
// dimensionless internal units used by the computations. time_unit is the
// number of ns per internal time unit; frequency_unit the number of internal
// rate units per 1/ns. Their product is 1 by construction.
struct UnitSystem {
  double time_unit;
  double frequency_unit;

  explicit UnitSystem(double time_unit_ns);

  double to_internal_time(double ns) const { return ns / time_unit; }
  double to_ns(double t) const { return t * time_unit; }
  double to_internal_rate(double mhz) const { return mhz * 1e-3 * time_unit; }
  double to_mhz(double rate) const { return rate / time_unit * 1e3; }
  double to_mhz2(double rate_sq) const { return rate_sq / (time_unit * time_unit) * 1e6; }
};

}  // namespace gatom
