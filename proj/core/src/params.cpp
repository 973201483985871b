#include "gatom/params.hpp"

#include <cmath>

namespace gatom {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

SystemParams::SystemParams(cplx g1_, cplx g2_, double phi0_, double delta_)
    : g1(g1_), g2(g2_), phi0(phi0_), delta(delta_) {
  if (!finite(g1) || !finite(g2) || !std::isfinite(phi0) || !std::isfinite(delta)) {
    throw InvalidParams("system parameters must be finite");
  }
  if (g1 == cplx(0.0, 0.0) && g2 == cplx(0.0, 0.0)) {
    throw InvalidParams("at least one coupling must be nonzero");
  }
  phi0 = std::fmod(phi0, kTwoPi);
  if (phi0 < 0.0) phi0 += kTwoPi;
}

double total_decay(const SystemParams& p) {
  const double pi = kTwoPi / 2.0;
  double g = 2.0 * pi * (std::norm(p.g1) + std::norm(p.g2)) +
             4.0 * pi * std::real(p.g1 * std::conj(p.g2)) * std::cos(p.phi0);
  // Non-negative for any parameters; clamp the roundoff of exact zeros.
  return g < 0.0 && g > -1e-15 * (std::norm(p.g1) + std::norm(p.g2)) ? 0.0 : g;
}

double lifetime(const SystemParams& p) {
  double g = total_decay(p);
  if (g <= 0.0) throw InvalidParams("lifetime undefined: emitter does not decay");
  return 1.0 / g;
}

double resonant_detuning(const SystemParams& p) {
  const double pi = kTwoPi / 2.0;
  return -4.0 * pi * std::real(p.g1 * std::conj(p.g2)) * std::sin(p.phi0);
}

SystemParams with_resonant_detuning(SystemParams p) {
  p.delta = resonant_detuning(p);
  return p;
}

UnitSystem::UnitSystem(double time_unit_ns) : time_unit(time_unit_ns), frequency_unit(1.0 / time_unit_ns) {
  if (!(time_unit > 0.0) || !std::isfinite(time_unit)) {
    throw InvalidParams("time unit must be positive and finite");
  }
}

}  // namespace gatom
