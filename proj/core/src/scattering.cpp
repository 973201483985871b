#include "gatom/scattering.hpp"

#include <cmath>

namespace gatom {

namespace {

constexpr double kPi = 3.141592653589793238462643383280;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

cplx phase(double phi) { return std::exp(cplx(0.0, phi)); }

// Effective couplings seen by right- and left-propagating photons.
cplx coupling_r(const SystemParams& p) { return p.g1 + p.g2 * phase(p.phi0); }
cplx coupling_l(const SystemParams& p) { return p.g1 + p.g2 * phase(-p.phi0); }

bool negligible(cplx g, const SystemParams& p) {
  return std::abs(g) <= 1e-12 * (std::abs(p.g1) + std::abs(p.g2));
}

}  // namespace

bool right_decoupled(const SystemParams& p) { return negligible(coupling_r(p), p); }
bool left_decoupled(const SystemParams& p) { return negligible(coupling_l(p), p); }

cplx denominator(const SystemParams& p, double k) {
  return k - p.delta + cplx(0.0, 2.0 * kPi) * (std::norm(p.g1) + std::norm(p.g2)) +
         cplx(0.0, 4.0 * kPi) * std::real(p.g1 * std::conj(p.g2)) * phase(p.phi0);
}

cplx s_r(const SystemParams& p, double k) {
  if (right_decoupled(p)) return 0.0;
  return kSqrt2Pi * coupling_r(p) / denominator(p, k);
}

cplx s_l(const SystemParams& p, double k) {
  if (left_decoupled(p)) return 0.0;
  return kSqrt2Pi * coupling_l(p) / denominator(p, k);
}

cplx t_r(const SystemParams& p, double k) {
  // When the right-movers decouple the numerator equals the denominator
  // identically; return the exact limit rather than a 0/0 at the pole.
  if (right_decoupled(p)) return 1.0;
  return (k - p.delta - 4.0 * kPi * p.g1 * std::conj(p.g2) * std::sin(p.phi0)) / denominator(p, k);
}

cplx r_r(const SystemParams& p, double k) {
  if (right_decoupled(p)) return 0.0;
  cplx num = cplx(0.0, -2.0 * kPi) *
             (std::norm(p.g1) + std::norm(p.g2) * phase(2.0 * p.phi0) +
              2.0 * std::real(p.g1 * std::conj(p.g2)) * phase(p.phi0));
  return num / denominator(p, k);
}

cplx t_l(const SystemParams& p, double k) {
  if (left_decoupled(p)) return 1.0;
  return (k - p.delta - 4.0 * kPi * std::conj(p.g1) * p.g2 * std::sin(p.phi0)) / denominator(p, k);
}

cplx r_l(const SystemParams& p, double k) {
  if (left_decoupled(p)) return 0.0;
  cplx num = cplx(0.0, -2.0 * kPi) *
             (std::norm(p.g1) + std::norm(p.g2) * phase(-2.0 * p.phi0) +
              2.0 * std::real(p.g1 * std::conj(p.g2)) * phase(-p.phi0));
  return num / denominator(p, k);
}

cplx chi(const SystemParams& p, Channel c, double k) {
  return c == Channel::Transmit ? t_r(p, k) : r_r(p, k);
}

}  // namespace gatom
