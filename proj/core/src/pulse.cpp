#include "gatom/pulse.hpp"

#include <cmath>

namespace gatom {

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
}

GaussianPulse::GaussianPulse(double width_, double center_time_, double alpha_)
    : width(width_), center_time(center_time_), alpha(alpha_) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw InvalidParams("pulse width must be positive and finite");
  }
  if (!std::isfinite(center_time) || !std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidParams("pulse center and amplitude must be finite, amplitude non-negative");
  }
}

std::complex<double> spectral_amplitude(const GaussianPulse& p, double k) {
  double mag = std::pow(p.width * p.width / kPi, 0.25) * std::exp(-k * k * p.width * p.width / 2.0);
  return mag * std::exp(std::complex<double>(0.0, k * p.center_time));
}

std::complex<double> temporal_profile(const GaussianPulse& p, double t) {
  double u = t - p.center_time;
  return std::pow(kPi * p.width * p.width, -0.25) * std::exp(-u * u / (2.0 * p.width * p.width));
}

}  // namespace gatom
