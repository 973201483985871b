#pragma once

#include <complex>

#include "gatom/errors.hpp"

namespace gatom {

// Weak coherent Gaussian drive. width is the temporal standard-deviation
// scale delta_t, center_time its arrival time, alpha the coherent amplitude
// (carried through to output manifests; the per-photon amplitudes computed
// here do not depend on it).
struct GaussianPulse {
  double width;
  double center_time;
  double alpha;

  GaussianPulse(double width, double center_time, double alpha);
};

// f(k) = (width^2/pi)^{1/4} exp(-k^2 width^2 / 2) exp(i k center_time).
// Unit L2 norm over k.
std::complex<double> spectral_amplitude(const GaussianPulse& pulse, double k);

// Fourier pair of f(k): (pi width^2)^{-1/4} exp(-(t-center_time)^2/(2 width^2)).
std::complex<double> temporal_profile(const GaussianPulse& pulse, double t);

}  // namespace gatom
