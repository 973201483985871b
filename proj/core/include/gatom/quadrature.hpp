#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gatom/errors.hpp"
#include "gatom/pulse.hpp"

namespace gatom {

struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  // Half-width of the integration window [-truncation, truncation].
  // Non-positive means "caller resolves a default first".
  double truncation = 0.0;
  int max_subdivisions = 2000;
  // Interior points marking narrow features (pulse support, resonances).
  // integrate()/integrate_simpson() seed their initial partition here so a
  // feature much narrower than the window cannot slip between the nodes of
  // a single wide panel and fake instant convergence. Points outside the
  // window are ignored.
  std::vector<double> breakpoints;
};

struct QuadResult {
  std::complex<double> value;
  double err_estimate;
  int subdivisions;
};

using Integrand = std::function<std::complex<double>(double)>;

// Globally adaptive Gauss-Kronrod (G7,K15) over [-truncation, truncation].
// Bisects the interval with the largest error estimate until the summed
// estimate meets max(abs_tol, rel_tol*|value|); throws NonConvergence (with
// the best estimate attached) if max_subdivisions is exhausted first.
QuadResult integrate(const Integrand& f, const QuadSpec& spec);

// Same contract on an explicit interval.
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadSpec& spec);

// Second, independent rule (adaptive Simpson with Richardson error control);
// distinct node family from the Gauss-Kronrod engine, used for cross-checks.
QuadResult integrate_simpson(const Integrand& f, const QuadSpec& spec);

// Window half-width that keeps both the pulse spectrum and the scattering
// pole structure inside: max(10/width, |Re C| + 20 |Im C|) for the output
// pole at k = -C.
double default_truncation(const GaussianPulse& pulse, std::complex<double> pole);

}  // namespace gatom
