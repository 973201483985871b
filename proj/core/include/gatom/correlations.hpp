#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gatom/pulse.hpp"
#include "gatom/quadrature.hpp"
#include "gatom/two_photon.hpp"

namespace gatom {

struct CorrelationOptions {
  QuadSpec quad;  // quad.truncation <= 0 resolves via default_truncation
  int threads = 0;  // 0 -> hardware concurrency
  // kappa policy: 0 -> calibrate numerically, fall back to sqrt(2) when all
  // probes are degenerate; nonzero -> use as-is.
  cplx kappa = 0.0;
  double masked_fraction_tolerance = 0.01;
};

// Single-photon output amplitude in channel c at detection time t.
cplx psi1(const SystemParams& p, const GaussianPulse& pulse, Channel c, double t,
          const QuadSpec& spec = {});

// |psi1|^2.
double intensity(const SystemParams& p, const GaussianPulse& pulse, Channel c, double t,
                 const QuadSpec& spec = {});

// Bound-state contribution to the two-photon amplitude at detection times
// (t, t + dt). Exactly zero at a decoupled point.
cplx nonlinear_term(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair, double t,
                    double dt, const QuadSpec& spec = {});

// Full two-photon output amplitude at (t1, t2); channel pair.a detects at t1,
// pair.b at t2.
cplx psi2(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair, double t1, double t2,
          const QuadSpec& spec = {});

// psi2 at large |t2 - t1| factorizes into kappa * psi1(t1) * psi1(t2); this
// measures kappa from probe pairs separated by max(20 lifetimes, 4 pulse
// widths). Throws DegenerateProbe when every probe amplitude is below 1e-9.
cplx calibrate_kappa(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair,
                     const QuadSpec& spec = {});

// |psi2|^2, unnormalized.
double g2_unnormalized(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair,
                       double t1, double t2, const QuadSpec& spec = {});

// g2/|kappa|^2 - I_a(t1) I_b(t2): zero for a coherent (non-interacting)
// output, positive where photon pairs bunch, negative where they antibunch.
double c2_normalized(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair, double t1,
                     double t2, cplx kappa, const QuadSpec& spec = {});

struct CorrelationGrid {
  std::vector<double> t1_axis;
  std::vector<double> t2_axis;
  // Row-major over (t1, t2): index i1 * t2_axis.size() + i2.
  std::vector<cplx> psi2;
  std::vector<double> g2;
  std::vector<double> c2;
  std::vector<double> intensity_product;
  std::vector<std::uint8_t> masked;
  SystemParams params;
  GaussianPulse pulse;
  ChannelPair pair;
  cplx kappa;
  std::size_t masked_count = 0;

  std::size_t index(std::size_t i1, std::size_t i2) const { return i1 * t2_axis.size() + i2; }
};

// Fills the grid from cached one-dimensional integrals (one per distinct time
// per channel), so the cost is linear in axis length. Per-point quadrature
// failures mask that point; more than masked_fraction_tolerance masked points
// raises MaskedGridError. Results do not depend on the thread count.
CorrelationGrid compute_grid(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair,
                             std::vector<double> t1_axis, std::vector<double> t2_axis,
                             const CorrelationOptions& opt = {});

std::vector<double> linspace(double lo, double hi, std::size_t n);

struct DiagonalTrace {
  std::vector<double> t;
  std::vector<double> c2;
  std::vector<double> intensity_product;
};

// Equal-time cut of a grid with identical axes.
DiagonalTrace diagonal_trace(const CorrelationGrid& grid);

struct RatioEntry {
  double ratio;  // pulse width over lifetime
  SystemParams params;
  CorrelationGrid grid;
};

// Rescales |g1|, |g2| by a common factor so width/lifetime hits each ratio,
// retunes delta to resonance, and computes the grid. Coupling phases, their
// magnitude ratio, phi0 and the pulse stay fixed.
std::vector<RatioEntry> ratio_sweep(const SystemParams& base, const GaussianPulse& pulse,
                                    ChannelPair pair, const std::vector<double>& ratios,
                                    std::vector<double> t_axis, const CorrelationOptions& opt = {});

struct PhaseSweep {
  std::vector<double> phi_axis;
  std::vector<double> dt_axis;
  // Row-major over (phi0, dt); c2 along the cut t1 + t2 = cut_sum.
  std::vector<double> c2;
  std::vector<std::uint8_t> masked;
  std::vector<cplx> kappas;  // one per phi point
  double cut_sum;

  std::size_t index(std::size_t i, std::size_t j) const { return i * dt_axis.size() + j; }
  // Equal-time slice (dt = 0 column) — requires dt_axis to contain 0.
  std::vector<double> equal_time() const;
};

// Sweeps phi0 at fixed coupling magnitudes, retuning delta to resonance at
// every step, and evaluates c2 along the detection cut t1 + t2 = cut_sum.
PhaseSweep phase_sweep(const SystemParams& base, const GaussianPulse& pulse, ChannelPair pair,
                       const std::vector<double>& phi_axis, double cut_sum,
                       const std::vector<double>& dt_axis, const CorrelationOptions& opt = {});

}  // namespace gatom
