#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gatom/correlations.hpp"

namespace gatom {

struct OracleReport {
  std::string name;
  bool pass;
  double max_dev;
  double tolerance;
  long samples;
  std::uint64_t seed;
  std::string detail;
};

// Random parameter draws shared by the checks: |g| log-uniform so each
// partial decay 2pi|g|^2 spans 0.5..20 MHz in ns units, coupling phases and
// phi0 uniform, delta cycling {0, resonant, uniform within +-10 total_decay}.
SystemParams draw_params(std::mt19937_64& rng);
double draw_k(std::mt19937_64& rng, const SystemParams& p);

// |t|^2 + |r|^2 = 1 for both incidence directions.
OracleReport check_unitarity(long n_param_sets, long n_k_per_set, std::uint64_t seed);

// r_r(k) == residue/(k + pole) with the constants reported by
// nonlinear_constants.
OracleReport check_pole_form(const SystemParams& p, long n_k, std::uint64_t seed);

// At phi0 = 0 the two coupling points fuse: amplitudes and the two-photon
// interaction weight must match a single-point emitter with coupling g1 + g2.
OracleReport check_smallatom_reduction(const SystemParams& p, long n_k, std::uint64_t seed);

// Frequency-sum integral of two reflection amplitudes against its closed
// form, on an (omega, dt) grid. The truncated window is augmented with an
// asymptotic tail correction and validated by a 1.5x window self-test before
// the comparison is trusted.
OracleReport check_contour_identity(const SystemParams& p, int n_omega, int n_dt);

// psi2 -> kappa psi1 psi1 at probe separations {10, 20, 40} lifetimes;
// deviation must shrink monotonically and be below 1e-3 at 20 lifetimes.
OracleReport check_factorization(const SystemParams& p, const GaussianPulse& pulse,
                                 ChannelPair pair);

// Algebraic identities tying the excitation amplitude to t/r amplitudes.
OracleReport check_identity_suite(long n_param_sets, std::uint64_t seed);

std::vector<OracleReport> run_all_checks(std::uint64_t seed);

}  // namespace gatom
