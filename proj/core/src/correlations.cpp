#include "gatom/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>

namespace gatom {

namespace {

constexpr double kPi = 3.141592653589793238462643383280;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt2Pi = std::sqrt(2.0 * kPi);
constexpr double kProbeFloor = 1e-9;

QuadSpec resolve(const SystemParams& p, const GaussianPulse& pulse, QuadSpec spec) {
  const cplx pole = denominator(p, 0.0);
  if (!(spec.truncation > 0.0)) {
    spec.truncation = default_truncation(pulse, pole);
  }
  // Mark the two narrow features every integrand here shares, so the seeded
  // partition cannot miss them inside a wide window: the pulse spectrum at
  // k = 0 (width 1/pulse.width) and the emitter resonance at k = -Re(pole)
  // (width Im(pole)). Only when the caller supplied none, which also keeps
  // the nested resolve() calls idempotent.
  if (spec.breakpoints.empty()) {
    const double sk = 1.0 / pulse.width;
    const double k0 = -pole.real();
    const double gw = std::max(pole.imag(), 1e-3 * sk);
    spec.breakpoints.push_back(0.0);
    spec.breakpoints.push_back(k0);
    for (double s : {2.0, 5.0, 10.0}) {
      spec.breakpoints.push_back(s * sk);
      spec.breakpoints.push_back(-s * sk);
    }
    for (double s : {1.0, 4.0, 16.0}) {
      spec.breakpoints.push_back(k0 + s * gw);
      spec.breakpoints.push_back(k0 - s * gw);
    }
  }
  return spec;
}

cplx w_integral(const SystemParams& p, const GaussianPulse& pulse, Channel c, double t,
                const QuadSpec& spec) {
  return integrate(
             [&](double k) {
               return spectral_amplitude(pulse, k) * std::exp(cplx(0.0, -k * t)) * chi(p, c, k);
             },
             spec)
      .value;
}

cplx j_integral(const SystemParams& p, const GaussianPulse& pulse, double t, const QuadSpec& spec) {
  return integrate(
             [&](double k) {
               return spectral_amplitude(pulse, k) * std::exp(cplx(0.0, -k * t)) * r_r(p, k);
             },
             spec)
      .value;
}

// Coefficient multiplying e^{i C |dt|} J(min(t1,t2))^2 in the bound-state
// term; zero at a decoupled point (where the b coefficients are singular but
// the physical product vanishes).
cplx bound_state_prefactor(const SystemParams& p, ChannelPair pair) {
  if (right_decoupled(p)) return 0.0;
  NonlinearConstants nc = nonlinear_constants(p);
  return cplx(0.0, -1.0) * nc.residue * bound_state_coefficient(nc, pair) / kSqrt2;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nt = threads > 0 ? static_cast<std::size_t>(threads) : (hw ? hw : 1);
  nt = std::min<std::size_t>(nt, n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      std::size_t lo = t * n / nt, hi = (t + 1) * n / nt;
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

using Table = std::vector<std::optional<cplx>>;

Table tabulate(const SystemParams& p, const GaussianPulse& pulse,
               const std::vector<double>& times, const QuadSpec& spec, int threads,
               const std::function<cplx(double)>& eval) {
  Table out(times.size());
  parallel_for(times.size(), threads, [&](std::size_t i) {
    try {
      out[i] = eval(times[i]);
    } catch (const NonConvergence&) {
      out[i] = std::nullopt;
    }
  });
  return out;
}

}  // namespace

cplx psi1(const SystemParams& p, const GaussianPulse& pulse, Channel c, double t,
          const QuadSpec& spec) {
  return w_integral(p, pulse, c, t, resolve(p, pulse, spec)) / kSqrt2Pi;
}

double intensity(const SystemParams& p, const GaussianPulse& pulse, Channel c, double t,
                 const QuadSpec& spec) {
  return std::norm(psi1(p, pulse, c, t, spec));
}

cplx nonlinear_term(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair, double t,
                    double dt, const QuadSpec& spec0) {
  cplx pref = bound_state_prefactor(p, pair);
  if (pref == cplx(0.0, 0.0)) return 0.0;
  QuadSpec spec = resolve(p, pulse, spec0);
  const cplx pole = denominator(p, 0.0);
  const double start = t + dt / 2.0 - std::abs(dt) / 2.0;  // min(t, t + dt)
  const cplx j = j_integral(p, pulse, start, spec);
  return pref * std::exp(cplx(0.0, 1.0) * pole * std::abs(dt)) * j * j;
}

cplx psi2(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair, double t1, double t2,
          const QuadSpec& spec0) {
  QuadSpec spec = resolve(p, pulse, spec0);
  const cplx wa = w_integral(p, pulse, pair.a, t1, spec);
  const cplx wb = w_integral(p, pulse, pair.b, t2, spec);
  return wa * wb / (kSqrt2 * kPi) + nonlinear_term(p, pulse, pair, t1, t2 - t1, spec);
}

namespace {

double probe_separation(const SystemParams& p, const GaussianPulse& pulse) {
  const double gam = total_decay(p);
  const double by_life = gam > 0.0 ? 20.0 / gam : 0.0;
  return std::max(by_life, 4.0 * pulse.width);
}

}  // namespace

cplx calibrate_kappa(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair,
                     const QuadSpec& spec0) {
  QuadSpec spec = resolve(p, pulse, spec0);
  const double sep = probe_separation(p, pulse);
  cplx sum = 0.0;
  int used = 0;
  for (double off : {-2.75, -2.5, -2.25}) {
    const double t1 = pulse.center_time + off * pulse.width;
    const double t2 = t1 + sep;
    const cplx a = psi1(p, pulse, pair.a, t1, spec);
    const cplx b = psi1(p, pulse, pair.b, t2, spec);
    if (std::abs(a) < kProbeFloor || std::abs(b) < kProbeFloor) continue;
    sum += psi2(p, pulse, pair, t1, t2, spec) / (a * b);
    ++used;
  }
  if (used == 0) {
    throw DegenerateProbe("all factorization probe amplitudes below the resolvable floor");
  }
  return sum / static_cast<double>(used);
}

double g2_unnormalized(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair,
                       double t1, double t2, const QuadSpec& spec) {
  return std::norm(psi2(p, pulse, pair, t1, t2, spec));
}

double c2_normalized(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair, double t1,
                     double t2, cplx kappa, const QuadSpec& spec0) {
  QuadSpec spec = resolve(p, pulse, spec0);
  return g2_unnormalized(p, pulse, pair, t1, t2, spec) / std::norm(kappa) -
         intensity(p, pulse, pair.a, t1, spec) * intensity(p, pulse, pair.b, t2, spec);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

CorrelationGrid compute_grid(const SystemParams& p, const GaussianPulse& pulse, ChannelPair pair,
                             std::vector<double> t1_axis, std::vector<double> t2_axis,
                             const CorrelationOptions& opt) {
  QuadSpec spec = resolve(p, pulse, opt.quad);

  cplx kappa = opt.kappa;
  if (kappa == cplx(0.0, 0.0)) {
    try {
      kappa = calibrate_kappa(p, pulse, pair, spec);
    } catch (const DegenerateProbe&) {
      kappa = kSqrt2;  // exact in the factorized regimes that defeat the probes
    } catch (const NonConvergence&) {
      // Near decoupling the probe separation 20/Gamma explodes and the probe
      // integrals become numerically hopeless; the limit value is exact there.
      kappa = kSqrt2;
    }
  }

  const cplx pole = denominator(p, 0.0);
  const cplx pref = bound_state_prefactor(p, pair);

  auto wa_eval = [&](double t) { return w_integral(p, pulse, pair.a, t, spec); };
  auto wb_eval = [&](double t) { return w_integral(p, pulse, pair.b, t, spec); };
  auto j_eval = [&](double t) { return j_integral(p, pulse, t, spec); };

  Table wa = tabulate(p, pulse, t1_axis, spec, opt.threads, wa_eval);
  Table wb = tabulate(p, pulse, t2_axis, spec, opt.threads, wb_eval);
  Table j1, j2;
  if (pref != cplx(0.0, 0.0)) {
    j1 = tabulate(p, pulse, t1_axis, spec, opt.threads, j_eval);
    j2 = tabulate(p, pulse, t2_axis, spec, opt.threads, j_eval);
  }

  const std::size_t n1 = t1_axis.size(), n2 = t2_axis.size();
  CorrelationGrid grid{std::move(t1_axis), std::move(t2_axis),
                       std::vector<cplx>(n1 * n2),        std::vector<double>(n1 * n2),
                       std::vector<double>(n1 * n2),      std::vector<double>(n1 * n2),
                       std::vector<std::uint8_t>(n1 * n2), p,
                       pulse,                             pair,
                       kappa};

  const double inv_kappa2 = 1.0 / std::norm(kappa);
  parallel_for(n1, opt.threads, [&](std::size_t i) {
    const double t1 = grid.t1_axis[i];
    for (std::size_t jj = 0; jj < n2; ++jj) {
      const double t2 = grid.t2_axis[jj];
      const std::size_t idx = grid.index(i, jj);
      std::optional<cplx> jm;
      if (pref != cplx(0.0, 0.0)) {
        jm = t1 <= t2 ? j1[i] : j2[jj];
      } else {
        jm = cplx(0.0, 0.0);
      }
      if (!wa[i] || !wb[jj] || !jm) {
        grid.masked[idx] = 1;
        continue;
      }
      cplx n = pref == cplx(0.0, 0.0)
                   ? cplx(0.0, 0.0)
                   : pref * std::exp(cplx(0.0, 1.0) * pole * std::abs(t2 - t1)) * (*jm) * (*jm);
      const cplx amp = (*wa[i]) * (*wb[jj]) / (kSqrt2 * kPi) + n;
      const double ip = std::norm(*wa[i]) * std::norm(*wb[jj]) / (4.0 * kPi * kPi);
      grid.psi2[idx] = amp;
      grid.g2[idx] = std::norm(amp);
      grid.c2[idx] = std::norm(amp) * inv_kappa2 - ip;
      grid.intensity_product[idx] = ip;
    }
  });

  grid.masked_count = static_cast<std::size_t>(
      std::count(grid.masked.begin(), grid.masked.end(), std::uint8_t{1}));
  if (grid.masked_count >
      opt.masked_fraction_tolerance * static_cast<double>(grid.masked.size())) {
    throw MaskedGridError("too many grid points failed to converge", grid.masked_count,
                          grid.masked.size());
  }
  return grid;
}

DiagonalTrace diagonal_trace(const CorrelationGrid& grid) {
  if (grid.t1_axis != grid.t2_axis) {
    throw InvalidParams("diagonal trace requires identical grid axes");
  }
  DiagonalTrace tr;
  tr.t = grid.t1_axis;
  tr.c2.resize(tr.t.size());
  tr.intensity_product.resize(tr.t.size());
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    tr.c2[i] = grid.c2[grid.index(i, i)];
    tr.intensity_product[i] = grid.intensity_product[grid.index(i, i)];
  }
  return tr;
}

std::vector<RatioEntry> ratio_sweep(const SystemParams& base, const GaussianPulse& pulse,
                                    ChannelPair pair, const std::vector<double>& ratios,
                                    std::vector<double> t_axis, const CorrelationOptions& opt) {
  const double gam0 = total_decay(base);
  if (!(gam0 > 0.0)) {
    throw InvalidParams("ratio sweep needs a decaying base parameter set");
  }
  std::vector<RatioEntry> out;
  out.reserve(ratios.size());
  for (double ratio : ratios) {
    if (!(ratio > 0.0)) throw InvalidParams("width/lifetime ratios must be positive");
    const double scale = std::sqrt(ratio / pulse.width / gam0);
    SystemParams p = with_resonant_detuning(
        SystemParams(base.g1 * scale, base.g2 * scale, base.phi0, 0.0));
    out.push_back({ratio, p, compute_grid(p, pulse, pair, t_axis, t_axis, opt)});
  }
  return out;
}

std::vector<double> PhaseSweep::equal_time() const {
  const double span = std::abs(dt_axis.back() - dt_axis.front());
  std::size_t j0 = dt_axis.size();
  for (std::size_t j = 0; j < dt_axis.size(); ++j) {
    if (std::abs(dt_axis[j]) <= 1e-9 * std::max(span, 1.0)) {
      j0 = j;
      break;
    }
  }
  if (j0 == dt_axis.size()) throw InvalidParams("dt axis does not contain 0");
  std::vector<double> out(phi_axis.size());
  for (std::size_t i = 0; i < phi_axis.size(); ++i) out[i] = c2[index(i, j0)];
  return out;
}

PhaseSweep phase_sweep(const SystemParams& base, const GaussianPulse& pulse, ChannelPair pair,
                       const std::vector<double>& phi_axis, double cut_sum,
                       const std::vector<double>& dt_axis, const CorrelationOptions& opt) {
  PhaseSweep sweep;
  sweep.phi_axis = phi_axis;
  sweep.dt_axis = dt_axis;
  sweep.cut_sum = cut_sum;
  sweep.c2.assign(phi_axis.size() * dt_axis.size(), 0.0);
  sweep.masked.assign(phi_axis.size() * dt_axis.size(), 0);
  sweep.kappas.assign(phi_axis.size(), 0.0);

  std::vector<double> t1s(dt_axis.size()), t2s(dt_axis.size());
  for (std::size_t j = 0; j < dt_axis.size(); ++j) {
    t1s[j] = (cut_sum + dt_axis[j]) / 2.0;
    t2s[j] = (cut_sum - dt_axis[j]) / 2.0;
  }

  for (std::size_t i = 0; i < phi_axis.size(); ++i) {
    SystemParams p = with_resonant_detuning(SystemParams(base.g1, base.g2, phi_axis[i], 0.0));
    QuadSpec spec = resolve(p, pulse, opt.quad);

    cplx kappa = opt.kappa;
    if (kappa == cplx(0.0, 0.0)) {
      try {
        kappa = calibrate_kappa(p, pulse, pair, spec);
      } catch (const DegenerateProbe&) {
        kappa = kSqrt2;
      } catch (const NonConvergence&) {
        kappa = kSqrt2;  // probe separation 20/Gamma is unresolvable near decoupling
      }
    }
    sweep.kappas[i] = kappa;
    const double inv_kappa2 = 1.0 / std::norm(kappa);
    const cplx pole = denominator(p, 0.0);
    const cplx pref = bound_state_prefactor(p, pair);

    Table wa = tabulate(p, pulse, t1s, spec, opt.threads,
                        [&](double t) { return w_integral(p, pulse, pair.a, t, spec); });
    Table wb = tabulate(p, pulse, t2s, spec, opt.threads,
                        [&](double t) { return w_integral(p, pulse, pair.b, t, spec); });
    Table jm(dt_axis.size(), cplx(0.0, 0.0));
    if (pref != cplx(0.0, 0.0)) {
      std::vector<double> tmins(dt_axis.size());
      for (std::size_t j = 0; j < dt_axis.size(); ++j) tmins[j] = std::min(t1s[j], t2s[j]);
      jm = tabulate(p, pulse, tmins, spec, opt.threads,
                    [&](double t) { return j_integral(p, pulse, t, spec); });
    }

    for (std::size_t j = 0; j < dt_axis.size(); ++j) {
      const std::size_t idx = sweep.index(i, j);
      if (!wa[j] || !wb[j] || !jm[j]) {
        sweep.masked[idx] = 1;
        continue;
      }
      cplx n = pref == cplx(0.0, 0.0)
                   ? cplx(0.0, 0.0)
                   : pref * std::exp(cplx(0.0, 1.0) * pole * std::abs(dt_axis[j])) * (*jm[j]) *
                         (*jm[j]);
      const cplx amp = (*wa[j]) * (*wb[j]) / (kSqrt2 * kPi) + n;
      sweep.c2[idx] = std::norm(amp) * inv_kappa2 -
                      std::norm(*wa[j]) * std::norm(*wb[j]) / (4.0 * kPi * kPi);
    }
  }
  return sweep;
}

}  // namespace gatom
