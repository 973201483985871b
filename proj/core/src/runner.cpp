#include "gatom/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "gatom/outputs.hpp"

namespace gatom {

namespace {

constexpr double kPi = 3.141592653589793238462643383280;

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

SystemParams build_params(const RunConfig& cfg, const UnitSystem& units) {
  const double gam1 = units.to_internal_rate(cfg.gamma1_mhz);
  const double gam2 = units.to_internal_rate(cfg.gamma2_mhz);
  const cplx g1 = std::polar(std::sqrt(gam1 / (2.0 * kPi)), cfg.coupling_phase1);
  const cplx g2 = std::polar(std::sqrt(gam2 / (2.0 * kPi)), cfg.coupling_phase2);
  SystemParams p(g1, g2, cfg.phi0, units.to_internal_rate(cfg.delta_mhz));
  if (cfg.delta_resonant) p = with_resonant_detuning(p);
  return p;
}

CorrelationOptions build_options(const RunConfig& cfg) {
  CorrelationOptions opt;
  opt.quad.abs_tol = cfg.abs_tol;
  opt.quad.rel_tol = cfg.rel_tol;
  opt.quad.max_subdivisions = cfg.max_subdivisions;
  opt.quad.truncation = cfg.truncation;
  opt.threads = cfg.threads;
  return opt;
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void emit(RunResult& result, std::ostream& log, const std::string& path,
          const std::string& content) {
  write_text_atomic(path, content);
  result.files.push_back(path);
  log << "wrote " << path << '\n';
}

double resolved_truncation(const RunConfig& cfg, const SystemParams& p,
                           const GaussianPulse& pulse) {
  return cfg.truncation > 0.0 ? cfg.truncation : default_truncation(pulse, denominator(p, 0.0));
}

}  // namespace

RunResult run(const RunConfig& cfg, std::ostream& log) {
  RunResult result;
  const UnitSystem units(cfg.width_ns);
  const SystemParams params = build_params(cfg, units);
  const GaussianPulse pulse(1.0, units.to_internal_time(cfg.center_ns), cfg.alpha);
  const CorrelationOptions opt = build_options(cfg);

  if (cfg.mode == RunMode::Validate) {
    log << "running oracle suite (seed " << cfg.seed << ")\n";
    const std::vector<OracleReport> reports = run_all_checks(cfg.seed);
    const std::string table = format_oracle_table(reports);
    log << table;
    emit(result, log, join(cfg.out_dir, "validation.txt"), table);
    for (const OracleReport& r : reports) {
      if (!r.pass) result.exit_code = kExitOracleFailure;
    }
    return result;
  }

  ManifestInfo info{params, pulse, units, cplx(0.0, 0.0),
                    resolved_truncation(cfg, params, pulse), ""};

  try {
    if (cfg.mode == RunMode::Grid) {
      const std::vector<double> axis =
          linspace(cfg.t_min, cfg.t_max, static_cast<std::size_t>(cfg.points));
      log << "grid " << cfg.points << "x" << cfg.points << " (" << channel_pair_name(cfg.pair)
          << ")\n";
      const CorrelationGrid grid = compute_grid(params, pulse, cfg.pair, axis, axis, opt);
      info.kappa = grid.kappa;
      std::ostringstream extra;
      extra << "masked_points: " << grid.masked_count << '\n';
      info.extra = extra.str();
      emit(result, log, join(cfg.out_dir, "grid.csv"), format_grid_csv(grid, units));
      emit(result, log, join(cfg.out_dir, "trace.csv"),
           format_trace_csv(diagonal_trace(grid), units));
    } else if (cfg.mode == RunMode::RatioSweep) {
      const std::vector<double> axis =
          linspace(cfg.t_min, cfg.t_max, static_cast<std::size_t>(cfg.points));
      log << "ratio sweep over " << cfg.ratios.size() << " widths ("
          << channel_pair_name(cfg.pair) << ")\n";
      const std::vector<RatioEntry> entries =
          ratio_sweep(params, pulse, cfg.pair, cfg.ratios, axis, opt);
      std::ostringstream extra;
      for (const RatioEntry& e : entries) {
        const std::string name = "trace_ratio_" + num(e.ratio) + ".csv";
        emit(result, log, join(cfg.out_dir, name),
             format_trace_csv(diagonal_trace(e.grid), units));
        extra << "ratio " << num(e.ratio)
              << ": total_decay_mhz=" << num(units.to_mhz(total_decay(e.params)))
              << " kappa_re=" << num(e.grid.kappa.real())
              << " kappa_im=" << num(e.grid.kappa.imag()) << " masked=" << e.grid.masked_count
              << '\n';
      }
      info.kappa = entries.front().grid.kappa;
      info.extra = extra.str();
    } else {  // PhaseSweep
      const std::vector<double> phis =
          linspace(0.0, 2.0 * kPi, static_cast<std::size_t>(cfg.phi_points));
      const std::vector<double> dts =
          linspace(-cfg.dt_span, cfg.dt_span, static_cast<std::size_t>(cfg.points));
      log << "phase sweep, " << cfg.phi_points << " phases x " << cfg.points << " delays ("
          << channel_pair_name(cfg.pair) << ")\n";
      const PhaseSweep sweep = phase_sweep(params, pulse, cfg.pair, phis, cfg.cut_sum, dts, opt);
      std::size_t masked = 0;
      for (std::uint8_t m : sweep.masked) masked += m;
      if (masked > opt.masked_fraction_tolerance * static_cast<double>(sweep.masked.size())) {
        throw MaskedGridError("too many sweep points failed to converge", masked,
                              sweep.masked.size());
      }
      info.kappa = sweep.kappas.front();
      std::ostringstream extra;
      extra << "phi_points: " << cfg.phi_points << '\n';
      extra << "cut_sum_ns: " << num(units.to_ns(cfg.cut_sum)) << '\n';
      extra << "masked_points: " << masked << '\n';
      info.extra = extra.str();
      emit(result, log, join(cfg.out_dir, "sweep.csv"), format_sweep_csv(sweep, units));
    }
  } catch (const MaskedGridError& e) {
    log << "error: " << e.what() << " (" << e.masked << "/" << e.total << " points)\n";
    result.exit_code = kExitMaskedGrid;
    return result;
  }

  emit(result, log, join(cfg.out_dir, "manifest.txt"), format_manifest(cfg, info));
  if (cfg.emit_plot_script) {
    emit(result, log, join(cfg.out_dir, "plot.py"), format_plot_script(cfg));
  }
  return result;
}

}  // namespace gatom
