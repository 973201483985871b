#include "gatom/outputs.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gatom {

namespace {

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

std::string format_grid_csv(const CorrelationGrid& grid, const UnitSystem& units) {
  std::string out =
      "t1_ns,t2_ns,psi2_re_mhz,psi2_im_mhz,g2_mhz2,c2_mhz2,intensity_product_mhz2,masked\n";
  for (std::size_t i = 0; i < grid.t1_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.t2_axis.size(); ++j) {
      const std::size_t idx = grid.index(i, j);
      out += num(units.to_ns(grid.t1_axis[i]));
      out += ',';
      out += num(units.to_ns(grid.t2_axis[j]));
      out += ',';
      out += num(units.to_mhz(grid.psi2[idx].real()));
      out += ',';
      out += num(units.to_mhz(grid.psi2[idx].imag()));
      out += ',';
      out += num(units.to_mhz2(grid.g2[idx]));
      out += ',';
      out += num(units.to_mhz2(grid.c2[idx]));
      out += ',';
      out += num(units.to_mhz2(grid.intensity_product[idx]));
      out += ',';
      out += grid.masked[idx] ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

std::string format_trace_csv(const DiagonalTrace& trace, const UnitSystem& units) {
  std::string out = "t_ns,c2_mhz2,intensity_product_mhz2\n";
  for (std::size_t i = 0; i < trace.t.size(); ++i) {
    out += num(units.to_ns(trace.t[i]));
    out += ',';
    out += num(units.to_mhz2(trace.c2[i]));
    out += ',';
    out += num(units.to_mhz2(trace.intensity_product[i]));
    out += '\n';
  }
  return out;
}

std::string format_sweep_csv(const PhaseSweep& sweep, const UnitSystem& units) {
  std::string out = "phi0_rad,dt_ns,c2_mhz2,masked\n";
  for (std::size_t i = 0; i < sweep.phi_axis.size(); ++i) {
    for (std::size_t j = 0; j < sweep.dt_axis.size(); ++j) {
      const std::size_t idx = sweep.index(i, j);
      out += num(sweep.phi_axis[i]);
      out += ',';
      out += num(units.to_ns(sweep.dt_axis[j]));
      out += ',';
      out += num(units.to_mhz2(sweep.c2[idx]));
      out += ',';
      out += sweep.masked[idx] ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

std::string format_manifest(const RunConfig& cfg, const ManifestInfo& info) {
  std::ostringstream os;
  os << "mode: " << run_mode_name(cfg.mode) << '\n';
  os << "channel_pair: " << channel_pair_name(cfg.pair) << '\n';
  os << "gamma1_mhz: " << num(cfg.gamma1_mhz) << '\n';
  os << "gamma2_mhz: " << num(cfg.gamma2_mhz) << '\n';
  os << "coupling_phase1_rad: " << num(cfg.coupling_phase1) << '\n';
  os << "coupling_phase2_rad: " << num(cfg.coupling_phase2) << '\n';
  os << "phi0_rad: " << num(info.params.phi0) << '\n';
  os << "delta_mhz: " << num(info.units.to_mhz(info.params.delta))
     << (cfg.delta_resonant ? " (resonant)" : "") << '\n';
  const double gam = total_decay(info.params);
  os << "total_decay_mhz: " << num(info.units.to_mhz(gam)) << '\n';
  if (gam > 0.0) {
    os << "lifetime_ns: " << num(info.units.to_ns(1.0 / gam)) << '\n';
    os << "width_lifetime_ratio: " << num(info.pulse.width * gam) << '\n';
  } else {
    os << "lifetime_ns: inf\n";
    os << "width_lifetime_ratio: 0\n";
  }
  os << "pulse_width_ns: " << num(info.units.to_ns(info.pulse.width)) << '\n';
  os << "pulse_center_ns: " << num(info.units.to_ns(info.pulse.center_time)) << '\n';
  os << "pulse_alpha: " << num(info.pulse.alpha) << '\n';
  os << "kappa_re: " << num(info.kappa.real()) << '\n';
  os << "kappa_im: " << num(info.kappa.imag()) << '\n';
  os << "quad_abs_tol: " << num(cfg.abs_tol) << '\n';
  os << "quad_rel_tol: " << num(cfg.rel_tol) << '\n';
  os << "quad_max_subdivisions: " << cfg.max_subdivisions << '\n';
  os << "quad_truncation_internal: " << num(info.truncation) << '\n';
  os << "time_unit_ns: " << num(info.units.time_unit) << '\n';
  os << "seed: " << cfg.seed << '\n';
  os << info.extra;
  return os.str();
}

std::string format_oracle_table(const std::vector<OracleReport>& reports) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-24s %-6s %-12s %-12s %s\n", "check", "status", "max_dev",
                "tolerance", "samples");
  os << line;
  for (const OracleReport& r : reports) {
    char dev[24], tol[24];
    std::snprintf(dev, sizeof dev, "%.3e", r.max_dev);
    std::snprintf(tol, sizeof tol, "%.3e", r.tolerance);
    std::snprintf(line, sizeof line, "%-24s %-6s %-12s %-12s %ld\n", r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", dev, tol, r.samples);
    os << line;
    if (!r.detail.empty()) os << "    " << r.detail << '\n';
  }
  return os.str();
}

std::string format_plot_script(const RunConfig& cfg) {
  std::ostringstream os;
  os << "#!/usr/bin/env python3\n"
        "# Renders the CSV outputs written next to this script.\n"
        "import csv, math, os, sys\n"
        "\n"
        "import matplotlib\n"
        "matplotlib.use('Agg')\n"
        "import matplotlib.pyplot as plt\n"
        "\n"
        "here = os.path.dirname(os.path.abspath(__file__))\n"
        "\n"
        "def read(name):\n"
        "    with open(os.path.join(here, name)) as f:\n"
        "        rows = list(csv.DictReader(f))\n"
        "    return rows\n"
        "\n";
  switch (cfg.mode) {
    case RunMode::Grid:
      os << "rows = read('grid.csv')\n"
            "t1 = sorted({float(r['t1_ns']) for r in rows})\n"
            "t2 = sorted({float(r['t2_ns']) for r in rows})\n"
            "c2 = [[0.0] * len(t2) for _ in t1]\n"
            "i1 = {v: i for i, v in enumerate(t1)}\n"
            "i2 = {v: i for i, v in enumerate(t2)}\n"
            "for r in rows:\n"
            "    c2[i1[float(r['t1_ns'])]][i2[float(r['t2_ns'])]] = float(r['c2_mhz2'])\n"
            "lim = max(max(abs(v) for v in row) for row in c2) or 1.0\n"
            "fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(11, 4.5))\n"
            "m = ax0.pcolormesh(t2, t1, c2, cmap='RdBu_r', vmin=-lim, vmax=lim,\n"
            "                   shading='nearest')\n"
            "fig.colorbar(m, ax=ax0, label='c2 (MHz^2)')\n"
            "ax0.set_xlabel('t2 (ns)')\n"
            "ax0.set_ylabel('t1 (ns)')\n"
            "tr = read('trace.csv')\n"
            "ax1.plot([float(r['t_ns']) for r in tr], [float(r['c2_mhz2']) for r in tr])\n"
            "ax1.axhline(0.0, color='k', lw=0.5)\n"
            "ax1.set_xlabel('t (ns)')\n"
            "ax1.set_ylabel('equal-time c2 (MHz^2)')\n"
            "fig.tight_layout()\n"
            "fig.savefig(os.path.join(here, 'grid.png'), dpi=160)\n";
      break;
    case RunMode::RatioSweep:
      os << "import glob\n"
            "fig, ax = plt.subplots(figsize=(7, 4.5))\n"
            "for path in sorted(glob.glob(os.path.join(here, 'trace_ratio_*.csv'))):\n"
            "    label = os.path.basename(path)[len('trace_ratio_'):-len('.csv')]\n"
            "    with open(path) as f:\n"
            "        tr = list(csv.DictReader(f))\n"
            "    ax.plot([float(r['t_ns']) for r in tr], [float(r['c2_mhz2']) for r in tr],\n"
            "            label='ratio ' + label)\n"
            "ax.axhline(0.0, color='k', lw=0.5)\n"
            "ax.set_xlabel('t (ns)')\n"
            "ax.set_ylabel('equal-time c2 (MHz^2)')\n"
            "ax.legend()\n"
            "fig.tight_layout()\n"
            "fig.savefig(os.path.join(here, 'ratio_sweep.png'), dpi=160)\n";
      break;
    case RunMode::PhaseSweep:
      os << "rows = read('sweep.csv')\n"
            "phi = sorted({float(r['phi0_rad']) for r in rows})\n"
            "dt = sorted({float(r['dt_ns']) for r in rows})\n"
            "c2 = [[0.0] * len(dt) for _ in phi]\n"
            "ip = {v: i for i, v in enumerate(phi)}\n"
            "idt = {v: i for i, v in enumerate(dt)}\n"
            "for r in rows:\n"
            "    c2[ip[float(r['phi0_rad'])]][idt[float(r['dt_ns'])]] = float(r['c2_mhz2'])\n"
            "lim = max(max(abs(v) for v in row) for row in c2) or 1.0\n"
            "fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(11, 4.5))\n"
            "m = ax0.pcolormesh(dt, phi, c2, cmap='RdBu_r', vmin=-lim, vmax=lim,\n"
            "                   shading='nearest')\n"
            "fig.colorbar(m, ax=ax0, label='c2 (MHz^2)')\n"
            "ax0.set_xlabel('t1 - t2 (ns)')\n"
            "ax0.set_ylabel('phi0 (rad)')\n"
            "j0 = min(range(len(dt)), key=lambda j: abs(dt[j]))\n"
            "ax1.plot(phi, [row[j0] for row in c2])\n"
            "ax1.axhline(0.0, color='k', lw=0.5)\n"
            "ax1.set_xlabel('phi0 (rad)')\n"
            "ax1.set_ylabel('equal-time c2 (MHz^2)')\n"
            "fig.tight_layout()\n"
            "fig.savefig(os.path.join(here, 'phase_sweep.png'), dpi=160)\n";
      break;
    case RunMode::Validate:
      os << "print('validate mode writes no CSV output')\n";
      break;
  }
  return os.str();
}

}  // namespace gatom
