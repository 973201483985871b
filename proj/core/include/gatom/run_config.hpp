#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gatom/two_photon.hpp"

namespace gatom {

enum class RunMode { Grid, RatioSweep, PhaseSweep, Validate };

// Parsed experiment description. Physical units at this boundary: times in
// ns, rates in MHz (1 MHz = 1e-3/ns), angles in radians. Internally the pulse
// width is the time unit.
struct RunConfig {
  RunMode mode = RunMode::Grid;

  // system.*
  double gamma1_mhz = 5.0;  // 2pi|g1|^2
  double gamma2_mhz = 5.0;
  double coupling_phase1 = 0.0;  // arg g1
  double coupling_phase2 = 0.0;
  double phi0 = 0.0;
  bool delta_resonant = true;
  double delta_mhz = 0.0;  // used when delta_resonant is false

  // pulse.*
  double width_ns = 100.0;
  double center_ns = 0.0;
  double alpha = 0.1;

  // channels.pair: tt | rr | tr
  ChannelPair pair = kTT;

  // grid.*: axis in units of the pulse width
  double t_min = -4.0;
  double t_max = 6.0;
  int points = 201;

  // sweep.*
  std::vector<double> ratios = {0.3, 0.5, 0.8, 1.0, 1.5, 3.0};
  int phi_points = 101;
  double cut_sum = -0.5;  // units of pulse width
  double dt_span = 5.0;   // cut covers dt in [-dt_span, dt_span] pulse widths

  // quad.*
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
  double truncation = 0.0;  // 0 -> automatic

  // output.*
  std::string out_dir = "out";
  bool emit_plot_script = false;

  int threads = 0;
  std::uint64_t seed = 20260814ull;
};

// Flat "section.key = value" text, '#' comments. Unknown keys, malformed
// values, or a missing/ambiguous run mode raise ConfigError with the line.
RunConfig parse_config_text(const std::string& text, const std::string& origin);
RunConfig parse_config_file(const std::string& path);

std::string channel_pair_name(ChannelPair pair);
std::string run_mode_name(RunMode mode);

}  // namespace gatom
