#include <cmath>

#include "doctest.h"
#include "gatom/run_config.hpp"

using namespace gatom;

namespace {
constexpr double kPi = 3.141592653589793238462643383280;

RunConfig parse(const std::string& text) { return parse_config_text(text, "test"); }

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.line;
  }
  return -2;
}
}  // namespace

TEST_CASE("full config round-trips every key") {
  const RunConfig cfg = parse(
      "run.mode = phase-sweep\n"
      "run.threads = 3\n"
      "run.seed = 99\n"
      "system.gamma1_mhz = 7.5\n"
      "system.gamma2_mhz = 2.5   # trailing comment\n"
      "system.coupling_phase1 = 0.25\n"
      "system.coupling_phase2 = pi/4\n"
      "system.phi0 = 1.5*pi\n"
      "system.delta = -3.5\n"
      "pulse.width_ns = 80\n"
      "pulse.center_ns = 10\n"
      "pulse.alpha = 0.2\n"
      "channels.pair = tr\n"
      "grid.t_min = -3\n"
      "grid.t_max = 5\n"
      "grid.points = 11\n"
      "sweep.ratios = 0.5, 1, 2\n"
      "sweep.phi_points = 21\n"
      "sweep.cut_sum = -0.25\n"
      "sweep.dt_span = 4\n"
      "quad.abs_tol = 1e-9\n"
      "quad.rel_tol = 1e-7\n"
      "quad.max_subdivisions = 500\n"
      "quad.truncation = 35\n"
      "output.dir = results\n"
      "output.plot_script = yes\n");
  CHECK(cfg.mode == RunMode::PhaseSweep);
  CHECK(cfg.threads == 3);
  CHECK(cfg.seed == 99);
  CHECK(cfg.gamma1_mhz == 7.5);
  CHECK(cfg.gamma2_mhz == 2.5);
  CHECK(cfg.coupling_phase1 == 0.25);
  CHECK(cfg.coupling_phase2 == doctest::Approx(kPi / 4.0));
  CHECK(cfg.phi0 == doctest::Approx(1.5 * kPi));
  CHECK_FALSE(cfg.delta_resonant);
  CHECK(cfg.delta_mhz == -3.5);
  CHECK(cfg.width_ns == 80);
  CHECK(cfg.center_ns == 10);
  CHECK(cfg.alpha == 0.2);
  CHECK(cfg.pair.a == Channel::Transmit);
  CHECK(cfg.pair.b == Channel::Reflect);
  CHECK(cfg.t_min == -3);
  CHECK(cfg.t_max == 5);
  CHECK(cfg.points == 11);
  CHECK(cfg.ratios == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(cfg.phi_points == 21);
  CHECK(cfg.cut_sum == -0.25);
  CHECK(cfg.dt_span == 4);
  CHECK(cfg.abs_tol == 1e-9);
  CHECK(cfg.rel_tol == 1e-7);
  CHECK(cfg.max_subdivisions == 500);
  CHECK(cfg.truncation == 35);
  CHECK(cfg.out_dir == "results");
  CHECK(cfg.emit_plot_script);
}

TEST_CASE("defaults survive a minimal config") {
  const RunConfig cfg = parse("run.mode = grid\n");
  CHECK(cfg.gamma1_mhz == 5.0);
  CHECK(cfg.gamma2_mhz == 5.0);
  CHECK(cfg.delta_resonant);
  CHECK(cfg.width_ns == 100.0);
  CHECK(cfg.points == 201);
  CHECK(cfg.pair.a == Channel::Transmit);
  CHECK(cfg.pair.b == Channel::Transmit);
  CHECK(cfg.out_dir == "out");
  CHECK_FALSE(cfg.emit_plot_script);
}

TEST_CASE("angle shorthand forms") {
  CHECK(parse("run.mode = grid\nsystem.phi0 = pi\n").phi0 == doctest::Approx(kPi));
  CHECK(parse("run.mode = grid\nsystem.phi0 = pi/2\n").phi0 == doctest::Approx(kPi / 2.0));
  CHECK(parse("run.mode = grid\nsystem.phi0 = 0.5*pi\n").phi0 == doctest::Approx(kPi / 2.0));
  CHECK(parse("run.mode = grid\nsystem.phi0 = 3*pi/2\n").phi0 == doctest::Approx(1.5 * kPi));
  CHECK(parse("run.mode = grid\nsystem.phi0 = 2.3\n").phi0 == 2.3);
}

TEST_CASE("resonant detuning keyword") {
  CHECK(parse("run.mode = grid\nsystem.delta = resonant\n").delta_resonant);
}

TEST_CASE("errors carry the offending line") {
  CHECK(error_line("run.mode = grid\nbogus.key = 1\n") == 2);
  CHECK(error_line("junk line\n") == 1);
  CHECK(error_line("run.mode = grid\nrun.mode = grid\n") == 2);
  CHECK(error_line("run.mode = nope\n") == 1);
  CHECK(error_line("run.mode = grid\ngrid.points = duck\n") == 2);
  CHECK(error_line("run.mode = grid\noutput.plot_script = maybe\n") == 2);
  CHECK(error_line("run.mode = grid\nsweep.ratios = 1,,2\n") == 2);
  CHECK(error_line("run.mode = grid\nsystem.phi0 = pi/0\n") == 2);
}

TEST_CASE("semantic validation happens after parsing") {
  CHECK_THROWS_AS(parse(""), ConfigError);                               // no mode
  CHECK_THROWS_AS(parse("run.mode = grid\npulse.width_ns = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse("run.mode = grid\nsystem.gamma1_mhz = -1\n"), ConfigError);
  CHECK_THROWS_AS(
      parse("run.mode = grid\nsystem.gamma1_mhz = 0\nsystem.gamma2_mhz = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse("run.mode = grid\ngrid.points = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("run.mode = grid\ngrid.t_min = 2\ngrid.t_max = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("run.mode = ratio-sweep\nsweep.ratios = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse("run.mode = grid\nquad.abs_tol = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse("run.mode = grid\nrun.threads = -2\n"), ConfigError);
}

TEST_CASE("names render as expected") {
  CHECK(channel_pair_name(kTT) == "tt");
  CHECK(channel_pair_name(kRR) == "rr");
  CHECK(channel_pair_name(kTR) == "tr");
  CHECK(run_mode_name(RunMode::Grid) == "grid");
  CHECK(run_mode_name(RunMode::RatioSweep) == "ratio-sweep");
  CHECK(run_mode_name(RunMode::PhaseSweep) == "phase-sweep");
  CHECK(run_mode_name(RunMode::Validate) == "validate");
}

TEST_CASE("missing config file raises") {
  CHECK_THROWS_AS(parse_config_file("/nonexistent/path.cfg"), ConfigError);
}
