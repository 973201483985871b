#include "gatom/run_config.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "gatom/errors.hpp"

namespace gatom {

namespace {

constexpr double kPi = 3.141592653589793238462643383280;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    double x = std::stod(value, &pos);
    if (trim(value.substr(pos)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected a number, got '" + value + "'", line);
}

// Angles additionally accept "pi", "pi/N", "X*pi" and "X*pi/N".
double parse_angle(const std::string& value, int line) {
  static const std::regex with_pi(R"(^\s*(?:([-+0-9.eE]+)\s*\*\s*)?pi\s*(?:/\s*([-+0-9.eE]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(value, m, with_pi)) {
    double coef = m[1].matched ? parse_number(m[1].str(), line) : 1.0;
    double div = m[2].matched ? parse_number(m[2].str(), line) : 1.0;
    if (div == 0.0) throw ConfigError("division by zero in angle '" + value + "'", line);
    return coef * kPi / div;
  }
  return parse_number(value, line);
}

long parse_integer(const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    long x = std::stol(value, &pos);
    if (trim(value.substr(pos)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected an integer, got '" + value + "'", line);
}

bool parse_bool(const std::string& value, int line) {
  if (value == "true" || value == "yes" || value == "on" || value == "1") return true;
  if (value == "false" || value == "no" || value == "off" || value == "0") return false;
  throw ConfigError("expected a boolean, got '" + value + "'", line);
}

std::vector<double> parse_list(const std::string& value, int line) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("empty entry in list '" + value + "'", line);
    out.push_back(parse_number(item, line));
  }
  if (out.empty()) throw ConfigError("expected a comma-separated list", line);
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool mode_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ": expected 'key = value'", line);
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(origin + ": expected 'key = value'", line);
    }

    if (key == "run.mode") {
      if (mode_seen) throw ConfigError(origin + ": run.mode given twice", line);
      mode_seen = true;
      if (value == "grid") {
        cfg.mode = RunMode::Grid;
      } else if (value == "ratio-sweep") {
        cfg.mode = RunMode::RatioSweep;
      } else if (value == "phase-sweep") {
        cfg.mode = RunMode::PhaseSweep;
      } else if (value == "validate") {
        cfg.mode = RunMode::Validate;
      } else {
        throw ConfigError(origin + ": unknown run.mode '" + value +
                              "' (grid | ratio-sweep | phase-sweep | validate)",
                          line);
      }
    } else if (key == "run.threads") {
      cfg.threads = static_cast<int>(parse_integer(value, line));
    } else if (key == "run.seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_integer(value, line));
    } else if (key == "system.gamma1_mhz") {
      cfg.gamma1_mhz = parse_number(value, line);
    } else if (key == "system.gamma2_mhz") {
      cfg.gamma2_mhz = parse_number(value, line);
    } else if (key == "system.coupling_phase1") {
      cfg.coupling_phase1 = parse_angle(value, line);
    } else if (key == "system.coupling_phase2") {
      cfg.coupling_phase2 = parse_angle(value, line);
    } else if (key == "system.phi0") {
      cfg.phi0 = parse_angle(value, line);
    } else if (key == "system.delta") {
      if (value == "resonant") {
        cfg.delta_resonant = true;
      } else {
        cfg.delta_resonant = false;
        cfg.delta_mhz = parse_number(value, line);
      }
    } else if (key == "pulse.width_ns") {
      cfg.width_ns = parse_number(value, line);
    } else if (key == "pulse.center_ns") {
      cfg.center_ns = parse_number(value, line);
    } else if (key == "pulse.alpha") {
      cfg.alpha = parse_number(value, line);
    } else if (key == "channels.pair") {
      if (value == "tt") {
        cfg.pair = kTT;
      } else if (value == "rr") {
        cfg.pair = kRR;
      } else if (value == "tr") {
        cfg.pair = kTR;
      } else {
        throw ConfigError(origin + ": unknown channels.pair '" + value + "' (tt | rr | tr)", line);
      }
    } else if (key == "grid.t_min") {
      cfg.t_min = parse_number(value, line);
    } else if (key == "grid.t_max") {
      cfg.t_max = parse_number(value, line);
    } else if (key == "grid.points") {
      cfg.points = static_cast<int>(parse_integer(value, line));
    } else if (key == "sweep.ratios") {
      cfg.ratios = parse_list(value, line);
    } else if (key == "sweep.phi_points") {
      cfg.phi_points = static_cast<int>(parse_integer(value, line));
    } else if (key == "sweep.cut_sum") {
      cfg.cut_sum = parse_number(value, line);
    } else if (key == "sweep.dt_span") {
      cfg.dt_span = parse_number(value, line);
    } else if (key == "quad.abs_tol") {
      cfg.abs_tol = parse_number(value, line);
    } else if (key == "quad.rel_tol") {
      cfg.rel_tol = parse_number(value, line);
    } else if (key == "quad.max_subdivisions") {
      cfg.max_subdivisions = static_cast<int>(parse_integer(value, line));
    } else if (key == "quad.truncation") {
      cfg.truncation = parse_number(value, line);
    } else if (key == "output.dir") {
      cfg.out_dir = value;
    } else if (key == "output.plot_script") {
      cfg.emit_plot_script = parse_bool(value, line);
    } else {
      throw ConfigError(origin + ": unknown key '" + key + "'", line);
    }
  }

  if (!mode_seen) throw ConfigError(origin + ": run.mode is required");
  if (cfg.gamma1_mhz < 0.0 || cfg.gamma2_mhz < 0.0) {
    throw ConfigError(origin + ": coupling rates must be nonnegative");
  }
  if (cfg.gamma1_mhz == 0.0 && cfg.gamma2_mhz == 0.0) {
    throw ConfigError(origin + ": at least one coupling rate must be positive");
  }
  if (!(cfg.width_ns > 0.0)) throw ConfigError(origin + ": pulse.width_ns must be positive");
  if (cfg.alpha < 0.0) throw ConfigError(origin + ": pulse.alpha must be nonnegative");
  if (cfg.points < 2) throw ConfigError(origin + ": grid.points must be at least 2");
  if (!(cfg.t_max > cfg.t_min)) throw ConfigError(origin + ": grid.t_max must exceed grid.t_min");
  if (cfg.mode == RunMode::RatioSweep) {
    for (double r : cfg.ratios) {
      if (!(r > 0.0)) throw ConfigError(origin + ": sweep.ratios must be positive");
    }
  }
  if (cfg.phi_points < 2) throw ConfigError(origin + ": sweep.phi_points must be at least 2");
  if (!(cfg.dt_span > 0.0)) throw ConfigError(origin + ": sweep.dt_span must be positive");
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0)) {
    throw ConfigError(origin + ": quadrature tolerances must be positive");
  }
  if (cfg.max_subdivisions < 1) {
    throw ConfigError(origin + ": quad.max_subdivisions must be positive");
  }
  if (cfg.truncation < 0.0) throw ConfigError(origin + ": quad.truncation must be nonnegative");
  if (cfg.threads < 0) throw ConfigError(origin + ": run.threads must be nonnegative");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string channel_pair_name(ChannelPair pair) {
  auto tag = [](Channel c) { return c == Channel::Transmit ? 't' : 'r'; };
  return std::string(1, tag(pair.a)) + std::string(1, tag(pair.b));
}

std::string run_mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Grid:
      return "grid";
    case RunMode::RatioSweep:
      return "ratio-sweep";
    case RunMode::PhaseSweep:
      return "phase-sweep";
    case RunMode::Validate:
      return "validate";
  }
  return "unknown";
}

}  // namespace gatom
