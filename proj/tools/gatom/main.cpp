#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gatom/runner.hpp"

namespace {

std::string output_dir(const std::string& flag_value, const std::string& config_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("GATOM_OUT")) {
    if (*env) return env;
  }
  return config_value;
}

void print_recipes() {
  std::cout << "fig2  ratio-sweep  equal-time correlations across pulse widths 0.1..3 lifetimes\n"
               "fig3  grid         two-point emitter at phi0 = pi/2, both photons transmitted\n"
               "fig4  ratio-sweep  bunching-peak growth across pulse widths 0.3..3 lifetimes\n"
               "fig5  phase-sweep  correlation cut against phi0 over [0, 2pi]\n"
               "appF  grid         both photons reflected (diagonal antibunching)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon scattering on a two-point-coupled emitter in a waveguide"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  int threads = -1;

  CLI::App* run_cmd = app.add_subcommand("run", "execute a configured computation");
  run_cmd->add_option("--config", config_path, "config file (key = value lines)")
      ->required()
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out_flag, "output directory (beats GATOM_OUT and the config)");
  run_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");

  std::uint64_t seed = gatom::RunConfig().seed;
  CLI::App* validate_cmd = app.add_subcommand("validate", "run the built-in oracle suite");
  validate_cmd->add_option("--seed", seed, "oracle RNG seed");
  validate_cmd->add_option("--out", out_flag, "directory for the validation report");

  CLI::App* recipes_cmd = app.add_subcommand("recipes", "shipped example configurations");
  recipes_cmd->add_subcommand("list", "list the recipe configs under recipes/");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gatom::kExitConfig;
  }

  try {
    if (*recipes_cmd) {
      print_recipes();
      return gatom::kExitOk;
    }
    if (*validate_cmd) {
      gatom::RunConfig cfg;
      cfg.mode = gatom::RunMode::Validate;
      cfg.seed = seed;
      cfg.out_dir = output_dir(out_flag, cfg.out_dir);
      return gatom::run(cfg, std::cerr).exit_code;
    }
    gatom::RunConfig cfg = gatom::parse_config_file(config_path);
    cfg.out_dir = output_dir(out_flag, cfg.out_dir);
    if (threads >= 0) cfg.threads = threads;
    return gatom::run(cfg, std::cerr).exit_code;
  } catch (const gatom::ConfigError& e) {
    std::cerr << "config error";
    if (e.line >= 0) std::cerr << " (line " << e.line << ")";
    std::cerr << ": " << e.what() << '\n';
    return gatom::kExitConfig;
  } catch (const gatom::MaskedGridError& e) {
    std::cerr << "error: " << e.what() << " (" << e.masked << "/" << e.total << " points)\n";
    return gatom::kExitMaskedGrid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
