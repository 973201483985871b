#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gatom/run_config.hpp"

namespace gatom {

// Exit codes shared with the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitMaskedGrid = 3;
inline constexpr int kExitOracleFailure = 4;

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::string> files;
};

// Executes the configured mode and writes its outputs under cfg.out_dir.
RunResult run(const RunConfig& cfg, std::ostream& log);

}  // namespace gatom
