#pragma once

#include <string>

#include "gatom/correlations.hpp"
#include "gatom/oracle.hpp"
#include "gatom/params.hpp"
#include "gatom/run_config.hpp"

namespace gatom {

// Writes via a temp file and atomic rename so readers never observe partial
// output. Creates parent directories.
void write_text_atomic(const std::string& path, const std::string& content);

// Serialization units: t in ns, amplitudes in MHz, g2/c2/intensity products
// in MHz^2. Fixed "%.12g" formatting keeps reruns byte-identical.
std::string format_grid_csv(const CorrelationGrid& grid, const UnitSystem& units);
std::string format_trace_csv(const DiagonalTrace& trace, const UnitSystem& units);
std::string format_sweep_csv(const PhaseSweep& sweep, const UnitSystem& units);

struct ManifestInfo {
  SystemParams params;        // internal units
  GaussianPulse pulse;        // internal units
  UnitSystem units;
  cplx kappa;
  double truncation;
  std::string extra;          // mode-specific lines, already formatted
};

std::string format_manifest(const RunConfig& cfg, const ManifestInfo& info);

std::string format_oracle_table(const std::vector<OracleReport>& reports);

// Self-contained matplotlib script reading the CSVs next to it.
std::string format_plot_script(const RunConfig& cfg);

}  // namespace gatom
