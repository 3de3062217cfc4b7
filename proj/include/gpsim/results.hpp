#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gpsim/simulator.hpp"

namespace gpsim {

/// Coupling-condition comparison over all pipes, grid points and times:
/// extreme pressure differences plus flow differences binned by |q| decades
/// with a 1e-3 m^3/s lower cutoff.
struct ComparisonStats {
  double max_abs_pressure_bar = 0.0;
  double max_rel_pressure = 0.0;
  struct FlowBin {
    double lo = 0.0;  // |q| range [m^3/s]
    double hi = 0.0;
    double max_abs = 0.0;
    double max_rel = 0.0;
    long count = 0;
  };
  std::vector<FlowBin> flow_bins;

  std::string table() const;  // human-readable summary
};

/// Writes the run outputs into `dir`:
///   pressure.csv / flow.csv  one row per time step, one column per plant,
///                            fixed 6-decimal formatting;
///   snapshots.csv            per-pipe grid states (full snapshots only);
///   summary.json             totals, solver statistics, boundary-flow echo.
void write_results(const SimulationResult& result, const CoupledSystem& system,
                   const std::string& dir);

/// In-memory comparison; both runs need full snapshots on the same grid.
ComparisonStats compare_results(const SimulationResult& a,
                                const SimulationResult& b,
                                const CoupledSystem& system);

/// Comparison from two result directories written with full snapshots.
ComparisonStats compare_result_dirs(const std::string& dir_a,
                                    const std::string& dir_b);

nlohmann::json comparison_to_json(const ComparisonStats& stats);

/// Series file reader for the CSVs written above.
struct SeriesTable {
  std::vector<std::string> columns;       // without the leading time column
  std::vector<double> times_h;
  std::vector<std::vector<double>> rows;  // [step][column]
};
SeriesTable read_series_csv(const std::string& path);

/// Trapezoidal totals of the positive / negative part of the plant flows in a
/// series table (times in hours, flows in m^3/s) -> volumes in m^3.
std::pair<double, double> totals_from_series(const SeriesTable& flows);

}  // namespace gpsim
