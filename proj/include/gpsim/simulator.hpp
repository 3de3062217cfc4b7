#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpsim/coupled_system.hpp"
#include "gpsim/scenario.hpp"

namespace gpsim {

enum class SnapshotLevel { None, Conversion, Full };

struct StepStats {
  double t_s = 0.0;
  int iterations = 0;
  int halvings = 0;
  double residual = 0.0;
};

struct SimulationResult {
  std::vector<double> times;                      // includes t0
  std::vector<std::string> conversion_columns;    // sorted by gas node id
  std::vector<int> conversion_order;              // plant index per column
  std::vector<std::vector<double>> pressure_bar;  // [step][column]
  std::vector<std::vector<double>> flow_m3s;      // [step][column], + consumed
  std::vector<StepStats> steps;
  std::vector<Eigen::VectorXd> states;            // full snapshots when requested
  Eigen::VectorXd final_state;
  double total_consumed_m3 = 0.0;
  double total_generated_m3 = 0.0;
  CouplingKind coupling = CouplingKind::Pressure;
  double dt_s = 0.0;
  double t0_s = 0.0;
};

/// Drives the stationary initialization and the outer time loop. Each step
/// solves the full coupled system by damped Newton, warm-started from the
/// previous state.
class Simulator {
 public:
  Simulator(Scenario scenario, CouplingKind coupling);

  const Scenario& scenario() const { return scenario_; }
  const Network& network() const { return network_; }
  const UnknownLayout& layout() const { return layout_; }
  CouplingKind coupling() const { return coupling_; }
  const CoupledSystem& system() const { return *transient_; }

  /// Steady state at t = 0: the time-difference terms are dropped and the
  /// anchor node's balance is replaced by its prescribed pressure. Throws
  /// ConvergenceError on failure.
  Eigen::VectorXd solve_stationary();

  /// Net flow imbalance left at the anchor node by the steady state [m^3/s];
  /// zero exactly when the prescribed boundary flows balance.
  double anchor_balance_defect() const { return anchor_defect_; }

  /// Transient run over the configured horizon. Starts from the stationary
  /// state unless `resume` provides (t0, state). Throws ConvergenceError with
  /// the failing step in the message.
  SimulationResult run(SnapshotLevel snapshots = SnapshotLevel::Conversion,
                       std::ostream* log = nullptr,
                       std::optional<std::pair<double, Eigen::VectorXd>> resume =
                           std::nullopt);

 private:
  Scenario scenario_;
  CouplingKind coupling_;
  Network network_;
  UnknownLayout layout_;
  std::unique_ptr<CoupledSystem> transient_;
  double anchor_defect_ = 0.0;
};

}  // namespace gpsim
