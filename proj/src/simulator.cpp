#include "gpsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gpsim/conversion.hpp"
#include "gpsim/errors.hpp"

namespace gpsim {

int SolverConfig::steps() const {
  return static_cast<int>(std::lround(t_horizon_s / dt_s));
}

void SolverConfig::validate() const {
  if (dt_s <= 0) throw ValidationError("solver: dt must be positive");
  if (t_horizon_s <= 0) throw ValidationError("solver: horizon must be positive");
  if (dx_target_m <= 0) throw ValidationError("solver: dx must be positive");
  if (newton_tol <= 0) throw ValidationError("solver: tolerance must be positive");
  if (max_newton_iters < 1) throw ValidationError("solver: need at least one iteration");
  if (max_step_halvings < 0) throw ValidationError("solver: halvings must be >= 0");
  const double ratio = t_horizon_s / dt_s;
  if (std::abs(ratio - std::lround(ratio)) > 1e-9 * std::max(1.0, ratio))
    throw ValidationError("solver: horizon must be an integer multiple of dt");
}

namespace {

NewtonOptions newton_options(const SolverConfig& config) {
  NewtonOptions o;
  o.tol = config.newton_tol;
  o.max_iterations = config.max_newton_iters;
  o.max_halvings = config.max_step_halvings;
  return o;
}

void log_line(std::ostream* log, const std::string& line) {
  if (log) *log << "gpsim: " << line << "\n";
}

}  // namespace

Simulator::Simulator(Scenario scenario, CouplingKind coupling)
    : scenario_(std::move(scenario)),
      coupling_(coupling),
      network_(build_network(scenario_)),
      layout_(build_layout(network_, scenario_.solver.dx_target_m)) {
  scenario_.solver.validate();
  transient_ = std::make_unique<CoupledSystem>(
      network_, layout_, scenario_.constants, coupling_, scenario_.load_profile,
      scenario_.solver, CoupledSystem::Mode::Transient);
}

Eigen::VectorXd Simulator::solve_stationary() {
  CoupledSystem steady(network_, layout_, scenario_.constants, coupling_,
                       scenario_.load_profile, scenario_.solver,
                       CoupledSystem::Mode::Stationary);
  steady.set_time(0.0);

  double anchor_pressure_pa = 60.0 * kBarToPascal;
  if (!network_.gas_nodes.empty()) {
    const PressureAnchor anchor = scenario_.effective_anchor();
    const int node = network_.gas_node_index(anchor.node);
    if (node < 0)
      throw ValidationError("pressure anchor references unknown node '" +
                            anchor.node + "'");
    anchor_pressure_pa = anchor.pressure_bar * kBarToPascal;
    steady.set_anchor(node, anchor_pressure_pa);
  }

  Eigen::VectorXd x = steady.flat_state(anchor_pressure_pa);
  const NewtonReport report = newton_solve(steady, x, newton_options(scenario_.solver));
  if (!report.converged)
    throw ConvergenceError("stationary initialization " + report.describe(steady),
                           report.history);

  if (!network_.gas_nodes.empty()) {
    const int node = network_.gas_node_index(scenario_.effective_anchor().node);
    anchor_defect_ = steady.node_balance(x, node, 0.0);
  }
  return x;
}

SimulationResult Simulator::run(
    SnapshotLevel snapshots, std::ostream* log,
    std::optional<std::pair<double, Eigen::VectorXd>> resume) {
  const SolverConfig& config = scenario_.solver;
  config.validate();

  SimulationResult result;
  result.coupling = coupling_;
  result.dt_s = config.dt_s;

  // implicit box scheme: dt/dx is bounded below, warn on too-small steps
  for (std::size_t pb = 0; pb < layout_.pipes.size(); ++pb) {
    const auto& block = layout_.pipes[pb];
    const double limit = block.dx / transient_->law().c_vac();
    if (config.dt_s < limit) {
      std::ostringstream os;
      os << "warning=timestep_below_inverse_cfl pipe="
         << network_.gas_edges[block.edge].id << " dt_s=" << config.dt_s
         << " dx_over_c_s=" << limit;
      log_line(log, os.str());
    }
  }

  double t = 0.0;
  Eigen::VectorXd x;
  if (resume) {
    t = resume->first;
    x = std::move(resume->second);
    if (x.size() != layout_.total)
      throw ValidationError("resume state has wrong size");
  } else {
    x = solve_stationary();
  }
  result.t0_s = t;

  const double remaining = config.t_horizon_s - t;
  const int n_steps = std::max(0, static_cast<int>(std::lround(remaining / config.dt_s)));

  // conversion columns sorted by gas node id
  std::vector<int> order(network_.conversions.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = static_cast<int>(c);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& na = network_.gas_nodes[network_.conversions[a].gas_node].id;
    const auto& nb = network_.gas_nodes[network_.conversions[b].gas_node].id;
    if (na != nb) return na < nb;
    return network_.conversions[a].id < network_.conversions[b].id;
  });
  result.conversion_order = order;
  for (int c : order) {
    const auto& gas_id = network_.gas_nodes[network_.conversions[c].gas_node].id;
    std::string column = gas_id;
    for (int other : order) {
      if (other != c &&
          network_.gas_nodes[network_.conversions[other].gas_node].id == gas_id) {
        column = gas_id + ":" + network_.conversions[c].id;
        break;
      }
    }
    result.conversion_columns.push_back(column);
  }

  auto record = [&](double t_s, const Eigen::VectorXd& state) {
    result.times.push_back(t_s);
    std::vector<double> p_row, q_row;
    p_row.reserve(order.size());
    q_row.reserve(order.size());
    for (int c : order) {
      const double rho = state[layout_.conversion_end_first[c]];
      p_row.push_back(transient_->law().pressure(rho) / kBarToPascal);
      q_row.push_back(state[layout_.conversion_flow[c]]);
    }
    result.pressure_bar.push_back(std::move(p_row));
    result.flow_m3s.push_back(std::move(q_row));
    if (snapshots == SnapshotLevel::Full) result.states.push_back(state);
  };
  record(t, x);

  const NewtonOptions options = newton_options(config);
  for (int k = 1; k <= n_steps; ++k) {
    const double t_next = t + config.dt_s;
    transient_->set_previous(x);
    transient_->set_time(t_next);
    const NewtonReport report = newton_solve(*transient_, x, options);
    if (!report.converged) {
      std::ostringstream os;
      os << "time step " << k << " (t = " << t_next << " s) "
         << report.describe(*transient_);
      throw ConvergenceError(os.str(), report.history);
    }
    t = t_next;
    result.steps.push_back({t, report.iterations, report.halvings,
                            report.residual_inf});
    record(t, x);
    std::ostringstream os;
    os << "step=" << k << " t_s=" << t << " iters=" << report.iterations
       << " halvings=" << report.halvings << " residual=" << report.residual_inf;
    log_line(log, os.str());
  }
  result.final_state = x;

  // trapezoidal totals of the clipped flow series, summed over plants
  for (std::size_t col = 0; col < result.conversion_columns.size(); ++col) {
    for (std::size_t k = 0; k + 1 < result.times.size(); ++k) {
      const double dt = result.times[k + 1] - result.times[k];
      const double q0 = result.flow_m3s[k][col];
      const double q1 = result.flow_m3s[k + 1][col];
      result.total_consumed_m3 +=
          dt * 0.5 * (std::max(q0, 0.0) + std::max(q1, 0.0));
      result.total_generated_m3 +=
          dt * 0.5 * (std::max(-q0, 0.0) + std::max(-q1, 0.0));
    }
  }
  return result;
}

}  // namespace gpsim
