#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpsim/network.hpp"
#include "gpsim/newton.hpp"
#include "gpsim/pipe_flow.hpp"
#include "gpsim/power_flow.hpp"
#include "gpsim/scenario.hpp"
#include "gpsim/solver_config.hpp"

namespace gpsim {

/// The monolithic nonlinear system solved once per time step: box-scheme rows
/// for every pipe cell, end-state identities for short-pipe-like edges, node
/// balances and coupling invariants, power flow equations with bus
/// specifications, and the conversion law tying slack power to plant gas flow.
///
/// In stationary mode the time-difference terms are dropped and the anchor
/// node's balance row is replaced by a prescribed-pressure row, which makes
/// the steady system square without requiring the boundary flows to balance.
class CoupledSystem final : public ResidualSystem {
 public:
  enum class Mode { Transient, Stationary };

  enum class RowKind {
    GasMass,
    GasMomentum,
    IdentityRho,
    IdentityQ,
    ConversionTie,
    ConversionLaw,
    NodeBalance,
    NodeInvariant,
    AnchorPressure,
    PfActive,
    PfReactive,
    SpecP,
    SpecQ,
    SpecV,
    SpecAngle,
  };
  struct RowInfo {
    RowKind kind;
    int entity = -1;  // pipe block / edge / conversion / node / bus index
    int sub = 0;      // cell index or invariant pair index
  };

  CoupledSystem(const Network& network, const UnknownLayout& layout,
                const GasConstants& constants, CouplingKind coupling,
                LoadProfileKind profile, const SolverConfig& config, Mode mode);

  void set_time(double t_s) { time_ = t_s; }
  double time() const { return time_; }
  void set_previous(const Eigen::VectorXd& x_old);

  int size() const override { return layout_.total; }
  void residual(const Eigen::VectorXd& x, Eigen::VectorXd& r) const override;
  void jacobian(const Eigen::VectorXd& x,
                Eigen::SparseMatrix<double>& jac) const override;
  bool iterate_ok(const Eigen::VectorXd& x) const override;
  std::string describe_row(int row) const override;

  const std::vector<RowInfo>& rows() const { return rows_; }
  const GasLaw& law() const { return law_; }
  const PipeModel& pipe_model(int pipe_block) const { return pipe_models_[pipe_block]; }
  const Network& network() const { return network_; }
  const UnknownLayout& layout() const { return layout_; }
  CouplingKind node_coupling(int gas_node) const { return node_coupling_[gas_node]; }
  double load_factor(double t_s) const;

  /// Uniform start state: density from the anchor pressure, zero flows,
  /// voltage setpoints, spec powers at the current time.
  Eigen::VectorXd flat_state(double anchor_pressure_pa) const;

  struct EndState {
    double rho = 0.0;
    double q = 0.0;
    std::optional<double> area;
  };
  EndState end_state(const Eigen::VectorXd& x,
                     const Network::IncidentEnd& end) const;

  /// Pressure [Pa] seen by a gas node through its first incident end.
  double node_pressure_pa(const Eigen::VectorXd& x, int gas_node) const;

  /// Recomputed node balance (signed end flows plus boundary term) [m^3/s].
  double node_balance(const Eigen::VectorXd& x, int gas_node, double t_s) const;

  /// Largest gas velocity magnitude over all pipe grid points [m/s].
  double max_velocity(const Eigen::VectorXd& x) const;

  // residual row scales: momentum and pressure rows are measured in bar-like
  // units, Bernoulli rows in units of c_vac^2
  double momentum_row_scale() const { return 1e-5; }
  double pressure_row_scale() const { return 1e-5; }
  double bernoulli_row_scale() const { return 1.0 / law_.c_vac_sq(); }

 private:
  void build_rows();
  void analytic_jacobian(const Eigen::VectorXd& x,
                         Eigen::SparseMatrix<double>& jac) const;
  void finite_difference_jacobian(const Eigen::VectorXd& x,
                                  Eigen::SparseMatrix<double>& jac) const;
  double invariant_value(const EndState& end, CouplingKind kind) const;
  void invariant_derivs(const EndState& end, CouplingKind kind, double& d_rho,
                        double& d_q) const;
  int end_q_index(const Network::IncidentEnd& end) const;
  int end_rho_index(const Network::IncidentEnd& end) const;

  const Network& network_;
  const UnknownLayout& layout_;
  GasLaw law_;
  CouplingKind requested_coupling_;
  LoadProfileKind profile_;
  SolverConfig config_;
  Mode mode_;
  int anchor_node_ = -1;        // stationary only
  double anchor_pressure_pa_ = 0.0;

  std::vector<PipeModel> pipe_models_;          // aligned with layout_.pipes
  std::vector<CouplingKind> node_coupling_;     // effective rule per node
  std::vector<RowInfo> rows_;
  std::vector<std::vector<std::tuple<int, double, double>>> y_rows_;  // (j, g, b)
  std::vector<int> rho_like_indices_;           // all density unknowns
  double time_ = 0.0;
  Eigen::VectorXd x_prev_;

  friend class Simulator;
  void set_anchor(int node, double pressure_pa);
};

}  // namespace gpsim
