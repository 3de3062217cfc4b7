#include "gpsim/coupled_system.hpp"

#include <algorithm>
#include <cmath>

#include "gpsim/conversion.hpp"
#include "gpsim/errors.hpp"

namespace gpsim {

CoupledSystem::CoupledSystem(const Network& network, const UnknownLayout& layout,
                             const GasConstants& constants, CouplingKind coupling,
                             LoadProfileKind profile, const SolverConfig& config,
                             Mode mode)
    : network_(network),
      layout_(layout),
      law_(constants),
      requested_coupling_(coupling),
      profile_(profile),
      config_(config),
      mode_(mode) {
  pipe_models_.reserve(layout_.pipes.size());
  for (const auto& block : layout_.pipes) {
    const auto& edge = network_.gas_edges[block.edge];
    pipe_models_.emplace_back(law_, edge.diameter, edge.roughness,
                              constants.viscosity);
  }
  node_coupling_.resize(network_.gas_nodes.size());
  for (std::size_t n = 0; n < network_.gas_nodes.size(); ++n)
    node_coupling_[n] =
        network_.effective_coupling(static_cast<int>(n), requested_coupling_);

  const Admittance y = build_admittance(network_);
  y_rows_.resize(y.n);
  for (int col = 0; col < y.g.outerSize(); ++col) {
    Eigen::SparseMatrix<double>::InnerIterator ig(y.g, col);
    Eigen::SparseMatrix<double>::InnerIterator ib(y.b, col);
    for (; ig; ++ig, ++ib)
      y_rows_[ig.row()].emplace_back(col, ig.value(), ib.value());
  }
  for (auto& row : y_rows_)
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });

  for (const auto& block : layout_.pipes)
    for (int j = 0; j <= block.cells; ++j)
      rho_like_indices_.push_back(layout_.rho_index(block, j));
  for (const auto& block : layout_.non_pipes) {
    rho_like_indices_.push_back(block.first);
    rho_like_indices_.push_back(block.first + 2);
  }
  for (int first : layout_.conversion_end_first) {
    rho_like_indices_.push_back(first);
    rho_like_indices_.push_back(first + 2);
  }

  build_rows();
}

void CoupledSystem::build_rows() {
  rows_.clear();
  rows_.reserve(layout_.total);
  for (std::size_t pb = 0; pb < layout_.pipes.size(); ++pb) {
    for (int j = 1; j <= layout_.pipes[pb].cells; ++j) {
      rows_.push_back({RowKind::GasMass, static_cast<int>(pb), j});
      rows_.push_back({RowKind::GasMomentum, static_cast<int>(pb), j});
    }
  }
  for (std::size_t np = 0; np < layout_.non_pipes.size(); ++np) {
    rows_.push_back({RowKind::IdentityRho, static_cast<int>(np), 0});
    rows_.push_back({RowKind::IdentityQ, static_cast<int>(np), 0});
  }
  for (std::size_t c = 0; c < network_.conversions.size(); ++c) {
    rows_.push_back({RowKind::IdentityRho, static_cast<int>(c), 1});
    rows_.push_back({RowKind::IdentityQ, static_cast<int>(c), 1});
    rows_.push_back({RowKind::ConversionTie, static_cast<int>(c), 0});
    rows_.push_back({RowKind::ConversionLaw, static_cast<int>(c), 0});
  }
  for (std::size_t n = 0; n < network_.gas_nodes.size(); ++n) {
    if (mode_ == Mode::Stationary && static_cast<int>(n) == anchor_node_)
      rows_.push_back({RowKind::AnchorPressure, static_cast<int>(n), 0});
    else
      rows_.push_back({RowKind::NodeBalance, static_cast<int>(n), 0});
    const int deg = network_.degree(static_cast<int>(n));
    for (int k = 1; k < deg; ++k)
      rows_.push_back({RowKind::NodeInvariant, static_cast<int>(n), k});
  }
  for (std::size_t b = 0; b < network_.buses.size(); ++b) {
    rows_.push_back({RowKind::PfActive, static_cast<int>(b), 0});
    rows_.push_back({RowKind::PfReactive, static_cast<int>(b), 0});
  }
  for (std::size_t b = 0; b < network_.buses.size(); ++b) {
    switch (network_.buses[b].kind) {
      case BusKind::PQ:
        rows_.push_back({RowKind::SpecP, static_cast<int>(b), 0});
        rows_.push_back({RowKind::SpecQ, static_cast<int>(b), 0});
        break;
      case BusKind::PV:
        rows_.push_back({RowKind::SpecP, static_cast<int>(b), 0});
        rows_.push_back({RowKind::SpecV, static_cast<int>(b), 0});
        break;
      case BusKind::Slack:
        rows_.push_back({RowKind::SpecV, static_cast<int>(b), 0});
        rows_.push_back({RowKind::SpecAngle, static_cast<int>(b), 0});
        break;
    }
  }
  if (static_cast<int>(rows_.size()) != layout_.total)
    throw Error("row count " + std::to_string(rows_.size()) +
                " does not match unknown count " + std::to_string(layout_.total));
}

void CoupledSystem::set_anchor(int node, double pressure_pa) {
  anchor_node_ = node;
  anchor_pressure_pa_ = pressure_pa;
  build_rows();
}

void CoupledSystem::set_previous(const Eigen::VectorXd& x_old) {
  if (x_old.size() != layout_.total)
    throw ValidationError("previous state has wrong size");
  x_prev_ = x_old;
}

double CoupledSystem::load_factor(double t_s) const {
  return profile_ == LoadProfileKind::SinusoidalDay ? day_factor(t_s) : 1.0;
}

int CoupledSystem::end_rho_index(const Network::IncidentEnd& end) const {
  if (end.owner == Network::IncidentEnd::Owner::Conversion)
    return layout_.conversion_end_first[end.index];
  const auto& edge = network_.gas_edges[end.index];
  if (edge.is_pipe()) {
    const auto& block = layout_.pipes[layout_.pipe_block_of_edge[end.index]];
    return layout_.rho_index(block, end.at_to ? block.cells : 0);
  }
  const auto& block = layout_.non_pipes[layout_.non_pipe_block_of_edge[end.index]];
  return end.at_to ? block.first + 2 : block.first;
}

int CoupledSystem::end_q_index(const Network::IncidentEnd& end) const {
  return end_rho_index(end) + 1;
}

CoupledSystem::EndState CoupledSystem::end_state(
    const Eigen::VectorXd& x, const Network::IncidentEnd& end) const {
  EndState s;
  const int rho = end_rho_index(end);
  s.rho = x[rho];
  s.q = x[rho + 1];
  s.area = network_.end_area(end);
  return s;
}

double CoupledSystem::node_pressure_pa(const Eigen::VectorXd& x,
                                       int gas_node) const {
  const auto& ends = network_.incident[gas_node];
  return law_.pressure(x[end_rho_index(ends.front())]);
}

double CoupledSystem::node_balance(const Eigen::VectorXd& x, int gas_node,
                                   double t_s) const {
  double sum = network_.gas_nodes[gas_node].balance_term(t_s);
  for (const auto& end : network_.incident[gas_node])
    sum += (end.at_to ? 1.0 : -1.0) * x[end_q_index(end)];
  return sum;
}

double CoupledSystem::max_velocity(const Eigen::VectorXd& x) const {
  double vmax = 0.0;
  for (std::size_t pb = 0; pb < layout_.pipes.size(); ++pb) {
    const auto& block = layout_.pipes[pb];
    const double area = pipe_models_[pb].area();
    for (int j = 0; j <= block.cells; ++j) {
      const double rho = x[layout_.rho_index(block, j)];
      const double q = x[layout_.q_index(block, j)];
      vmax = std::max(vmax, std::abs(law_.velocity(rho, q, area)));
    }
  }
  return vmax;
}

double CoupledSystem::invariant_value(const EndState& end,
                                      CouplingKind kind) const {
  if (kind == CouplingKind::Pressure) return law_.pressure(end.rho);
  if (!end.area.has_value())
    throw Error("Bernoulli invariant requested at an end without a cross section");
  return law_.bernoulli(end.rho, end.q, *end.area);
}

void CoupledSystem::invariant_derivs(const EndState& end, CouplingKind kind,
                                     double& d_rho, double& d_q) const {
  if (kind == CouplingKind::Pressure) {
    d_rho = law_.dpressure_drho(end.rho);
    d_q = 0.0;
    return;
  }
  law_.bernoulli_derivs(end.rho, end.q, *end.area, d_rho, d_q);
}

bool CoupledSystem::iterate_ok(const Eigen::VectorXd& x) const {
  for (int idx : rho_like_indices_)
    if (!law_.admissible_density(x[idx])) return false;
  for (std::size_t b = 0; b < network_.buses.size(); ++b)
    if (x[layout_.v_index(static_cast<int>(b))] <= 0.0) return false;
  return true;
}

void CoupledSystem::residual(const Eigen::VectorXd& x, Eigen::VectorXd& r) const {
  if (x.size() != layout_.total)
    throw ValidationError("state vector has wrong size");
  if (mode_ == Mode::Transient && x_prev_.size() != layout_.total)
    throw Error("previous state not set");

  for (std::size_t pb = 0; pb < layout_.pipes.size(); ++pb) {
    const auto& block = layout_.pipes[pb];
    for (int j = 0; j <= block.cells; ++j) {
      const double rho = x[layout_.rho_index(block, j)];
      if (!law_.admissible_density(rho))
        throw ValidationError("non-positive density at pipe '" +
                              network_.gas_edges[block.edge].id + "' grid point " +
                              std::to_string(j));
    }
  }

  r.setZero(layout_.total);
  const double t = time_;
  const double dt = config_.dt_s;
  const bool steady = mode_ == Mode::Stationary;
  const double f = load_factor(t);
  const double base = network_.base_mva;

  Eigen::VectorXd v(network_.buses.size()), phi(network_.buses.size());
  for (std::size_t b = 0; b < network_.buses.size(); ++b) {
    v[b] = x[layout_.v_index(static_cast<int>(b))];
    phi[b] = x[layout_.phi_index(static_cast<int>(b))];
  }

  for (std::size_t row = 0; row < rows_.size(); ++row) {
    const RowInfo& info = rows_[row];
    switch (info.kind) {
      case RowKind::GasMass:
      case RowKind::GasMomentum: {
        if (info.kind == RowKind::GasMomentum) break;  // handled with the mass row
        const auto& block = layout_.pipes[info.entity];
        const auto& model = pipe_models_[info.entity];
        const int j = info.sub;
        const PipePoint nu_l{x[layout_.rho_index(block, j - 1)],
                             x[layout_.q_index(block, j - 1)]};
        const PipePoint nu_r{x[layout_.rho_index(block, j)],
                             x[layout_.q_index(block, j)]};
        PipePoint old_l = nu_l, old_r = nu_r;
        if (!steady) {
          old_l = {x_prev_[layout_.rho_index(block, j - 1)],
                   x_prev_[layout_.q_index(block, j - 1)]};
          old_r = {x_prev_[layout_.rho_index(block, j)],
                   x_prev_[layout_.q_index(block, j)]};
        }
        const auto res =
            model.cell_residual(old_l, old_r, nu_l, nu_r, dt, block.dx, steady);
        r[row] = res[0];
        r[row + 1] = momentum_row_scale() * res[1];
        break;
      }
      case RowKind::IdentityRho: {
        const int first = info.sub == 0 ? layout_.non_pipes[info.entity].first
                                        : layout_.conversion_end_first[info.entity];
        r[row] = x[first] - x[first + 2];
        break;
      }
      case RowKind::IdentityQ: {
        const int first = info.sub == 0 ? layout_.non_pipes[info.entity].first
                                        : layout_.conversion_end_first[info.entity];
        r[row] = x[first + 1] - x[first + 3];
        break;
      }
      case RowKind::ConversionTie: {
        const int first = layout_.conversion_end_first[info.entity];
        r[row] = x[first + 3] - x[layout_.conversion_flow[info.entity]];
        break;
      }
      case RowKind::ConversionLaw: {
        const auto& conv = network_.conversions[info.entity];
        const double p_mw = x[layout_.p_index(conv.bus)] * base;
        r[row] = x[layout_.conversion_flow[info.entity]] -
                 conversion_flow(p_mw, conv);
        break;
      }
      case RowKind::NodeBalance:
        r[row] = node_balance(x, info.entity, t);
        break;
      case RowKind::AnchorPressure:
        r[row] = pressure_row_scale() *
                 (node_pressure_pa(x, info.entity) - anchor_pressure_pa_);
        break;
      case RowKind::NodeInvariant: {
        const auto& ends = network_.incident[info.entity];
        const CouplingKind kind = node_coupling_[info.entity];
        const double scale = kind == CouplingKind::Pressure
                                 ? pressure_row_scale()
                                 : bernoulli_row_scale();
        const double h_prev =
            invariant_value(end_state(x, ends[info.sub - 1]), kind);
        const double h_this = invariant_value(end_state(x, ends[info.sub]), kind);
        r[row] = scale * (h_this - h_prev);
        break;
      }
      case RowKind::PfActive: {
        const int i = info.entity;
        double sum = 0.0;
        for (const auto& [j, g, b] : y_rows_[i]) {
          const double th = phi[i] - phi[j];
          sum += v[i] * v[j] * (g * std::cos(th) + b * std::sin(th));
        }
        r[row] = x[layout_.p_index(i)] - sum;
        break;
      }
      case RowKind::PfReactive: {
        const int i = info.entity;
        double sum = 0.0;
        for (const auto& [j, g, b] : y_rows_[i]) {
          const double th = phi[i] - phi[j];
          sum += v[i] * v[j] * (g * std::sin(th) - b * std::cos(th));
        }
        r[row] = x[layout_.q_bus_index(i)] - sum;
        break;
      }
      case RowKind::SpecP: {
        const auto& bus = network_.buses[info.entity];
        const double demand_factor = bus.kind == BusKind::PQ ? f : 1.0;
        const double p_spec = (bus.gen_p_mw - bus.demand_p_mw * demand_factor) / base;
        r[row] = x[layout_.p_index(info.entity)] - p_spec;
        break;
      }
      case RowKind::SpecQ: {
        const auto& bus = network_.buses[info.entity];
        const double q_spec = (bus.gen_q_mvar - bus.demand_q_mvar * f) / base;
        r[row] = x[layout_.q_bus_index(info.entity)] - q_spec;
        break;
      }
      case RowKind::SpecV:
        r[row] = x[layout_.v_index(info.entity)] -
                 network_.buses[info.entity].v_setpoint;
        break;
      case RowKind::SpecAngle:
        r[row] = x[layout_.phi_index(info.entity)] -
                 network_.buses[info.entity].angle_rad;
        break;
    }
  }
}

void CoupledSystem::jacobian(const Eigen::VectorXd& x,
                             Eigen::SparseMatrix<double>& jac) const {
  if (config_.jacobian == JacobianMode::FiniteDifference)
    finite_difference_jacobian(x, jac);
  else
    analytic_jacobian(x, jac);
}

void CoupledSystem::analytic_jacobian(const Eigen::VectorXd& x,
                                      Eigen::SparseMatrix<double>& jac) const {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(8 * rows_.size());
  const double dt = config_.dt_s;
  const bool steady = mode_ == Mode::Stationary;
  const double base = network_.base_mva;

  Eigen::VectorXd v(network_.buses.size()), phi(network_.buses.size());
  for (std::size_t b = 0; b < network_.buses.size(); ++b) {
    v[b] = x[layout_.v_index(static_cast<int>(b))];
    phi[b] = x[layout_.phi_index(static_cast<int>(b))];
  }

  for (std::size_t row = 0; row < rows_.size(); ++row) {
    const RowInfo& info = rows_[row];
    switch (info.kind) {
      case RowKind::GasMass: {
        const auto& block = layout_.pipes[info.entity];
        const auto& model = pipe_models_[info.entity];
        const int j = info.sub;
        const PipePoint nu_l{x[layout_.rho_index(block, j - 1)],
                             x[layout_.q_index(block, j - 1)]};
        const PipePoint nu_r{x[layout_.rho_index(block, j)],
                             x[layout_.q_index(block, j)]};
        const auto cj = model.cell_jacobian(nu_l, nu_r, dt, block.dx, steady);
        const int cols[4] = {layout_.rho_index(block, j - 1),
                             layout_.q_index(block, j - 1),
                             layout_.rho_index(block, j),
                             layout_.q_index(block, j)};
        for (int c = 0; c < 4; ++c) {
          if (cj[0][c] != 0.0) trip.emplace_back(row, cols[c], cj[0][c]);
          if (cj[1][c] != 0.0)
            trip.emplace_back(row + 1, cols[c], momentum_row_scale() * cj[1][c]);
        }
        break;
      }
      case RowKind::GasMomentum:
        break;  // emitted with the mass row
      case RowKind::IdentityRho: {
        const int first = info.sub == 0 ? layout_.non_pipes[info.entity].first
                                        : layout_.conversion_end_first[info.entity];
        trip.emplace_back(row, first, 1.0);
        trip.emplace_back(row, first + 2, -1.0);
        break;
      }
      case RowKind::IdentityQ: {
        const int first = info.sub == 0 ? layout_.non_pipes[info.entity].first
                                        : layout_.conversion_end_first[info.entity];
        trip.emplace_back(row, first + 1, 1.0);
        trip.emplace_back(row, first + 3, -1.0);
        break;
      }
      case RowKind::ConversionTie: {
        const int first = layout_.conversion_end_first[info.entity];
        trip.emplace_back(row, first + 3, 1.0);
        trip.emplace_back(row, layout_.conversion_flow[info.entity], -1.0);
        break;
      }
      case RowKind::ConversionLaw: {
        const auto& conv = network_.conversions[info.entity];
        const double p_mw = x[layout_.p_index(conv.bus)] * base;
        trip.emplace_back(row, layout_.conversion_flow[info.entity], 1.0);
        trip.emplace_back(row, layout_.p_index(conv.bus),
                          -conversion_flow_dp(p_mw, conv) * base);
        break;
      }
      case RowKind::NodeBalance: {
        for (const auto& end : network_.incident[info.entity])
          trip.emplace_back(row, end_q_index(end), end.at_to ? 1.0 : -1.0);
        break;
      }
      case RowKind::AnchorPressure: {
        const auto& end = network_.incident[info.entity].front();
        const int rho = end_rho_index(end);
        trip.emplace_back(row, rho,
                          pressure_row_scale() * law_.dpressure_drho(x[rho]));
        break;
      }
      case RowKind::NodeInvariant: {
        const auto& ends = network_.incident[info.entity];
        const CouplingKind kind = node_coupling_[info.entity];
        const double scale = kind == CouplingKind::Pressure
                                 ? pressure_row_scale()
                                 : bernoulli_row_scale();
        for (int side = 0; side < 2; ++side) {
          const auto& end = ends[info.sub - 1 + side];
          const double sign = side == 0 ? -1.0 : 1.0;
          double d_rho, d_q;
          invariant_derivs(end_state(x, end), kind, d_rho, d_q);
          const int rho = end_rho_index(end);
          trip.emplace_back(row, rho, sign * scale * d_rho);
          if (d_q != 0.0) trip.emplace_back(row, rho + 1, sign * scale * d_q);
        }
        break;
      }
      case RowKind::PfActive: {
        const int i = info.entity;
        trip.emplace_back(row, layout_.p_index(i), 1.0);
        double dv_i = 0.0, dphi_i = 0.0;
        for (const auto& [j, g, b] : y_rows_[i]) {
          const double th = phi[i] - phi[j];
          const double c = std::cos(th), s = std::sin(th);
          if (j == i) {
            dv_i += 2.0 * v[i] * g;
          } else {
            dv_i += v[j] * (g * c + b * s);
            dphi_i += v[i] * v[j] * (-g * s + b * c);
            trip.emplace_back(row, layout_.v_index(j), -v[i] * (g * c + b * s));
            trip.emplace_back(row, layout_.phi_index(j),
                              -v[i] * v[j] * (g * s - b * c));
          }
        }
        trip.emplace_back(row, layout_.v_index(i), -dv_i);
        trip.emplace_back(row, layout_.phi_index(i), -dphi_i);
        break;
      }
      case RowKind::PfReactive: {
        const int i = info.entity;
        trip.emplace_back(row, layout_.q_bus_index(i), 1.0);
        double dv_i = 0.0, dphi_i = 0.0;
        for (const auto& [j, g, b] : y_rows_[i]) {
          const double th = phi[i] - phi[j];
          const double c = std::cos(th), s = std::sin(th);
          if (j == i) {
            dv_i += -2.0 * v[i] * b;
          } else {
            dv_i += v[j] * (g * s - b * c);
            dphi_i += v[i] * v[j] * (g * c + b * s);
            trip.emplace_back(row, layout_.v_index(j), -v[i] * (g * s - b * c));
            trip.emplace_back(row, layout_.phi_index(j),
                              v[i] * v[j] * (g * c + b * s));
          }
        }
        trip.emplace_back(row, layout_.v_index(i), -dv_i);
        trip.emplace_back(row, layout_.phi_index(i), -dphi_i);
        break;
      }
      case RowKind::SpecP:
        trip.emplace_back(row, layout_.p_index(info.entity), 1.0);
        break;
      case RowKind::SpecQ:
        trip.emplace_back(row, layout_.q_bus_index(info.entity), 1.0);
        break;
      case RowKind::SpecV:
        trip.emplace_back(row, layout_.v_index(info.entity), 1.0);
        break;
      case RowKind::SpecAngle:
        trip.emplace_back(row, layout_.phi_index(info.entity), 1.0);
        break;
    }
  }

  jac.resize(layout_.total, layout_.total);
  jac.setFromTriplets(trip.begin(), trip.end());
}

void CoupledSystem::finite_difference_jacobian(
    const Eigen::VectorXd& x, Eigen::SparseMatrix<double>& jac) const {
  const int n = layout_.total;
  if (n > 5000)
    throw ValidationError("finite-difference Jacobian is for verification on "
                          "small systems only");
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd xp = x, xm = x, rp(n), rm(n);
  for (int col = 0; col < n; ++col) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[col]));
    xp[col] = x[col] + h;
    xm[col] = x[col] - h;
    residual(xp, rp);
    residual(xm, rm);
    for (int row = 0; row < n; ++row) {
      const double d = (rp[row] - rm[row]) / (2.0 * h);
      if (d != 0.0) trip.emplace_back(row, col, d);
    }
    xp[col] = x[col];
    xm[col] = x[col];
  }
  jac.resize(n, n);
  jac.setFromTriplets(trip.begin(), trip.end());
}

Eigen::VectorXd CoupledSystem::flat_state(double anchor_pressure_pa) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(layout_.total);
  const double rho = law_.density(anchor_pressure_pa);
  for (int idx : rho_like_indices_) x[idx] = rho;

  const double f = load_factor(time_);
  const double base = network_.base_mva;
  for (std::size_t b = 0; b < network_.buses.size(); ++b) {
    const auto& bus = network_.buses[b];
    const int i = static_cast<int>(b);
    switch (bus.kind) {
      case BusKind::PQ:
        x[layout_.v_index(i)] = 1.0;
        x[layout_.phi_index(i)] = 0.0;
        x[layout_.p_index(i)] = (bus.gen_p_mw - bus.demand_p_mw * f) / base;
        x[layout_.q_bus_index(i)] = (bus.gen_q_mvar - bus.demand_q_mvar * f) / base;
        break;
      case BusKind::PV:
        x[layout_.v_index(i)] = bus.v_setpoint;
        x[layout_.phi_index(i)] = 0.0;
        x[layout_.p_index(i)] = (bus.gen_p_mw - bus.demand_p_mw) / base;
        x[layout_.q_bus_index(i)] = 0.0;
        break;
      case BusKind::Slack:
        x[layout_.v_index(i)] = bus.v_setpoint;
        x[layout_.phi_index(i)] = bus.angle_rad;
        x[layout_.p_index(i)] = 0.0;
        x[layout_.q_bus_index(i)] = 0.0;
        break;
    }
  }
  return x;
}

std::string CoupledSystem::describe_row(int row) const {
  const RowInfo& info = rows_.at(row);
  switch (info.kind) {
    case RowKind::GasMass:
      return "gas mass: pipe '" +
             network_.gas_edges[layout_.pipes[info.entity].edge].id + "' cell " +
             std::to_string(info.sub);
    case RowKind::GasMomentum:
      return "gas momentum: pipe '" +
             network_.gas_edges[layout_.pipes[info.entity].edge].id + "' cell " +
             std::to_string(info.sub);
    case RowKind::IdentityRho:
      return info.sub == 0
                 ? "state identity (rho): edge '" +
                       network_.gas_edges[layout_.non_pipes[info.entity].edge].id + "'"
                 : "state identity (rho): plant '" +
                       network_.conversions[info.entity].id + "'";
    case RowKind::IdentityQ:
      return info.sub == 0
                 ? "state identity (q): edge '" +
                       network_.gas_edges[layout_.non_pipes[info.entity].edge].id + "'"
                 : "state identity (q): plant '" +
                       network_.conversions[info.entity].id + "'";
    case RowKind::ConversionTie:
      return "flow tie: plant '" + network_.conversions[info.entity].id + "'";
    case RowKind::ConversionLaw:
      return "conversion law: plant '" + network_.conversions[info.entity].id + "'";
    case RowKind::NodeBalance:
      return "mass balance: node '" + network_.gas_nodes[info.entity].id + "'";
    case RowKind::AnchorPressure:
      return "anchor pressure: node '" + network_.gas_nodes[info.entity].id + "'";
    case RowKind::NodeInvariant:
      return "coupling invariant " + std::to_string(info.sub) + ": node '" +
             network_.gas_nodes[info.entity].id + "'";
    case RowKind::PfActive:
      return "power flow P: bus '" + network_.buses[info.entity].id + "'";
    case RowKind::PfReactive:
      return "power flow Q: bus '" + network_.buses[info.entity].id + "'";
    case RowKind::SpecP:
      return "bus spec P: bus '" + network_.buses[info.entity].id + "'";
    case RowKind::SpecQ:
      return "bus spec Q: bus '" + network_.buses[info.entity].id + "'";
    case RowKind::SpecV:
      return "bus spec V: bus '" + network_.buses[info.entity].id + "'";
    case RowKind::SpecAngle:
      return "bus spec angle: bus '" + network_.buses[info.entity].id + "'";
  }
  return ResidualSystem::describe_row(row);
}

}  // namespace gpsim
