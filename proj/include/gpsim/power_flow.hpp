#pragma once

#include <Eigen/Sparse>
#include <utility>

#include "gpsim/network.hpp"

namespace gpsim {

/// Bus admittance matrix Y = G + iB in per unit, stored as two real sparse
/// matrices with identical sparsity (line incidence pattern plus diagonal).
struct Admittance {
  int n = 0;
  Eigen::SparseMatrix<double> g;
  Eigen::SparseMatrix<double> b;
};

/// Assembles the bus admittance matrix from the pi-line model. For a branch
/// from f to t with series admittance y, total charging b_c, turns ratio tau
/// and phase shift sigma (complex tap a = tau e^{i sigma}):
///
///   Y_ff += (y + i b_c/2) / tau^2,  Y_tt += y + i b_c/2,
///   Y_ft += -y / conj(a),           Y_tf += -y / a,
///
/// plus (Gs + i Bs)/baseMVA on the diagonal for bus shunts.
Admittance build_admittance(const Network& network);

/// Daily demand factor 0.9 + 0.4 sin(2 pi t / 24 h); exact at the quarter
/// points of the day.
double day_factor(double t_s);

/// PQ-bus demand at time t: both components scaled by the same day factor.
std::pair<double, double> load_at(double t_s, double p300_mw, double q300_mvar);

/// Net injections implied by the voltage state, in per unit:
///   P_i = sum_j V_i V_j (G_ij cos th_ij + B_ij sin th_ij),
///   Q_i = sum_j V_i V_j (G_ij sin th_ij - B_ij cos th_ij),  th_ij = phi_i - phi_j.
void pf_injections(const Admittance& y, const Eigen::VectorXd& v,
                   const Eigen::VectorXd& phi, Eigen::VectorXd& p_calc,
                   Eigen::VectorXd& q_calc);

/// Residual (P_i - P_calc_i, Q_i - Q_calc_i) for all buses, P rows first.
Eigen::VectorXd pf_residual(const Admittance& y, const Eigen::VectorXd& v,
                            const Eigen::VectorXd& phi, const Eigen::VectorXd& p,
                            const Eigen::VectorXd& q);

}  // namespace gpsim
