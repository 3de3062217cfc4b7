#include "gpsim/pipe_flow.hpp"

#include <cmath>

namespace gpsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PipeModel::PipeModel(const GasLaw& law, double diameter, double roughness,
                     double viscosity)
    : law_(law),
      diameter_(diameter),
      area_(kPi * diameter * diameter / 4.0),
      friction_(diameter, roughness, viscosity, law.rho0(), area_) {}

double PipeModel::flux_mass(double q) const { return law_.rho0() / area_ * q; }

double PipeModel::flux_momentum(double rho, double q) const {
  return area_ / law_.rho0() * law_.pressure(rho) +
         law_.rho0() / area_ * q * q / rho;
}

void PipeModel::flux_momentum_derivs(double rho, double q, double& d_rho,
                                     double& d_q) const {
  const double r = law_.rho0() / area_;
  d_rho = area_ / law_.rho0() * law_.dpressure_drho(rho) - r * q * q / (rho * rho);
  d_q = 2.0 * r * q / rho;
}

double PipeModel::source_momentum(double rho, double q) const {
  const double lambda = friction_.lambda_of_flow(q);
  return -lambda / (2.0 * diameter_) * law_.rho0() / area_ * q * std::abs(q) / rho;
}

void PipeModel::source_momentum_derivs(double rho, double q, double& d_rho,
                                       double& d_q) const {
  const double lambda = friction_.lambda_of_flow(q);
  const double dlambda = friction_.dlambda_dflow(q);
  const double c = law_.rho0() / (2.0 * diameter_ * area_);
  d_rho = c * lambda * q * std::abs(q) / (rho * rho);
  // d/dq (q|q|) = 2|q|
  d_q = -c * (dlambda * q * std::abs(q) + lambda * 2.0 * std::abs(q)) / rho;
}

std::array<double, 2> PipeModel::cell_residual(const PipePoint& old_l,
                                               const PipePoint& old_r,
                                               const PipePoint& nu_l,
                                               const PipePoint& nu_r, double dt,
                                               double dx, bool steady) const {
  const double r = dt / dx;
  std::array<double, 2> res{};
  res[0] = r * (flux_mass(nu_r.q) - flux_mass(nu_l.q));
  res[1] = r * (flux_momentum(nu_r.rho, nu_r.q) - flux_momentum(nu_l.rho, nu_l.q)) -
           dt * 0.5 * (source_momentum(nu_r.rho, nu_r.q) +
                       source_momentum(nu_l.rho, nu_l.q));
  if (!steady) {
    res[0] += 0.5 * (nu_l.rho + nu_r.rho) - 0.5 * (old_l.rho + old_r.rho);
    res[1] += 0.5 * (nu_l.q + nu_r.q) - 0.5 * (old_l.q + old_r.q);
  }
  return res;
}

std::array<std::array<double, 4>, 2> PipeModel::cell_jacobian(
    const PipePoint& nu_l, const PipePoint& nu_r, double dt, double dx,
    bool steady) const {
  const double r = dt / dx;
  const double q_coeff = r * law_.rho0() / area_;

  double fl_rho, fl_q, fr_rho, fr_q;
  flux_momentum_derivs(nu_l.rho, nu_l.q, fl_rho, fl_q);
  flux_momentum_derivs(nu_r.rho, nu_r.q, fr_rho, fr_q);
  double sl_rho, sl_q, sr_rho, sr_q;
  source_momentum_derivs(nu_l.rho, nu_l.q, sl_rho, sl_q);
  source_momentum_derivs(nu_r.rho, nu_r.q, sr_rho, sr_q);

  const double t = steady ? 0.0 : 0.5;
  std::array<std::array<double, 4>, 2> jac{};
  // columns: rho_l, q_l, rho_r, q_r
  jac[0] = {t, -q_coeff, t, q_coeff};
  jac[1] = {-r * fl_rho - dt * 0.5 * sl_rho, t - r * fl_q - dt * 0.5 * sl_q,
            r * fr_rho - dt * 0.5 * sr_rho, t + r * fr_q - dt * 0.5 * sr_q};
  return jac;
}

}  // namespace gpsim
