#include "gpsim/gas_law.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gpsim/errors.hpp"

namespace gpsim {

GasLaw::GasLaw(const GasConstants& constants)
    : rho0_(constants.rho0),
      p0_pa_(constants.p0_bar * kBarToPascal),
      alpha_pa_(constants.alpha_per_bar / kBarToPascal),
      c2_(constants.c_vac_sq()) {}

double GasLaw::c_vac() const { return std::sqrt(c2_); }

double GasLaw::pressure(double rho) const {
  if (rho <= 0.0)
    throw ValidationError("pressure law evaluated at non-positive density " +
                          std::to_string(rho));
  const double denom = 1.0 - alpha_pa_ * c2_ * rho;
  if (denom <= 0.0)
    throw ValidationError("pressure law denominator not positive at density " +
                          std::to_string(rho));
  return c2_ * rho / denom;
}

double GasLaw::dpressure_drho(double rho) const {
  const double denom = 1.0 - alpha_pa_ * c2_ * rho;
  return c2_ / (denom * denom);
}

double GasLaw::density(double p) const {
  if (p <= 0.0)
    throw ValidationError("density requested at non-positive pressure " +
                          std::to_string(p / kBarToPascal) + " bar");
  const double z = compressibility(p);
  if (z <= 0.0)
    throw ValidationError("compressibility factor not positive at " +
                          std::to_string(p / kBarToPascal) +
                          " bar; outside the validity range of the pressure law");
  return p / (c2_ * z);
}

double GasLaw::density_upper_bound() const {
  if (alpha_pa_ <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (alpha_pa_ * c2_);
}

double GasLaw::velocity(double rho, double q, double area) const {
  return rho0_ * q / (rho * area);
}

double GasLaw::bernoulli(double rho, double q, double area) const {
  const double p = pressure(rho);
  const double v = velocity(rho, q, area);
  return 0.5 * v * v + c2_ * (std::log(p / p0_pa_) + alpha_pa_ * (p - p0_pa_));
}

double GasLaw::bernoulli_from_pressure(double p, double q, double area) const {
  return bernoulli(density(p), q, area);
}

void GasLaw::bernoulli_derivs(double rho, double q, double area,
                              double& d_rho, double& d_q) const {
  // d/drho of the potential term is p'(rho)/rho; the kinetic term contributes
  // -v^2/rho in rho and v rho0/(rho area) in q.
  const double v = velocity(rho, q, area);
  d_rho = (dpressure_drho(rho) - v * v) / rho;
  d_q = v * rho0_ / (rho * area);
}

}  // namespace gpsim
