#pragma once

#include "gpsim/constants.hpp"

namespace gpsim {

/// Isothermal pressure law with linear compressibility factor z(p) = 1 + alpha p,
/// expressed in SI units (pressure in Pa, density in kg/m^3).
///
///   p(rho) = c^2 rho / (1 - alpha c^2 rho),   rho(p) = p / (c^2 z(p)),
///
/// with c the vacuum-limit sound speed. The two maps are exact inverses.
class GasLaw {
 public:
  explicit GasLaw(const GasConstants& constants);

  double c_vac() const;
  double c_vac_sq() const { return c2_; }
  double rho0() const { return rho0_; }
  double p0() const { return p0_pa_; }  // standard pressure [Pa]

  /// Pressure [Pa] at density rho [kg/m^3]. Throws on rho <= 0 or when the
  /// denominator 1 - alpha c^2 rho is not positive.
  double pressure(double rho) const;
  double dpressure_drho(double rho) const;

  /// Density [kg/m^3] at pressure p [Pa]. Throws when p <= 0 or z(p) <= 0.
  double density(double p) const;

  /// Compressibility factor z(p) = 1 + alpha p, p in Pa.
  double compressibility(double p) const { return 1.0 + alpha_pa_ * p; }

  /// Largest admissible density; infinite when alpha <= 0.
  double density_upper_bound() const;
  bool admissible_density(double rho) const {
    return rho > 0.0 && rho < density_upper_bound();
  }

  /// Bernoulli node invariant: kinetic head of the standard volumetric flow q
  /// through cross section `area` plus the pressure potential [m^2/s^2].
  double bernoulli(double rho, double q, double area) const;
  double bernoulli_from_pressure(double p, double q, double area) const;
  void bernoulli_derivs(double rho, double q, double area,
                        double& d_rho, double& d_q) const;

  /// Flow velocity v = rho0 q / (rho area) [m/s].
  double velocity(double rho, double q, double area) const;

 private:
  double rho0_;
  double p0_pa_;
  double alpha_pa_;  // compressibility slope [1/Pa]
  double c2_;        // c_vac^2 [m^2/s^2]
};

}  // namespace gpsim
