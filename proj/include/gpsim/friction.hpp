#pragma once

namespace gpsim {

/// Turbulent pipe friction factor from the Prandtl-Colebrook relation
///
///   1/sqrt(lambda) = -2 log10( 2.51 / (Re sqrt(lambda)) + k / (3.71 d) ),
///
/// solved by damped fixed-point iteration on x = 1/sqrt(lambda). The Reynolds
/// number is formed from the mass flux rho0 |q| / A so that it is
/// dimensionless for the standard volumetric flow q [m^3/s]:
///
///   Re(q) = d * (rho0 |q| / A) / eta.
///
/// Below `re_min` the Reynolds number is clamped, which keeps lambda bounded
/// and continuous while the q|q| factor of the friction source still vanishes
/// at q = 0.
class ColebrookFriction {
 public:
  ColebrookFriction(double diameter, double roughness, double viscosity,
                    double rho0, double area, double re_min = 100.0);

  double reynolds(double q) const;       // clamped to re_min
  double lambda_of_flow(double q) const;
  double dlambda_dflow(double q) const;  // zero inside the clamped region

  /// Friction factor for a given (already clamped) Reynolds number.
  double lambda_of_reynolds(double re) const;

  /// Fully rough limit lambda = (-2 log10(k/(3.71 d)))^-2.
  double rough_limit_lambda() const;

  double re_min() const { return re_min_; }

 private:
  double solve_x(double re) const;  // fixed point of x = -2 log10(2.51 x/Re + kappa)

  double diameter_;
  double kappa_;  // k / (3.71 d)
  double flow_to_re_;
  double re_min_;
};

}  // namespace gpsim
