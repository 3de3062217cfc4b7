#pragma once

#include <array>

#include "gpsim/friction.hpp"
#include "gpsim/gas_law.hpp"

namespace gpsim {

/// One grid-point state of a pipe: density [kg/m^3] and standard volumetric
/// flow [m^3/s].
struct PipePoint {
  double rho;
  double q;
};

/// Discrete model of a single pipe in (density, standard volumetric flow)
/// variables. The rows are the line-density balance law divided by A (mass)
/// and by rho0 (momentum), so a single pipe reproduces the conservative form
/// exactly up to those constant row factors:
///
///   mass:     d/dt rho + (rho0/A) d/dx q                            = 0
///   momentum: d/dt q   + d/dx [ (A/rho0) p(rho) + (rho0/A) q^2/rho ]
///             = -(lambda(q)/(2 d)) (rho0/A) q|q|/rho
class PipeModel {
 public:
  PipeModel(const GasLaw& law, double diameter, double roughness,
            double viscosity);

  double area() const { return area_; }
  double diameter() const { return diameter_; }
  const ColebrookFriction& friction() const { return friction_; }
  const GasLaw& law() const { return law_; }

  double flux_mass(double q) const;               // (rho0/A) q
  double flux_momentum(double rho, double q) const;
  void flux_momentum_derivs(double rho, double q, double& d_rho, double& d_q) const;

  /// Friction source of the momentum row, odd in q and zero at q = 0.
  double source_momentum(double rho, double q) const;
  void source_momentum_derivs(double rho, double q, double& d_rho, double& d_q) const;

  /// Residual of the implicit box scheme on one cell. All starred quantities
  /// (the `nu_*` states) are taken at the new time level:
  ///
  ///   (U*_{l}+U*_{r})/2 - (U_l+U_r)/2 + (dt/dx)(F(U*_r) - F(U*_l))
  ///     - dt (G(U*_r)+G(U*_l))/2 = 0.
  ///
  /// With `steady` the time-difference term is dropped, giving the
  /// time-independent balance scaled by the same dt.
  std::array<double, 2> cell_residual(const PipePoint& old_l, const PipePoint& old_r,
                                      const PipePoint& nu_l, const PipePoint& nu_r,
                                      double dt, double dx, bool steady) const;

  /// Jacobian of cell_residual with respect to (rho_l, q_l, rho_r, q_r) at the
  /// new time level; row-major 2x4.
  std::array<std::array<double, 4>, 2> cell_jacobian(const PipePoint& nu_l,
                                                     const PipePoint& nu_r,
                                                     double dt, double dx,
                                                     bool steady) const;

 private:
  GasLaw law_;
  double diameter_;
  double area_;
  ColebrookFriction friction_;
};

}  // namespace gpsim
