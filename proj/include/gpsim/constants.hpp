#pragma once

namespace gpsim {

inline constexpr double kBarToPascal = 1e5;
inline constexpr double kSecondsPerDay = 86400.0;

/// Physical constants of the gas model. Defaults are the benchmark values.
struct GasConstants {
  double rho0 = 0.785;             // density at standard conditions [kg/m^3]
  double p0_bar = 1.01325;         // standard pressure [bar]
  double z0 = 1.005;               // compressibility factor at standard conditions
  double t0_kelvin = 273.15;       // standard temperature [K]
  double t_kelvin = 283.15;        // gas temperature [K]
  double alpha_per_bar = -0.00224; // compressibility slope [1/bar]
  double viscosity = 1e-5;         // dynamic viscosity [kg/(m s)]

  /// Vacuum-limit sound speed squared [m^2/s^2],
  /// c^2 = (p0 / z0) (T / T0) / rho0 with p0 in Pa.
  double c_vac_sq() const;
  double c_vac() const;

  /// Throws ValidationError if any value is outside its admissible range.
  void validate() const;
};

/// Efficiencies and heating values behind the gas/power conversion factors.
struct ConversionFactors {
  double eta_gtp = 0.4;            // gas-to-power efficiency (lower heating value)
  double eta_ptg = 0.8;            // power-to-gas efficiency (upper heating value)
  double heating_lower = 40.0;     // lower heating value L [MJ/kg]
  double upper_factor = 1.11;      // U = upper_factor * L

  double heating_upper() const { return upper_factor * heating_lower; }
  // E_GtP = 1 / (rho0 L eta_GtP), E_PtG = eta_PtG / (rho0 U), both [m^3/MJ]
  double e_gtp(double rho0) const;
  double e_ptg(double rho0) const;

  void validate() const;
};

}  // namespace gpsim
