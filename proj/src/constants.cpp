#include "gpsim/constants.hpp"

#include <cmath>

#include "gpsim/errors.hpp"

namespace gpsim {

double GasConstants::c_vac_sq() const {
  return (p0_bar * kBarToPascal / z0) * (t_kelvin / t0_kelvin) / rho0;
}

double GasConstants::c_vac() const { return std::sqrt(c_vac_sq()); }

void GasConstants::validate() const {
  if (rho0 <= 0) throw ValidationError("gas constants: rho0 must be positive");
  if (p0_bar <= 0) throw ValidationError("gas constants: p0 must be positive");
  if (z0 <= 0) throw ValidationError("gas constants: z0 must be positive");
  if (t0_kelvin <= 0 || t_kelvin <= 0)
    throw ValidationError("gas constants: temperatures must be positive");
  if (viscosity <= 0) throw ValidationError("gas constants: viscosity must be positive");
}

double ConversionFactors::e_gtp(double rho0) const {
  return 1.0 / (rho0 * heating_lower * eta_gtp);
}

double ConversionFactors::e_ptg(double rho0) const {
  return eta_ptg / (rho0 * heating_upper());
}

void ConversionFactors::validate() const {
  if (eta_gtp <= 0 || eta_gtp > 1)
    throw ValidationError("conversion factors: eta_gtp must be in (0, 1]");
  if (eta_ptg <= 0 || eta_ptg > 1)
    throw ValidationError("conversion factors: eta_ptg must be in (0, 1]");
  if (heating_lower <= 0)
    throw ValidationError("conversion factors: heating value must be positive");
  if (upper_factor < 1)
    throw ValidationError("conversion factors: upper heating factor must be >= 1");
}

}  // namespace gpsim
