#include "gpsim/friction.hpp"

#include <cmath>
#include <string>

#include "gpsim/errors.hpp"

namespace gpsim {

namespace {
constexpr double kFixedPointTol = 1e-12;
constexpr int kMaxFixedPointIters = 50;
constexpr double kLog10 = 2.302585092994045684;  // ln 10
}  // namespace

ColebrookFriction::ColebrookFriction(double diameter, double roughness,
                                     double viscosity, double rho0, double area,
                                     double re_min)
    : diameter_(diameter),
      kappa_(roughness / (3.71 * diameter)),
      flow_to_re_(diameter * rho0 / (area * viscosity)),
      re_min_(re_min) {
  if (diameter <= 0 || roughness <= 0 || viscosity <= 0 || area <= 0)
    throw ValidationError("friction model requires positive pipe geometry");
}

double ColebrookFriction::reynolds(double q) const {
  const double re = flow_to_re_ * std::abs(q);
  return re < re_min_ ? re_min_ : re;
}

double ColebrookFriction::rough_limit_lambda() const {
  const double x = -2.0 * std::log10(kappa_);
  return 1.0 / (x * x);
}

double ColebrookFriction::solve_x(double re) const {
  // The map g(x) = -2 log10(2.51 x / re + kappa) is a contraction for the
  // Reynolds numbers admitted here; start from the fully rough limit.
  double x = -2.0 * std::log10(kappa_);
  double damping = 1.0;
  double prev_step = 0.0;
  for (int i = 0; i < kMaxFixedPointIters; ++i) {
    const double g = -2.0 * std::log10(2.51 * x / re + kappa_);
    const double step = g - x;
    if (std::abs(step) <= kFixedPointTol) return x + step;
    if (i > 0 && std::abs(step) > std::abs(prev_step)) damping *= 0.5;
    x += damping * step;
    prev_step = step;
  }
  throw ConvergenceError("Colebrook fixed point did not converge for Re = " +
                             std::to_string(re),
                         {});
}

double ColebrookFriction::lambda_of_reynolds(double re) const {
  const double x = solve_x(re);
  return 1.0 / (x * x);
}

double ColebrookFriction::lambda_of_flow(double q) const {
  return lambda_of_reynolds(reynolds(q));
}

double ColebrookFriction::dlambda_dflow(double q) const {
  const double re_raw = flow_to_re_ * std::abs(q);
  if (re_raw <= re_min_) return 0.0;  // clamped: lambda constant
  const double re = re_raw;
  const double x = solve_x(re);
  // Implicit differentiation of x = g(x, Re):
  //   dx/dRe = g_Re / (1 - g_x),  lambda = x^-2.
  const double arg = 2.51 * x / re + kappa_;
  const double g_x = -2.0 / kLog10 * (2.51 / re) / arg;
  const double g_re = 2.0 / kLog10 * (2.51 * x / (re * re)) / arg;
  const double dx_dre = g_re / (1.0 - g_x);
  const double dlambda_dre = -2.0 / (x * x * x) * dx_dre;
  const double dre_dq = flow_to_re_ * (q >= 0 ? 1.0 : -1.0);
  return dlambda_dre * dre_dq;
}

}  // namespace gpsim
