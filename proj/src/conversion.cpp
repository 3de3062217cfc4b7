#include "gpsim/conversion.hpp"

#include <algorithm>
#include <cmath>

namespace gpsim {

double smooth_transition(double x, double a, double b, double eps) {
  const double u = x / eps;
  return x * (0.5 * (a + b) - 0.75 * (b - a) * u + 0.25 * (b - a) * u * u * u);
}

double smooth_transition_dx(double x, double a, double b, double eps) {
  const double u = x / eps;
  return 0.5 * (a + b) - 1.5 * (b - a) * u + (b - a) * u * u * u;
}

double conversion_flow(double p_mw, double e_gtp, double e_ptg, double eps_mw) {
  if (p_mw < -eps_mw) return e_ptg * p_mw;
  if (p_mw > eps_mw) return e_gtp * p_mw;
  return smooth_transition(p_mw, e_gtp, e_ptg, eps_mw);
}

double conversion_flow_dp(double p_mw, double e_gtp, double e_ptg, double eps_mw) {
  if (p_mw < -eps_mw) return e_ptg;
  if (p_mw > eps_mw) return e_gtp;
  return smooth_transition_dx(p_mw, e_gtp, e_ptg, eps_mw);
}

double conversion_min_slope(double e_gtp, double e_ptg) {
  // S'(u) = (a+b)/2 - (3/2)(b-a)u + (b-a)u^3 on u in [-1, 1]; candidates are
  // the interval ends and the interior stationary points u = +-1/sqrt(2).
  const double a = e_gtp, b = e_ptg;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double m = std::min(a, b);
  for (double u : {-inv_sqrt2, inv_sqrt2}) {
    const double s = 0.5 * (a + b) - 1.5 * (b - a) * u + (b - a) * u * u * u;
    m = std::min(m, s);
  }
  return m;
}

}  // namespace gpsim
