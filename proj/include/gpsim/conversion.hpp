#pragma once

#include "gpsim/network.hpp"

namespace gpsim {

/// Quartic blend used to round the kink of a piecewise-linear law at x = 0:
///
///   S(x, a, b, eps) = x ( (a+b)/2 - (3/4)(b-a) x/eps + ((b-a)/4)(x/eps)^3 ).
///
/// It satisfies S(0) = 0, S(+-eps) = a eps / -b eps, S'(+-eps) = a / b, which
/// makes the composite law C^1 across [-eps, eps].
double smooth_transition(double x, double a, double b, double eps);
double smooth_transition_dx(double x, double a, double b, double eps);

/// Gas flow [m^3/s] drawn (q > 0, gas to power) or injected (q < 0, power to
/// gas) by a plant exchanging active power p_mw with the grid:
///
///   q = E_PtG p           for p < -eps,
///   q = S(p, E_GtP, E_PtG, eps)  for |p| <= eps,
///   q = E_GtP p           for p > eps.
double conversion_flow(double p_mw, double e_gtp, double e_ptg, double eps_mw);
double conversion_flow_dp(double p_mw, double e_gtp, double e_ptg, double eps_mw);

inline double conversion_flow(double p_mw, const ConversionEdge& edge) {
  return conversion_flow(p_mw, edge.e_gtp, edge.e_ptg, edge.epsilon_mw);
}
inline double conversion_flow_dp(double p_mw, const ConversionEdge& edge) {
  return conversion_flow_dp(p_mw, edge.e_gtp, edge.e_ptg, edge.epsilon_mw);
}

/// Smallest slope of the conversion law over the blended interval. A
/// non-positive value would admit several flows for one power level, so
/// configurations are rejected when this is not positive.
double conversion_min_slope(double e_gtp, double e_ptg);

}  // namespace gpsim
