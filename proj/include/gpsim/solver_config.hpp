#pragma once

namespace gpsim {

enum class JacobianMode { Analytic, FiniteDifference };

struct SolverConfig {
  double t_horizon_s = 86400.0;  // 24 h
  double dt_s = 900.0;           // 96 steps over the horizon
  double dx_target_m = 1000.0;
  double newton_tol = 1e-8;      // residual infinity norm
  int max_newton_iters = 50;
  int max_step_halvings = 30;
  JacobianMode jacobian = JacobianMode::Analytic;  // FD kept for verification

  int steps() const;

  /// Positive step sizes and tolerance; the horizon must be an integer
  /// multiple of dt. Throws ValidationError.
  void validate() const;
};

}  // namespace gpsim
