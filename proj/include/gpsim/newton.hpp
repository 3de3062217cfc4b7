#pragma once

#include <Eigen/Sparse>
#include <string>
#include <utility>
#include <vector>

namespace gpsim {

/// Square nonlinear system with a sparse Jacobian.
class ResidualSystem {
 public:
  virtual ~ResidualSystem() = default;

  virtual int size() const = 0;
  virtual void residual(const Eigen::VectorXd& x, Eigen::VectorXd& r) const = 0;
  virtual void jacobian(const Eigen::VectorXd& x,
                        Eigen::SparseMatrix<double>& jac) const = 0;

  /// Whether the iterate is inside the admissible region (e.g. positive
  /// densities). Steps are halved until it is.
  virtual bool iterate_ok(const Eigen::VectorXd&) const { return true; }

  /// Human-readable identification of a residual row, for diagnostics.
  virtual std::string describe_row(int row) const;
};

struct NewtonOptions {
  double tol = 1e-8;          // residual infinity norm
  int max_iterations = 50;
  int max_halvings = 30;
};

struct NewtonReport {
  bool converged = false;
  int iterations = 0;
  int halvings = 0;           // total over all iterations
  double residual_inf = 0.0;
  std::vector<double> history;  // residual norm per iterate, initial first
  std::string failure;
  std::vector<std::pair<int, double>> worst_rows;  // on failure

  std::string describe(const ResidualSystem& system) const;
};

/// Damped Newton iteration: solves J d = -r with sparse LU and halves the
/// step until the iterate is admissible and the residual norm decreases.
/// Throws nothing; inspect `converged` / `failure`.
NewtonReport newton_solve(const ResidualSystem& system, Eigen::VectorXd& x,
                          const NewtonOptions& options);

}  // namespace gpsim
