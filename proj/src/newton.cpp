#include "gpsim/newton.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace gpsim {

std::string ResidualSystem::describe_row(int row) const {
  return "row " + std::to_string(row);
}

std::string NewtonReport::describe(const ResidualSystem& system) const {
  std::ostringstream os;
  os << (converged ? "converged" : "failed") << " after " << iterations
     << " iterations, |r|_inf = " << residual_inf;
  if (!failure.empty()) os << ": " << failure;
  if (!worst_rows.empty()) {
    os << "; worst residual rows:";
    for (const auto& [row, value] : worst_rows)
      os << "\n  " << system.describe_row(row) << " = " << value;
  }
  return os.str();
}

namespace {

std::vector<std::pair<int, double>> worst_entries(const Eigen::VectorXd& r,
                                                  int count) {
  std::vector<std::pair<int, double>> entries(r.size());
  for (int i = 0; i < r.size(); ++i) entries[i] = {i, r[i]};
  std::partial_sort(entries.begin(),
                    entries.begin() + std::min<std::size_t>(count, entries.size()),
                    entries.end(), [](const auto& a, const auto& b) {
                      return std::abs(a.second) > std::abs(b.second);
                    });
  entries.resize(std::min<std::size_t>(count, entries.size()));
  return entries;
}

}  // namespace

NewtonReport newton_solve(const ResidualSystem& system, Eigen::VectorXd& x,
                          const NewtonOptions& options) {
  NewtonReport report;
  const int n = system.size();

  Eigen::VectorXd r(n);
  if (!system.iterate_ok(x)) {
    report.failure = "initial iterate is not admissible";
    return report;
  }
  system.residual(x, r);
  double norm = r.lpNorm<Eigen::Infinity>();
  report.history.push_back(norm);
  if (!std::isfinite(norm)) {
    report.failure = "initial residual is not finite";
    report.worst_rows = worst_entries(r, 3);
    return report;
  }
  if (norm <= options.tol) {
    report.converged = true;
    report.residual_inf = norm;
    return report;
  }

  Eigen::SparseMatrix<double> jac(n, n);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  Eigen::VectorXd x_try(n), r_try(n);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    system.jacobian(x, jac);
    lu.compute(jac);
    if (lu.info() != Eigen::Success) {
      report.iterations = iter - 1;
      report.residual_inf = norm;
      report.failure = "singular Jacobian";
      report.worst_rows = worst_entries(r, 3);
      return report;
    }
    const Eigen::VectorXd step = lu.solve(-r);

    double alpha = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h) {
      x_try = x + alpha * step;
      if (system.iterate_ok(x_try)) {
        system.residual(x_try, r_try);
        const double norm_try = r_try.lpNorm<Eigen::Infinity>();
        if (std::isfinite(norm_try) && (norm_try < norm || norm_try <= options.tol)) {
          x = x_try;
          r = r_try;
          norm = norm_try;
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
      ++report.halvings;
    }
    report.iterations = iter;
    report.history.push_back(norm);
    if (!accepted) {
      report.residual_inf = norm;
      report.failure = "step halving stalled";
      report.worst_rows = worst_entries(r, 3);
      return report;
    }
    if (norm <= options.tol) {
      report.converged = true;
      report.residual_inf = norm;
      return report;
    }
  }

  report.residual_inf = norm;
  report.failure = "maximum iterations exceeded";
  report.worst_rows = worst_entries(r, 3);
  return report;
}

}  // namespace gpsim
