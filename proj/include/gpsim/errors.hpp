#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpsim {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (native scenario, GasLib XML, Matpower case).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that violates a model constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem or serialization failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Newton iteration did not converge; carries the residual-norm history.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> history)
      : Error(what), history_(std::move(history)) {}

  const std::vector<double>& residual_history() const { return history_; }

 private:
  std::vector<double> history_;
};

}  // namespace gpsim
