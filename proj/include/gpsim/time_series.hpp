#pragma once

#include <utility>
#include <vector>

namespace gpsim {

/// Piecewise-linear time series with constant extrapolation outside the
/// sampled range. Samples are kept sorted by time.
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<std::pair<double, double>> samples);

  static TimeSeries constant(double value);

  double at(double t) const;

  bool is_constant() const;
  bool empty() const { return samples_.empty(); }
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }

 private:
  std::vector<std::pair<double, double>> samples_;  // (t [s], value)
};

}  // namespace gpsim
