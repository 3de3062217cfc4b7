#include "gpsim/time_series.hpp"

#include <algorithm>

#include "gpsim/errors.hpp"

namespace gpsim {

TimeSeries::TimeSeries(std::vector<std::pair<double, double>> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) throw ValidationError("time series has no samples");
  std::sort(samples_.begin(), samples_.end());
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (samples_[i].first == samples_[i - 1].first)
      throw ValidationError("time series has duplicate sample times");
  }
}

TimeSeries TimeSeries::constant(double value) {
  TimeSeries s;
  s.samples_ = {{0.0, value}};
  return s;
}

bool TimeSeries::is_constant() const { return samples_.size() == 1; }

double TimeSeries::at(double t) const {
  if (samples_.empty()) return 0.0;
  if (t <= samples_.front().first) return samples_.front().second;
  if (t >= samples_.back().first) return samples_.back().second;
  auto it = std::upper_bound(samples_.begin(), samples_.end(),
                             std::make_pair(t, std::numeric_limits<double>::max()));
  auto lo = std::prev(it);
  const double w = (t - lo->first) / (it->first - lo->first);
  return lo->second + w * (it->second - lo->second);
}

}  // namespace gpsim
