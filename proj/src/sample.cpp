#include "raintensity/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "raintensity/errors.hpp"

namespace raintensity {

Sample::Sample(std::vector<double> values, std::string source_label)
    : values_(std::move(values)), source_label_(std::move(source_label)) {
  if (values_.empty()) throw DomainError("sample: no observations");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("sample: non-finite observation");
    if (v <= 0.0) throw DomainError("sample: nonpositive observation");
  }
  std::sort(values_.begin(), values_.end());
}

double Sample::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

double Sample::stddev() const {
  if (values_.size() < 2) return 0.0;
  const double m = mean();
  double ss = 0.0;
  for (double v : values_) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values_.size() - 1));
}

double Sample::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample quantile: p outside [0,1]");
  const double h = static_cast<double>(values_.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values_.size() - 1);
  return values_[lo] + (h - static_cast<double>(lo)) * (values_[hi] - values_[lo]);
}

}  // namespace raintensity
