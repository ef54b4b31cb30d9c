#pragma once

#include <span>
#include <string>
#include <vector>

namespace raintensity {

/// Validated positive observations, kept sorted. The source label records
/// provenance (file path, generating family, ...).
class Sample {
 public:
  Sample(std::vector<double> values, std::string source_label = {});

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }
  const std::string& source_label() const { return source_label_; }

  double mean() const;
  /// Sample standard deviation (n-1 denominator).
  double stddev() const;
  /// Order-statistic quantile with linear interpolation (R type 7).
  double quantile(double p) const;

 private:
  std::vector<double> values_;
  std::string source_label_;
};

}  // namespace raintensity
