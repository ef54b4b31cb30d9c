#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raintensity/distributions.hpp"
#include "raintensity/sample.hpp"

namespace raintensity {

struct ChiSquareOptions {
  /// Classes are merged (last into predecessor) until every expected
  /// frequency reaches this threshold.
  double merge_threshold = 5.0;
  /// Count observations beyond the last class boundary into the last class.
  bool tail_observed_to_last = true;
  /// Add N*(1-F(k*width)) to the last merged class's expected frequency.
  bool tail_expected_to_last = false;
};

struct ChiSquareClass {
  double lo, hi;
  double observed;
  double expected;
};

struct GofReport {
  std::string test;  // "chi2" or "ks"
  double statistic = 0.0;
  double p_value = 0.0;
  std::optional<int> dof;                       // chi2 only
  std::vector<ChiSquareClass> classes;          // original equal-width classes
  std::vector<ChiSquareClass> merged_classes;   // after threshold merging
};

/// Pearson chi-square with equal-width classes [j*width, (j+1)*width) from 0.
/// Expected counts are N*(F(hi)-F(lo)); trailing classes are merged
/// right-to-left until all expected >= threshold; dof = classes - 1 - n_params.
GofReport chi_square(const Sample& s, const ParametricFamily& d, int k,
                     double width, int n_params, ChiSquareOptions opts = {});

/// Same test from pre-binned observed counts (k = counts.size()). n_total
/// may exceed the count sum; the overflow is treated as observations beyond
/// the last boundary.
GofReport chi_square_counts(std::span<const double> observed, double n_total,
                            const ParametricFamily& d, double width, int n_params,
                            ChiSquareOptions opts = {});

/// One-sample Kolmogorov-Smirnov: K = max_i max(i/n - F(x_(i)),
/// F(x_(i)) - (i-1)/n); p from the Kolmogorov series at the
/// Stephens-corrected lambda = K (sqrt(n) + 0.12 + 0.11/sqrt(n)).
GofReport ks_test(const Sample& s, const ParametricFamily& d);

}  // namespace raintensity
