#include "raintensity/gof.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "raintensity/errors.hpp"

namespace raintensity {

namespace {

GofReport chi_square_impl(std::vector<double> observed, double overflow_observed,
                          double n_total, const ParametricFamily& d, double width,
                          int n_params, const ChiSquareOptions& opts) {
  const auto k = observed.size();
  if (k < 2) throw DomainError("chi-square: need at least 2 classes");
  if (!(width > 0.0)) throw DomainError("chi-square: width must be > 0");

  GofReport rep;
  rep.test = "chi2";
  std::vector<double> expected(k);
  double f_lo = 0.0;  // F(0)
  for (std::size_t j = 0; j < k; ++j) {
    const double hi = width * static_cast<double>(j + 1);
    const double f_hi = cdf(d, hi);
    expected[j] = n_total * (f_hi - f_lo);
    rep.classes.push_back({width * static_cast<double>(j), hi, observed[j], expected[j]});
    f_lo = f_hi;
  }

  if (opts.tail_observed_to_last) observed.back() += overflow_observed;
  if (opts.tail_expected_to_last) expected.back() += n_total * (1.0 - f_lo);

  // merge the last class into its predecessor until no class is thin;
  // ties at the threshold count as thick (guards float fuzz in N*dF)
  const double thin = opts.merge_threshold - 1e-9;
  while (expected.size() > 1 &&
         *std::min_element(expected.begin(), expected.end()) < thin) {
    expected[expected.size() - 2] += expected.back();
    expected.pop_back();
    observed[observed.size() - 2] += observed.back();
    observed.pop_back();
  }

  const int dof = static_cast<int>(expected.size()) - 1 - n_params;
  if (dof <= 0)
    throw DomainError("chi-square: no degrees of freedom left after merging");

  double stat = 0.0;
  for (std::size_t j = 0; j < expected.size(); ++j) {
    const double r = observed[j] - expected[j];
    stat += r * r / expected[j];
    const double hi = j + 1 == expected.size()
                          ? width * static_cast<double>(k)
                          : width * static_cast<double>(j + 1);
    rep.merged_classes.push_back({width * static_cast<double>(j), hi,
                                  observed[j], expected[j]});
  }
  rep.statistic = stat;
  rep.dof = dof;
  rep.p_value = boost::math::gamma_q(dof / 2.0, stat / 2.0);
  return rep;
}

}  // namespace

GofReport chi_square(const Sample& s, const ParametricFamily& d, int k,
                     double width, int n_params, ChiSquareOptions opts) {
  if (k < 2) throw DomainError("chi-square: need at least 2 classes");
  std::vector<double> observed(static_cast<std::size_t>(k), 0.0);
  double overflow = 0.0;
  for (double x : s.values()) {
    const auto j = static_cast<std::ptrdiff_t>(std::floor(x / width));
    if (j >= k)
      overflow += 1.0;
    else
      observed[static_cast<std::size_t>(j)] += 1.0;
  }
  return chi_square_impl(std::move(observed), overflow,
                         static_cast<double>(s.size()), d, width, n_params, opts);
}

GofReport chi_square_counts(std::span<const double> observed, double n_total,
                            const ParametricFamily& d, double width, int n_params,
                            ChiSquareOptions opts) {
  double in_range = 0.0;
  for (double c : observed) {
    if (c < 0.0) throw DomainError("chi-square: negative count");
    in_range += c;
  }
  if (n_total < in_range)
    throw DomainError("chi-square: n_total smaller than the count sum");
  return chi_square_impl(std::vector<double>(observed.begin(), observed.end()),
                         n_total - in_range, n_total, d, width, n_params, opts);
}

namespace {

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1) ? term : -term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

GofReport ks_test(const Sample& s, const ParametricFamily& d) {
  const auto n = static_cast<double>(s.size());
  double K = 0.0;
  std::size_t i = 1;
  for (double x : s.values()) {
    const double F = cdf(d, x);
    K = std::max(K, static_cast<double>(i) / n - F);
    K = std::max(K, F - static_cast<double>(i - 1) / n);
    ++i;
  }
  GofReport rep;
  rep.test = "ks";
  rep.statistic = K;
  const double lambda = K * (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n));
  rep.p_value = kolmogorov_tail(lambda);
  return rep;
}

}  // namespace raintensity
