#include "raintensity/estimate.hpp"

#include <cmath>
#include <vector>

#include "raintensity/errors.hpp"

namespace raintensity {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kInvSqrt2 = 0.7071067811865475244;

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }
double normal_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

}  // namespace

double default_bandwidth(const Sample& s) {
  if (s.size() < 2) throw DomainError("bandwidth: need at least 2 observations");
  const double sd = s.stddev();
  const double iqr = s.quantile(0.75) - s.quantile(0.25);
  double spread = sd;
  if (iqr > 0.0) spread = std::min(spread, iqr / 1.349);
  if (!(spread > 0.0)) throw DomainError("bandwidth: zero-dispersion sample");
  return spread * std::pow(4.0 / (3.0 * static_cast<double>(s.size())), 0.2);
}

KdeModel::KdeModel(const Sample& s, std::optional<double> bandwidth)
    : sample_(s), bandwidth_(bandwidth ? *bandwidth : default_bandwidth(s)) {
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_))
    throw DomainError("kde: bandwidth must be finite and > 0");
}

double kde_pdf(const KdeModel& m, double x) {
  if (!std::isfinite(x)) throw DomainError("kde_pdf: non-finite x");
  const double h = m.bandwidth();
  double acc = 0.0;
  for (double xj : m.sample().values()) acc += normal_pdf((x - xj) / h);
  return acc / (static_cast<double>(m.sample().size()) * h);
}

double kde_cdf(const KdeModel& m, double x) {
  if (!std::isfinite(x)) throw DomainError("kde_cdf: non-finite x");
  const double h = m.bandwidth();
  double acc = 0.0;
  for (double xj : m.sample().values()) acc += normal_cdf((x - xj) / h);
  return acc / static_cast<double>(m.sample().size());
}

double empirical_grai(const KdeModel& m, double alpha, double x, double eps) {
  const double F = kde_cdf(m, x);
  if (!(F >= eps && F <= 1.0 - eps))
    throw DomainError("empirical grai: kde cdf outside the admissible band");
  return grai_value(x, F, kde_pdf(m, x), alpha);
}

GraiCurve grai_grid(const KdeModel& m, double alpha, const GridSpec& spec) {
  if (!(spec.p_lo >= 0.0 && spec.p_hi <= 1.0 && spec.p_lo < spec.p_hi))
    throw DomainError("grai grid: empty or invalid quantile band");
  const double lo = m.sample().quantile(spec.p_lo);
  const double hi = m.sample().quantile(spec.p_hi);
  if (!(lo < hi)) throw DomainError("grai grid: degenerate band");

  std::vector<double> xs;
  if (spec.abscissae == GridSpec::Abscissae::sample_points) {
    for (double v : m.sample().values())
      if (v >= lo && v <= hi && (xs.empty() || v > xs.back())) xs.push_back(v);
  } else {
    if (spec.points < 2) throw DomainError("grai grid: need at least 2 points");
    xs.resize(static_cast<std::size_t>(spec.points));
    for (int i = 0; i < spec.points; ++i)
      xs[static_cast<std::size_t>(i)] =
          lo + (hi - lo) * static_cast<double>(i) / (spec.points - 1);
  }
  if (xs.size() < 2) throw DomainError("grai grid: fewer than 2 abscissae in band");

  std::vector<double> vs;
  vs.reserve(xs.size());
  for (double x : xs) vs.push_back(empirical_grai(m, alpha, x, spec.eps));
  return GraiCurve::tabulated(std::move(xs), std::move(vs), alpha);
}

}  // namespace raintensity
