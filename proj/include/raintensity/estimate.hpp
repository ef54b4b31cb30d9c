#pragma once

#include <optional>

#include "raintensity/grai.hpp"
#include "raintensity/sample.hpp"

namespace raintensity {

/// Gaussian kernel density/distribution estimate over a sample.
class KdeModel {
 public:
  KdeModel(const Sample& s, std::optional<double> bandwidth = {});

  double bandwidth() const { return bandwidth_; }
  const Sample& sample() const { return sample_; }

 private:
  Sample sample_;
  double bandwidth_;
};

/// Normal-reference rule h = min(sd, IQR/1.349) * (4/(3N))^(1/5).
/// Throws DomainError for zero-dispersion samples.
double default_bandwidth(const Sample& s);

double kde_pdf(const KdeModel& m, double x);
double kde_cdf(const KdeModel& m, double x);

/// Plug-in GRAI estimator: grai_value(x, kde_cdf, kde_pdf, alpha), admissible
/// only where eps <= kde_cdf(x) <= 1-eps.
double empirical_grai(const KdeModel& m, double alpha, double x, double eps = 1e-6);

/// Evaluation grid for tabulating the empirical GRAI. Abscissae are either
/// equally spaced between the empirical band quantiles (default) or the
/// sample points falling inside the band.
struct GridSpec {
  double p_lo = 0.05;
  double p_hi = 0.95;
  int points = 200;
  enum class Abscissae { uniform, sample_points };
  Abscissae abscissae = Abscissae::uniform;
  double eps = 1e-6;  // admissible kde-cdf band for the estimator
};

/// Tabulated empirical GRAI curve over the grid given by `spec`.
GraiCurve grai_grid(const KdeModel& m, double alpha, const GridSpec& spec = {});

}  // namespace raintensity
