#pragma once

#include <optional>

#include "raintensity/estimate.hpp"
#include "raintensity/grai.hpp"
#include "raintensity/sample.hpp"

namespace raintensity {

/// Shape of the GRAI curve fitted by least squares.
enum class ShapeModel { constant, affine, through_origin };

std::string to_string(ShapeModel m);
ShapeModel parse_shape_model(const std::string& text);

struct LsCoefficients {
  double intercept = 0.0;
  double slope = 0.0;
  double residual_rms = 0.0;
  int points_used = 0;
};

/// Ordinary least squares over the tabulated points. The constant model
/// returns the mean as intercept; through_origin fits slope only.
LsCoefficients fit_ls(const GraiCurve& curve, ShapeModel model);

/// Root of sum_i 1/((x_i/lambda)^gamma + 1) = N/2 (profile MLE of the
/// inverse log-logistic scale). The LHS is strictly increasing in lambda;
/// bracketed bisection/secant hybrid, 1e-12 relative abscissa tolerance.
double mle_lambda_invllog(const Sample& s, double gamma_hat);

/// Closed-form profile MLE of the inverse modified Weibull scale:
/// lambda = (N / sum_i exp(-delta x_i) x_i^-gamma)^(1/gamma), in log space.
double mle_lambda_invmw(const Sample& s, double gamma_hat, double delta_hat);

/// Closed-form profile MLE of the inverse Weibull scale parameter
/// (cdf exp(-lambda/x^beta)): lambda = N / sum_i x_i^-beta.
double mle_lambda_invw2(const Sample& s, double beta_hat);

struct FitConfig {
  std::optional<double> bandwidth;  // default: normal-reference rule
  GridSpec grid;
};

/// Result of the identification pipeline; `identified` satisfies the family
/// parameter constraints or the pipeline throws.
struct FitReport {
  double alpha;
  ShapeModel model;
  LsCoefficients ls;
  double scale_mle;
  ParametricFamily identified;
  double bandwidth;
};

/// grai_grid -> fit_ls -> matching scale MLE -> identified family.
/// Supported (alpha, model) pairs:
///   (-1, constant)      -> InvLogLogistic
///   ( 0, constant)      -> InvWeibull2
///   ( 0, affine)        -> InvModifiedWeibull
///   (>0, through_origin)-> ExponentiatedExponential
inline constexpr double kAlphaMatchTol = 1e-9;
FitReport fit_pipeline(const Sample& s, double alpha, ShapeModel model,
                       const FitConfig& config = {});

}  // namespace raintensity
