#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "raintensity/sample.hpp"

namespace raintensity {

// Lifetime distribution catalog. All supports are (0, +inf) except the
// generalized Pareto with alpha > 0, whose support is (0, 1/alpha).

/// W_alpha: cdf 1-(1-alpha*x)^(1/alpha), the exponential cdf 1-e^-x at alpha=0.
struct GeneralizedPareto {
  double alpha;
  explicit GeneralizedPareto(double alpha);
};

/// cdf 1 - exp(-rate*x).
struct Exponential {
  double rate;
  explicit Exponential(double rate);
};

/// Inverse two-parameter Weibull: cdf exp(-scale / x^shape).
struct InvWeibull2 {
  double shape;  // beta
  double scale;  // lambda
  InvWeibull2(double shape, double scale);
};

/// Inverse log-logistic: cdf [1 + (scale/x)^shape]^-1.
struct InvLogLogistic {
  double shape;  // gamma
  double scale;  // lambda
  InvLogLogistic(double shape, double scale);
};

/// Inverse modified Weibull: cdf exp(-(scale/x)^shape * exp(-rate*x)).
struct InvModifiedWeibull {
  double shape;  // gamma
  double scale;  // lambda
  double rate;   // delta >= 0
  InvModifiedWeibull(double shape, double scale, double rate);
};

/// Exponentiated exponential: cdf (1 - exp(-rate*x))^(1/alpha). Its
/// alpha-generalized reversed aging intensity at this alpha is rate*x,
/// and alpha=1 recovers Exponential(rate).
struct ExponentiatedExponential {
  double alpha;
  double rate;  // B
  ExponentiatedExponential(double alpha, double rate);
};

using ParametricFamily =
    std::variant<GeneralizedPareto, Exponential, InvWeibull2, InvLogLogistic,
                 InvModifiedWeibull, ExponentiatedExponential>;

struct Support {
  double lo;
  double hi;  // +inf unless bounded
};

Support support(const ParametricFamily& d);

/// Cumulative distribution function. Values below the support map to 0,
/// above to 1. Throws DomainError on non-finite x.
double cdf(const ParametricFamily& d, double x);

/// Survival function 1-cdf, computed without cancellation where possible.
double sf(const ParametricFamily& d, double x);

/// Density; 0 outside the open support, throws DomainError on non-finite x.
double pdf(const ParametricFamily& d, double x);

/// Inverse cdf for p in (0,1). Closed form everywhere except
/// InvModifiedWeibull with rate > 0, which uses bracketed bisection.
double quantile(const ParametricFamily& d, double p);

/// Inverse-transform observation for a single uniform u in (0,1):
/// Y = quantile(1-u).
double sample_from_uniform(const ParametricFamily& d, double u);

/// n >= 1 inverse-transform draws, deterministic for a fixed seed.
Sample sample(const ParametricFamily& d, std::size_t n, std::uint64_t seed);

/// Canonical spec string, e.g. "invw2(beta=2,lambda=1)".
std::string to_string(const ParametricFamily& d);

/// Parse the CLI family grammar: invw2(beta=,lambda=), invllog(gamma=,lambda=),
/// invmw(gamma=,lambda=,delta=), gpd(alpha=), exp(b=), expexp(alpha=,b=).
/// Case-insensitive, keyword parameters only.
ParametricFamily parse_family(const std::string& text);

}  // namespace raintensity
