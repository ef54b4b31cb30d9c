#include "raintensity/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "raintensity/errors.hpp"

namespace raintensity {

std::string to_string(ShapeModel m) {
  switch (m) {
    case ShapeModel::constant: return "constant";
    case ShapeModel::affine: return "affine";
    default: return "through-origin";
  }
}

ShapeModel parse_shape_model(const std::string& text) {
  if (text == "constant") return ShapeModel::constant;
  if (text == "affine") return ShapeModel::affine;
  if (text == "through-origin" || text == "through_origin")
    return ShapeModel::through_origin;
  throw DomainError("unknown shape model '" + text + "'");
}

LsCoefficients fit_ls(const GraiCurve& curve, ShapeModel model) {
  if (!curve.is_tabulated())
    throw DomainError("fit_ls: tabulated curve required");
  const auto xs = curve.grid();
  const auto ys = curve.values();
  const auto n = static_cast<double>(xs.size());
  if (model != ShapeModel::constant && xs.size() < 2)
    throw DomainError("fit_ls: need at least 2 points");

  LsCoefficients out;
  out.points_used = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  switch (model) {
    case ShapeModel::constant:
      out.intercept = sy / n;
      break;
    case ShapeModel::affine: {
      const double den = n * sxx - sx * sx;
      if (!(den > 0.0))
        throw DomainError("fit_ls: degenerate design (all abscissae equal)");
      out.slope = (n * sxy - sx * sy) / den;
      out.intercept = (sy - out.slope * sx) / n;
      break;
    }
    case ShapeModel::through_origin:
      if (!(sxx > 0.0)) throw DomainError("fit_ls: degenerate design");
      out.slope = sxy / sxx;
      break;
  }
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (out.intercept + out.slope * xs[i]);
    ss += r * r;
  }
  out.residual_rms = std::sqrt(ss / n);
  return out;
}

double mle_lambda_invllog(const Sample& s, double gamma_hat) {
  if (!(gamma_hat > 0.0)) throw DomainError("mle invllog: gamma must be > 0");
  const double half_n = static_cast<double>(s.size()) / 2.0;
  auto score = [&](double lam) {
    double acc = 0.0;
    for (double x : s.values()) acc += 1.0 / (std::pow(x / lam, gamma_hat) + 1.0);
    return acc - half_n;  // strictly increasing in lam
  };
  double lo = s.min() / 100.0, hi = s.max() * 100.0;
  for (int i = 0; score(lo) > 0.0; ++i) {
    lo /= 10.0;
    if (i > 60) throw NumericalError("mle invllog: bracket exhaustion (low)");
  }
  for (int i = 0; score(hi) < 0.0; ++i) {
    hi *= 10.0;
    if (i > 60) throw NumericalError("mle invllog: bracket exhaustion (high)");
  }
  double flo = score(lo), fhi = score(hi);
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    // secant proposal, clipped into the bracket interior; bisection fallback
    double mid = hi - fhi * (hi - lo) / (fhi - flo);
    const double safety = 0.25 * (hi - lo);
    if (!(mid > lo + 1e-3 * safety && mid < hi - 1e-3 * safety))
      mid = 0.5 * (lo + hi);
    const double fm = score(mid);
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

double mle_lambda_invmw(const Sample& s, double gamma_hat, double delta_hat) {
  if (!(gamma_hat > 0.0)) throw DomainError("mle invmw: gamma must be > 0");
  if (!(delta_hat >= 0.0)) throw DomainError("mle invmw: delta must be >= 0");
  // log-sum-exp of terms -delta x_i - gamma log x_i
  double m = -std::numeric_limits<double>::infinity();
  for (double x : s.values())
    m = std::max(m, -delta_hat * x - gamma_hat * std::log(x));
  double acc = 0.0;
  for (double x : s.values())
    acc += std::exp(-delta_hat * x - gamma_hat * std::log(x) - m);
  const double log_sum = m + std::log(acc);
  return std::exp((std::log(static_cast<double>(s.size())) - log_sum) / gamma_hat);
}

double mle_lambda_invw2(const Sample& s, double beta_hat) {
  if (!(beta_hat > 0.0)) throw DomainError("mle invw2: beta must be > 0");
  double m = -std::numeric_limits<double>::infinity();
  for (double x : s.values()) m = std::max(m, -beta_hat * std::log(x));
  double acc = 0.0;
  for (double x : s.values()) acc += std::exp(-beta_hat * std::log(x) - m);
  return std::exp(std::log(static_cast<double>(s.size())) - (m + std::log(acc)));
}

FitReport fit_pipeline(const Sample& s, double alpha, ShapeModel model,
                       const FitConfig& config) {
  const KdeModel kde(s, config.bandwidth);
  const GraiCurve curve = grai_grid(kde, alpha, config.grid);
  const LsCoefficients ls = fit_ls(curve, model);

  FitReport rep{alpha, model, ls, 0.0, Exponential(1.0), kde.bandwidth()};
  const auto near = [](double a, double b) { return std::abs(a - b) < kAlphaMatchTol; };
  using enum ShapeModel;
  if (near(alpha, -1.0) && model == constant) {
    rep.scale_mle = mle_lambda_invllog(s, ls.intercept);
    rep.identified = InvLogLogistic(ls.intercept, rep.scale_mle);
  } else if (near(alpha, 0.0) && model == constant) {
    rep.scale_mle = mle_lambda_invw2(s, ls.intercept);
    rep.identified = InvWeibull2(ls.intercept, rep.scale_mle);
  } else if (near(alpha, 0.0) && model == affine) {
    rep.scale_mle = mle_lambda_invmw(s, ls.intercept, ls.slope);
    rep.identified = InvModifiedWeibull(ls.intercept, rep.scale_mle, ls.slope);
  } else if (alpha > 0.0 && model == through_origin) {
    rep.scale_mle = ls.slope;  // rate B from the LS slope; no further MLE step
    rep.identified = ExponentiatedExponential(alpha, ls.slope);
  } else {
    throw DomainError("fit: unsupported (alpha, model) combination: alpha=" +
                      std::to_string(alpha) + ", model=" + to_string(model));
  }
  return rep;
}

}  // namespace raintensity
