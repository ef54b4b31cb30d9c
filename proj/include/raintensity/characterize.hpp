#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "raintensity/grai.hpp"

namespace raintensity {

/// Anchor point for the alpha <= 0 reconstructions: abscissa a and family
/// parameter k, both > 0.
struct Anchor {
  double a;
  double k;
  Anchor(double a, double k);
};

/// Admissibility of a curve as a GRAI function:
///   c1: 0 <= L(x) < +inf on the evaluation grid,
///   c2: behaviour of the integral of L(t)/t at 0+ (divergent for alpha <= 0,
///       finite for alpha > 0),
///   c3: the integral diverges at +inf.
/// c2/c3 are decided from integrals over geometrically shrinking/growing
/// windows; `inconclusive` when the trend is below resolution.
struct ConditionReport {
  enum class Verdict { pass, fail, inconclusive };
  Verdict c1, c2, c3;
  std::string detail;
  bool all_pass() const {
    return c1 == Verdict::pass && c2 == Verdict::pass && c3 == Verdict::pass;
  }
  bool any_fail() const {
    return c1 == Verdict::fail || c2 == Verdict::fail || c3 == Verdict::fail;
  }
};

std::string to_string(ConditionReport::Verdict v);

ConditionReport check_conditions(const GraiCurve& L, double alpha);

/// Distribution function rebuilt from a GRAI curve.
///   alpha < 0:  F(x) = [1 - k a exp(-I(a,x))]^{1/alpha}   (one per anchor k)
///   alpha = 0:  F(x) = exp[-k exp(-I(a,x))]
///   alpha > 0:  F(x) = [1 - exp(-I(0,x))]^{1/alpha}       (anchor-free)
/// where I(u,v) is the integral of L(t)/t over [u,v]. Cumulative integrals
/// are cached per instance; instances are not safe for concurrent use.
class ReconstructedCdf {
 public:
  ReconstructedCdf(GraiCurve curve, double alpha,
                   std::optional<Anchor> anchor = {}, double quad_tol = 1e-9);

  double operator()(double x);

  double alpha() const { return alpha_; }
  const std::optional<Anchor>& anchor() const { return anchor_; }
  double quad_tol() const { return quad_tol_; }
  /// True once any query touched a tabulated curve outside its grid.
  bool used_extrapolation() const { return used_extrapolation_; }

 private:
  double integral_from_ref(double x);

  GraiCurve curve_;
  double alpha_;
  std::optional<Anchor> anchor_;
  double quad_tol_;
  double ref_;                      // anchor abscissa, or first query for alpha > 0
  double below_ref_ = 0.0;          // I(0, ref) when alpha > 0
  bool ref_set_ = false;
  bool used_extrapolation_ = false;
  std::map<double, double> cache_;  // x -> I(ref, x), signed
};

/// One-shot evaluations of the three reconstruction formulas.
double reconstruct_neg(const GraiCurve& L, double alpha, const Anchor& anchor, double x);
double reconstruct_zero(const GraiCurve& L, const Anchor& anchor, double x);
double reconstruct_pos(const GraiCurve& L, double alpha, double x);

/// Max |reconstructed - cdf| over the grid, reconstructing from the family's
/// own symbolic GRAI curve. The anchor is the median with k derived from
/// the known F(a): k = (1-F^alpha(a))/alpha for alpha < 0, k = -log F(a)
/// for alpha = 0; the alpha > 0 branch is anchor-free.
double roundtrip_error(const ParametricFamily& d, double alpha,
                       std::span<const double> grid, double quad_tol = 1e-9);

namespace detail {
/// Integral of L(t)/t over [x0, x1] (0 < x0 <= x1). Exact piecewise form for
/// tabulated curves, adaptive Gauss-Kronrod panels in u = log t otherwise.
double curve_log_integral(const GraiCurve& L, double x0, double x1, double tol);
/// Integral of L(t)/t over (0, x]; throws NumericalError when the lower-end
/// integral is detected to diverge (condition (2) violation).
double curve_log_integral_from_zero(const GraiCurve& L, double x, double tol);
}  // namespace detail

}  // namespace raintensity
