#include "raintensity/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "raintensity/errors.hpp"

namespace raintensity {

namespace {

constexpr double kPanelWidth = 1.0;         // in u = log t
constexpr double kNegligiblePanel = 1e-14;  // transformed-integrand cutoff
constexpr int kNegligibleRun = 3;
constexpr double kDivergenceGrowth = 1e3;   // growth between truncation levels
constexpr int kMaxPanels = 800;

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

// One adaptive GK panel of the transformed integrand L(e^u) over [u0, u1].
double panel_integral(const GraiCurve& L, double u0, double u1, double tol) {
  double err = 0.0;
  const double v = GK::integrate([&L](double u) { return L(std::exp(u)); }, u0, u1,
                                 12, 1e-12, &err);
  if (!(err <= std::max(tol, 1e-9 * std::abs(v))) || !std::isfinite(v))
    throw NumericalError("quadrature non-convergence on panel");
  return v;
}

}  // namespace

namespace detail {

// Exact integral of the log-x linear interpolant of a tabulated curve:
// on a cell, L(e^u) = v0 + s (u - u0), so the u-integral is polynomial.
namespace {

double tab_cell_integral(double u0, double u1, double v0, double v1,
                         double a, double b) {
  // integrate the linear-in-u segment over [a, b] within [u0, u1]
  const double s = (v1 - v0) / (u1 - u0);
  auto prim = [&](double u) {
    const double du = u - u0;
    return v0 * du + 0.5 * s * du * du;
  };
  return prim(b) - prim(a);
}

double tab_log_integral(std::span<const double> xs, std::span<const double> vs,
                        double x0, double x1) {
  const double a = std::log(x0), b = std::log(x1);
  std::vector<double> us(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) us[i] = std::log(xs[i]);
  double total = 0.0;
  // constant extrapolation below the grid
  if (a < us.front()) total += vs.front() * (std::min(b, us.front()) - a);
  // constant extrapolation above the grid
  if (b > us.back()) total += vs.back() * (b - std::max(a, us.back()));
  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    const double lo = std::max(a, us[i]);
    const double hi = std::min(b, us[i + 1]);
    if (lo < hi)
      total += tab_cell_integral(us[i], us[i + 1], vs[i], vs[i + 1], lo, hi);
  }
  return total;
}

}  // namespace

double curve_log_integral(const GraiCurve& L, double x0, double x1, double tol) {
  if (!(x0 > 0.0) || !(x1 >= x0))
    throw DomainError("curve integral: need 0 < x0 <= x1");
  if (x0 == x1) return 0.0;
  if (L.is_tabulated()) return tab_log_integral(L.grid(), L.values(), x0, x1);
  const double a = std::log(x0), b = std::log(x1);
  double total = 0.0;
  double u = a;
  while (u < b) {
    const double next = std::min(u + kPanelWidth, b);
    total += panel_integral(L, u, next, tol);
    u = next;
  }
  return total;
}

double curve_log_integral_from_zero(const GraiCurve& L, double x, double tol) {
  if (!(x > 0.0)) throw DomainError("curve integral: x must be > 0");
  if (L.is_tabulated()) {
    // Constant extrapolation below the grid integrates to v_front * inf
    // unless the edge value is negligible.
    const double v_front = L.values().front();
    if (v_front > kNegligiblePanel)
      throw NumericalError(
          "lower-end integral diverges: tabulated curve does not decay to 0 "
          "at its left edge (condition (2) violation)");
    // tail below the grid is negligible by the check above
    if (x <= L.grid().front()) return 0.0;
    return tab_log_integral(L.grid(), L.values(), L.grid().front(), x);
  }
  double total = 0.0;
  double hi = std::log(x);
  int negligible_run = 0;
  for (int i = 0; i < kMaxPanels; ++i) {
    const double lo = hi - kPanelWidth;
    double piece;
    try {
      piece = panel_integral(L, lo, hi, tol);
    } catch (const DomainError&) {
      // curve evaluation fell below the cdf floor: contributions this far
      // down are zero for any admissible curve
      break;
    }
    if (piece > kDivergenceGrowth)
      throw NumericalError(
          "lower-end integral diverges (condition (2) violation)");
    total += piece;
    if (std::abs(piece) < kNegligiblePanel) {
      if (++negligible_run >= kNegligibleRun) return total;
    } else {
      negligible_run = 0;
    }
    hi = lo;
  }
  if (negligible_run == 0)
    throw NumericalError(
        "lower-end integral did not converge within the panel budget "
        "(condition (2) violation)");
  return total;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Condition checking

namespace {

using Verdict = ConditionReport::Verdict;

// Trend classification from window increments of the integral.
Verdict classify_endpoint(const std::vector<double>& increments, bool want_divergent) {
  if (increments.size() < 3) return Verdict::inconclusive;
  // negligible tail => finite integral
  int tail_small = 0;
  for (auto it = increments.rbegin(); it != increments.rend() && *it < 1e-12; ++it)
    ++tail_small;
  if (tail_small >= 2) return want_divergent ? Verdict::fail : Verdict::pass;
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < increments.size(); ++i)
    if (increments[i] > 0.0) ratios.push_back(increments[i + 1] / increments[i]);
  if (ratios.size() < 2) return Verdict::inconclusive;
  const std::size_t m = ratios.size();
  const double r_last = std::max(ratios[m - 1], ratios[m - 2]);
  if (r_last < 0.6) {
    // geometric decay: the remaining tail is bounded by a convergent series
    return want_divergent ? Verdict::fail : Verdict::pass;
  }
  if (std::min(ratios[m - 1], ratios[m - 2]) > 0.85) {
    // increments not decaying: divergent
    return want_divergent ? Verdict::pass : Verdict::fail;
  }
  return Verdict::inconclusive;
}

double curve_reference_abscissa(const GraiCurve& L) {
  if (L.is_tabulated()) {
    auto g = L.grid();
    return std::sqrt(g.front() * g.back());
  }
  return quantile(L.family(), 0.5);
}

}  // namespace

std::string to_string(ConditionReport::Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

ConditionReport check_conditions(const GraiCurve& L, double alpha) {
  ConditionReport rep{Verdict::inconclusive, Verdict::inconclusive,
                      Verdict::inconclusive, {}};
  const double a = curve_reference_abscissa(L);

  // c1: pointwise nonnegativity and finiteness on an evaluation grid
  {
    double lo, hi;
    if (L.is_tabulated()) {
      lo = L.grid().front();
      hi = L.grid().back();
    } else {
      lo = quantile(L.family(), 0.001);
      hi = quantile(L.family(), 0.999);
    }
    rep.c1 = Verdict::pass;
    const int n = 201;
    for (int i = 0; i < n; ++i) {
      const double x = lo * std::pow(hi / lo, i / double(n - 1));
      double v;
      try {
        v = L(x);
      } catch (const DomainError&) {
        continue;  // outside the evaluable band; not a violation
      }
      if (!(v >= 0.0) || !std::isfinite(v)) {
        rep.c1 = Verdict::fail;
        break;
      }
    }
  }

  // c2: shrinking windows toward 0; alpha > 0 wants a finite limit,
  // alpha <= 0 wants divergence
  {
    std::vector<double> inc;
    double x_hi = a;
    for (int m = 0; m < 12; ++m) {
      const double x_lo = x_hi / 10.0;
      try {
        inc.push_back(detail::curve_log_integral(L, x_lo, x_hi, 1e-9));
      } catch (const DomainError&) {
        break;
      } catch (const NumericalError&) {
        break;
      }
      if (!std::isfinite(inc.back())) {
        inc.pop_back();
        break;
      }
      if (inc.back() > 1e6) break;  // already clearly divergent
      x_hi = x_lo;
    }
    if (!inc.empty() && inc.back() > 1e6)
      rep.c2 = (alpha > 0.0) ? Verdict::fail : Verdict::pass;
    else
      rep.c2 = classify_endpoint(inc, /*want_divergent=*/!(alpha > 0.0));
  }

  // c3: growing windows toward +inf; divergence required for every alpha
  {
    std::vector<double> inc;
    double x_lo = a;
    for (int m = 0; m < 12; ++m) {
      const double x_hi = x_lo * 10.0;
      try {
        inc.push_back(detail::curve_log_integral(L, x_lo, x_hi, 1e-9));
      } catch (const DomainError&) {
        break;
      } catch (const NumericalError&) {
        break;
      }
      if (!std::isfinite(inc.back())) {
        inc.pop_back();
        break;
      }
      if (inc.back() > 1e6) break;
      x_lo = x_hi;
    }
    if (!inc.empty() && inc.back() > 1e6)
      rep.c3 = Verdict::pass;
    else
      rep.c3 = classify_endpoint(inc, /*want_divergent=*/true);
  }

  std::ostringstream os;
  os << "c1=" << to_string(rep.c1) << " c2=" << to_string(rep.c2)
     << " c3=" << to_string(rep.c3) << " (anchor reference a=" << a << ")";
  rep.detail = os.str();
  return rep;
}

// ---------------------------------------------------------------------------
// Reconstruction

Anchor::Anchor(double a_, double k_) : a(a_), k(k_) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("anchor a must be > 0");
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("anchor k must be > 0");
}

ReconstructedCdf::ReconstructedCdf(GraiCurve curve, double alpha,
                                   std::optional<Anchor> anchor, double quad_tol)
    : curve_(std::move(curve)), alpha_(alpha), anchor_(anchor), quad_tol_(quad_tol),
      ref_(1.0) {
  if (alpha_ <= 0.0) {
    if (!anchor_)
      throw DomainError("reconstruction with alpha <= 0 requires an anchor (a, k)");
    ref_ = anchor_->a;
    ref_set_ = true;
  }
}

double ReconstructedCdf::integral_from_ref(double x) {
  if (curve_.extrapolates(x)) used_extrapolation_ = true;
  const auto it = cache_.find(x);
  if (it != cache_.end()) return it->second;
  // integrate from the nearest cached abscissa
  double base_x = ref_, base_v = 0.0;
  if (!cache_.empty()) {
    auto up = cache_.upper_bound(x);
    if (up != cache_.end() &&
        (up == cache_.begin() ||
         std::abs(std::log(up->first / x)) <
             std::abs(std::log(std::prev(up)->first / x)))) {
      base_x = up->first;
      base_v = up->second;
    } else if (up != cache_.begin()) {
      base_x = std::prev(up)->first;
      base_v = std::prev(up)->second;
    }
    if (std::abs(std::log(ref_ / x)) < std::abs(std::log(base_x / x))) {
      base_x = ref_;
      base_v = 0.0;
    }
  }
  const double v = x >= base_x
                       ? base_v + detail::curve_log_integral(curve_, base_x, x, quad_tol_)
                       : base_v - detail::curve_log_integral(curve_, x, base_x, quad_tol_);
  cache_.emplace(x, v);
  return v;
}

double ReconstructedCdf::operator()(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("reconstructed cdf: x must be positive and finite");
  if (alpha_ > 0.0) {
    if (!ref_set_) {
      ref_ = x;
      below_ref_ = detail::curve_log_integral_from_zero(curve_, x, quad_tol_);
      ref_set_ = true;
    }
    // I(0, x) is nonnegative; the max guards float cancellation when x sits
    // far below the first query point
    const double I = std::max(0.0, below_ref_ + integral_from_ref(x));
    if (I == 0.0) return 0.0;
    // F = (1 - e^{-I})^{1/alpha}
    const double log_base = std::log(-std::expm1(-I));
    const double F = std::exp(log_base / alpha_);
    return std::clamp(F, 0.0, 1.0);
  }
  const double I = integral_from_ref(x);
  const double k = anchor_->k;
  if (alpha_ == 0.0) {
    // F = exp(-k e^{-I})
    return std::clamp(std::exp(-k * std::exp(-I)), 0.0, 1.0);
  }
  // alpha < 0: F = (1 - k alpha e^{-I})^{1/alpha}, with 1 - k alpha e^{-I} >= 1
  const double w = std::log1p(-k * alpha_ * std::exp(-I));
  return std::clamp(std::exp(w / alpha_), 0.0, 1.0);
}

double reconstruct_neg(const GraiCurve& L, double alpha, const Anchor& anchor,
                       double x) {
  if (!(alpha < 0.0)) throw DomainError("reconstruct_neg requires alpha < 0");
  ReconstructedCdf F(L, alpha, anchor);
  return F(x);
}

double reconstruct_zero(const GraiCurve& L, const Anchor& anchor, double x) {
  ReconstructedCdf F(L, 0.0, anchor);
  return F(x);
}

double reconstruct_pos(const GraiCurve& L, double alpha, double x) {
  if (!(alpha > 0.0)) throw DomainError("reconstruct_pos requires alpha > 0");
  ReconstructedCdf F(L, alpha);
  return F(x);
}

double roundtrip_error(const ParametricFamily& d, double alpha,
                       std::span<const double> grid, double quad_tol) {
  if (grid.empty()) throw DomainError("roundtrip: empty grid");
  GraiCurve L = GraiCurve::symbolic(d, alpha);
  std::optional<Anchor> anchor;
  if (alpha <= 0.0) {
    const double a = quantile(d, 0.5);
    const double Fa = cdf(d, a);
    // anchored-family identity k*alpha = 1 - F^alpha(a); k = -log F(a) at alpha=0
    const double k = alpha == 0.0
                         ? -std::log(Fa)
                         : -std::expm1(alpha * std::log(Fa)) / alpha;
    anchor = Anchor(a, k);
  }
  ReconstructedCdf rec(std::move(L), alpha, anchor, quad_tol);
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(rec(x) - cdf(d, x)));
  return worst;
}

}  // namespace raintensity
