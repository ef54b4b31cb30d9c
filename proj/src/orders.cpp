#include "raintensity/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "raintensity/errors.hpp"

namespace raintensity {

std::string to_string(OrderDirection dir) {
  switch (dir) {
    case OrderDirection::equal: return "equal";
    case OrderDirection::x_le_y: return "X<=Y";
    case OrderDirection::x_ge_y: return "X>=Y";
    default: return "crossing";
  }
}

std::vector<double> joint_interior_grid(const ParametricFamily& x,
                                        const ParametricFamily& y, int n,
                                        double p_lo, double p_hi) {
  const double lo = std::max(quantile(x, p_lo), quantile(y, p_lo));
  const double hi = std::min(quantile(x, p_hi), quantile(y, p_hi));
  if (!(lo < hi)) throw DomainError("order check: empty admissible grid");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    grid[static_cast<std::size_t>(i)] =
        lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return grid;
}

OrderCheckResult rai_order_check(const ParametricFamily& x, const ParametricFamily& y,
                                 double alpha, std::span<const double> grid,
                                 double tie_tol) {
  if (grid.empty()) throw DomainError("order check: empty grid");
  OrderCheckResult res;
  res.alpha = alpha;
  res.grid.assign(grid.begin(), grid.end());
  bool any_lt = false, any_gt = false;
  double max_gap = -std::numeric_limits<double>::infinity();
  int prev_sign = 0;
  for (double t : grid) {
    const double gap = grai_alpha(x, alpha, t) - grai_alpha(y, alpha, t);
    max_gap = std::max(max_gap, gap);
    int sign = 0;
    if (gap > tie_tol) sign = 1;
    if (gap < -tie_tol) sign = -1;
    any_gt |= sign > 0;
    any_lt |= sign < 0;
    if (sign != 0 && prev_sign != 0 && sign != prev_sign) res.crossings.push_back(t);
    if (sign != 0) prev_sign = sign;
  }
  res.max_signed_gap = max_gap;
  if (any_lt && any_gt)
    res.direction = OrderDirection::crossing;
  else if (any_gt)
    res.direction = OrderDirection::x_ge_y;
  else if (any_lt)
    res.direction = OrderDirection::x_le_y;
  else
    res.direction = OrderDirection::equal;
  return res;
}

GenericDist reciprocal_of(const ParametricFamily& d) {
  return {[d](double x) { return x > 0.0 ? sf(d, 1.0 / x) : 0.0; },
          [d](double x) { return x > 0.0 ? pdf(d, 1.0 / x) / (x * x) : 0.0; }};
}

double reciprocal_duality_check(const ParametricFamily& d, const GenericDist& d_recip,
                                double alpha, std::span<const double> grid) {
  if (grid.empty()) throw DomainError("duality check: empty grid");
  double worst = 0.0;
  for (double x : grid) {
    const double forward = ai_alpha(d, alpha, 1.0 / x);
    const double reversed = grai_value(x, d_recip.cdf(x), d_recip.pdf(x), alpha);
    worst = std::max(worst, std::abs(forward - reversed));
  }
  return worst;
}

ImplicationReport implication_report(const ParametricFamily& x,
                                     const ParametricFamily& y, double beta,
                                     std::span<const double> grid) {
  if (grid.empty()) throw DomainError("implication check: empty grid");
  ImplicationReport rep;
  rep.beta = beta;

  rep.premise_st = true;
  for (double t : grid) {
    if (cdf(x, t) < cdf(y, t) - 1e-12) {
      rep.premise_st = false;
      break;
    }
  }
  rep.beta_direction = rai_order_check(x, y, beta, grid).direction;
  if (!rep.premise_holds()) return rep;

  const bool le = rep.beta_direction == OrderDirection::x_le_y ||
                  rep.beta_direction == OrderDirection::equal;
  const bool ge = rep.beta_direction == OrderDirection::x_ge_y ||
                  rep.beta_direction == OrderDirection::equal;
  std::vector<double> alphas;
  if (le)
    for (double da : {-2.0, -1.0, -0.5}) alphas.push_back(beta + da);
  if (ge)
    for (double da : {0.5, 1.0, 2.0}) alphas.push_back(beta + da);

  for (double alpha : alphas) {
    const OrderCheckResult chk = rai_order_check(x, y, alpha, grid);
    ImplicationReport::AlphaCheck ac{alpha, false, {}};
    const OrderDirection want =
        alpha < beta ? OrderDirection::x_le_y : OrderDirection::x_ge_y;
    ac.holds = chk.direction == want || chk.direction == OrderDirection::equal;
    if (!ac.holds) {
      // first grid point violating the implied inequality
      for (double t : grid) {
        const double gap = grai_alpha(x, alpha, t) - grai_alpha(y, alpha, t);
        if ((want == OrderDirection::x_le_y && gap > 1e-12) ||
            (want == OrderDirection::x_ge_y && gap < -1e-12)) {
          ac.counterexample_x = t;
          break;
        }
      }
    }
    rep.checks.push_back(ac);
  }
  return rep;
}

}  // namespace raintensity
