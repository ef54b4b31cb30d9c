#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "raintensity/distributions.hpp"
#include "raintensity/grai.hpp"

namespace raintensity {

// Grid-based checking of the alpha-RAI order X <= Y, defined by
// L_{alpha,X}(x) <= L_{alpha,Y}(x) for all x. A grid verdict is numerical
// evidence, not proof.

enum class OrderDirection { equal, x_le_y, x_ge_y, crossing };

std::string to_string(OrderDirection dir);

struct OrderCheckResult {
  OrderDirection direction;
  double alpha;
  double max_signed_gap;            // max over the grid of L_X - L_Y
  std::vector<double> crossings;    // abscissae where the sign flips
  std::vector<double> grid;
};

/// Log-spaced grid across the joint interior-quantile band
/// [max of the q_plo, min of the q_phi] of the two families.
std::vector<double> joint_interior_grid(const ParametricFamily& x,
                                        const ParametricFamily& y, int n = 512,
                                        double p_lo = 0.001, double p_hi = 0.999);

/// Pointwise GRAI comparison with an absolute tie tolerance.
OrderCheckResult rai_order_check(const ParametricFamily& x, const ParametricFamily& y,
                                 double alpha, std::span<const double> grid,
                                 double tie_tol = 1e-12);

/// A distribution given by arbitrary cdf/pdf callables (used for reciprocal
/// pairs constructed on the fly).
struct GenericDist {
  std::function<double(double)> cdf;
  std::function<double(double)> pdf;
};

/// Law of 1/X: cdf 1 - F_X(1/x), pdf f_X(1/x)/x^2.
GenericDist reciprocal_of(const ParametricFamily& d);

/// Max over the grid of |L_{alpha,X}(1/x) - reversed L_{alpha,1/X}(x)|
/// (the reciprocal duality identity; d_recip must be the law of 1/X).
double reciprocal_duality_check(const ParametricFamily& d, const GenericDist& d_recip,
                                double alpha, std::span<const double> grid);

/// Premise-and-conclusion check of the order-propagation property:
/// if X <=_st Y and X <=_{beta RAI} Y then X <=_{alpha RAI} Y for alpha < beta
/// (case 1); the reversed-order premise propagates to alpha > beta (case 2).
struct ImplicationReport {
  bool premise_st = false;         // F_X >= F_Y on the grid
  OrderDirection beta_direction = OrderDirection::crossing;
  double beta;
  struct AlphaCheck {
    double alpha;
    bool holds;
    std::optional<double> counterexample_x;
  };
  std::vector<AlphaCheck> checks;  // empty when the premise fails
  bool premise_holds() const {
    return premise_st && (beta_direction == OrderDirection::x_le_y ||
                          beta_direction == OrderDirection::x_ge_y ||
                          beta_direction == OrderDirection::equal);
  }
};

ImplicationReport implication_report(const ParametricFamily& x,
                                     const ParametricFamily& y, double beta,
                                     std::span<const double> grid);

}  // namespace raintensity
