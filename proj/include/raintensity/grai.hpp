#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "raintensity/distributions.hpp"

namespace raintensity {

// Intensity functions derived from a cdf F with density f, for x > 0:
//   reversed hazard            r(x)   = f/F
//   alpha-generalized cum. r.h R_a(x) = (1-F^alpha)/alpha     (-log F at alpha=0)
//   alpha-generalized RAI      L_a(x) = r_a(x) / (R_a(x)/x)
// The alpha=0 branch is used for |alpha| < 1e-8 to avoid cancellation.
// Evaluations require 1e-300 < F and 1-F > 1e-15; outside that band a
// DomainError is thrown and callers restrict themselves to interior quantiles.

/// Reversed aging intensity value from precomputed cdf and density values.
double grai_value(double x, double F, double f, double alpha);

/// Forward aging intensity value from precomputed survival and density values.
double ai_value(double x, double S, double f, double alpha);

/// f(x)/F(x). Throws DomainError when the cdf is below the evaluation floor.
double reversed_hazard(const ParametricFamily& d, double x);

/// (1-F^alpha)/alpha for alpha != 0, -log F for alpha = 0. Throws
/// NumericalError when F(x)=0 with alpha <= 0 (the value is +inf).
double cum_reversed_hazard_alpha(const ParametricFamily& d, double alpha, double x);

/// alpha-generalized reversed aging intensity. Closed forms are used for
/// (invw2, any alpha), (invmw, 0), (invllog, -1) and (expexp, its own alpha);
/// everything else goes through the generic branch.
double grai_alpha(const ParametricFamily& d, double alpha, double x);

/// alpha-generalized (forward) aging intensity.
double ai_alpha(const ParametricFamily& d, double alpha, double x);

/// Distribution under study: cdf F with density f.
struct CdfModel {
  std::function<double(double)> cdf;
  std::function<double(double)> pdf;
};

/// Generalizing transform G: strictly increasing cdf given through its
/// quantile and density.
struct TransformModel {
  std::function<double(double)> quantile;
  std::function<double(double)> pdf;
};

CdfModel family_model(const ParametricFamily& d);

/// W_alpha as a transform.
TransformModel pareto_transform(double alpha);

/// G-generalized reversed aging intensity
///   x f(x) / [ g(G^{-1}(1-F(x))) * G^{-1}(1-F(x)) ].
double grai_general(const CdfModel& F, const TransformModel& G, double x);

/// A GRAI function: either the exact curve of a (family, alpha) pair or a
/// table interpolated linearly in (log x, value), constant beyond the grid.
class GraiCurve {
 public:
  static GraiCurve symbolic(ParametricFamily d, double alpha);
  static GraiCurve tabulated(std::vector<double> grid, std::vector<double> values,
                             std::optional<double> alpha_hint = {});

  double operator()(double x) const;
  bool is_tabulated() const { return std::holds_alternative<Tab>(repr_); }
  /// True when a tabulated curve would extrapolate at x (always false for
  /// symbolic curves).
  bool extrapolates(double x) const;
  /// The alpha the curve was built for, when known.
  std::optional<double> alpha_hint() const;

  /// Tabulated access (throws DomainError for symbolic curves).
  std::span<const double> grid() const;
  std::span<const double> values() const;
  const ParametricFamily& family() const;

 private:
  struct Sym {
    ParametricFamily family;
    double alpha;
  };
  struct Tab {
    std::vector<double> grid;
    std::vector<double> values;
    std::optional<double> alpha_hint;
  };
  explicit GraiCurve(Sym s) : repr_(std::move(s)) {}
  explicit GraiCurve(Tab t) : repr_(std::move(t)) {}
  std::variant<Sym, Tab> repr_;
};

/// Write/read the two-column TSV curve format: header '# grai alpha=<value>'
/// followed by 'x<TAB>L' lines with strictly increasing x.
void write_curve_tsv(const GraiCurve& curve, const std::string& path,
                     std::span<const double> abscissae = {});
GraiCurve read_curve_tsv(const std::string& path);

}  // namespace raintensity
