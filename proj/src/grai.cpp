#include "raintensity/grai.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "raintensity/errors.hpp"

namespace raintensity {

namespace {

constexpr double kCdfFloor = 1e-300;
constexpr double kSurvivalFloor = 1e-15;
constexpr double kAlphaZeroBand = 1e-8;

// log F from a cdf value; exact subtraction for F > 0.5 keeps precision
// when F is close to 1.
double log_from_prob(double F) {
  return F > 0.5 ? std::log1p(F - 1.0) : std::log(F);
}

void check_prob_band(double F) {
  if (!(F > kCdfFloor))
    throw DomainError("grai: cdf below evaluation floor");
  if (!(1.0 - F > kSurvivalFloor))
    throw DomainError("grai: cdf too close to 1");
}

double intensity_value(double x, double P, double f, double alpha) {
  const double lP = log_from_prob(P);
  if (std::abs(alpha) < kAlphaZeroBand) return -x * f / (P * lP);
  const double t = alpha * lP;  // log P^alpha
  if (t > 700.0) return -alpha * x * (f / P);  // 1 - P^alpha ~ -P^alpha
  const double denom = -std::expm1(t);         // 1 - P^alpha
  return alpha * x * std::exp((alpha - 1.0) * lP) * f / denom;
}

}  // namespace

double grai_value(double x, double F, double f, double alpha) {
  check_prob_band(F);
  return intensity_value(x, F, f, alpha);
}

double ai_value(double x, double S, double f, double alpha) {
  check_prob_band(S);
  return intensity_value(x, S, f, alpha);
}

double reversed_hazard(const ParametricFamily& d, double x) {
  const double F = cdf(d, x);
  if (!(F > kCdfFloor))
    throw DomainError("reversed hazard undefined: cdf below floor");
  return pdf(d, x) / F;
}

double cum_reversed_hazard_alpha(const ParametricFamily& d, double alpha, double x) {
  const double F = cdf(d, x);
  if (F == 0.0 && alpha <= 0.0)
    throw NumericalError("cumulative reversed hazard overflows: F(x)=0 with alpha<=0");
  if (std::abs(alpha) < kAlphaZeroBand) {
    if (F == 0.0)
      throw NumericalError("cumulative reversed hazard overflows: F(x)=0");
    return -log_from_prob(F);
  }
  if (alpha == 1.0) return sf(d, x);
  if (F == 0.0) return 1.0 / alpha;  // alpha > 0 here
  const double t = alpha * log_from_prob(F);
  if (t > 700.0)
    throw NumericalError("cumulative reversed hazard overflows: F^alpha too large");
  return -std::expm1(t) / alpha;
}

namespace {

// exp(z)/(1-exp(z)) evaluated stably for any sign of z.
double exp_ratio(double z) {
  if (z > 0.0) return -1.0 / -std::expm1(-z);  // = e^z/(1-e^z), negative
  return std::exp(z) / -std::expm1(z);
}

// Closed form for the inverse Weibull: L_a(x) = (a b l / x^b) *
// e^{-l a / x^b} / (1 - e^{-l a / x^b}), and the constant b at a=0.
double grai_invw2(const InvWeibull2& f, double alpha, double x) {
  if (std::abs(alpha) < kAlphaZeroBand) return f.shape;
  const double w = f.scale * std::pow(x, -f.shape);
  return alpha * f.shape * w * exp_ratio(-alpha * w);
}

}  // namespace

double grai_alpha(const ParametricFamily& d, double alpha, double x) {
  const Support s = support(d);
  if (!(x > s.lo && x < s.hi))
    throw DomainError("grai: x outside the open support");
  if (const auto* w = std::get_if<InvWeibull2>(&d)) return grai_invw2(*w, alpha, x);
  if (const auto* m = std::get_if<InvModifiedWeibull>(&d);
      m && std::abs(alpha) < kAlphaZeroBand)
    return m->shape + m->rate * x;
  if (const auto* l = std::get_if<InvLogLogistic>(&d); l && alpha == -1.0)
    return l->shape;
  if (const auto* e = std::get_if<ExponentiatedExponential>(&d); e && alpha == e->alpha)
    return e->rate * x;
  return grai_value(x, cdf(d, x), pdf(d, x), alpha);
}

double ai_alpha(const ParametricFamily& d, double alpha, double x) {
  const Support s = support(d);
  if (!(x > s.lo && x < s.hi))
    throw DomainError("ai: x outside the open support");
  return ai_value(x, sf(d, x), pdf(d, x), alpha);
}

CdfModel family_model(const ParametricFamily& d) {
  return {[d](double x) { return cdf(d, x); }, [d](double x) { return pdf(d, x); }};
}

TransformModel pareto_transform(double alpha) {
  const GeneralizedPareto g(alpha);
  const ParametricFamily fam = g;
  return {[fam](double p) { return quantile(fam, p); },
          [fam](double x) { return pdf(fam, x); }};
}

double grai_general(const CdfModel& F, const TransformModel& G, double x) {
  const double Fx = F.cdf(x);
  check_prob_band(Fx);
  const double v = G.quantile(1.0 - Fx);  // G^{-1}(1-F(x))
  const double gv = G.pdf(v);
  if (!(gv > 0.0) || !std::isfinite(v))
    throw DomainError("grai_general: transform density vanishes at the evaluation point");
  return x * F.pdf(x) / (gv * v);
}

// ---------------------------------------------------------------------------
// GraiCurve

GraiCurve GraiCurve::symbolic(ParametricFamily d, double alpha) {
  return GraiCurve(Sym{std::move(d), alpha});
}

GraiCurve GraiCurve::tabulated(std::vector<double> grid, std::vector<double> values,
                               std::optional<double> alpha_hint) {
  if (grid.size() < 2) throw DomainError("tabulated curve needs >= 2 points");
  if (grid.size() != values.size())
    throw DomainError("tabulated curve: grid/value size mismatch");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
      throw DomainError("tabulated curve: abscissae must be positive and finite");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError("tabulated curve: abscissae must be strictly increasing");
    if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
      throw DomainError("tabulated curve: values must be finite and >= 0");
  }
  return GraiCurve(Tab{std::move(grid), std::move(values), alpha_hint});
}

double GraiCurve::operator()(double x) const {
  if (const auto* s = std::get_if<Sym>(&repr_))
    return grai_alpha(s->family, s->alpha, x);
  const auto& t = std::get<Tab>(repr_);
  if (x <= t.grid.front()) return t.values.front();
  if (x >= t.grid.back()) return t.values.back();
  const auto it = std::upper_bound(t.grid.begin(), t.grid.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - t.grid.begin()) - 1;
  const double u0 = std::log(t.grid[i]), u1 = std::log(t.grid[i + 1]);
  const double w = (std::log(x) - u0) / (u1 - u0);
  return t.values[i] + w * (t.values[i + 1] - t.values[i]);
}

bool GraiCurve::extrapolates(double x) const {
  const auto* t = std::get_if<Tab>(&repr_);
  if (!t) return false;
  return x < t->grid.front() || x > t->grid.back();
}

std::optional<double> GraiCurve::alpha_hint() const {
  if (const auto* s = std::get_if<Sym>(&repr_)) return s->alpha;
  return std::get<Tab>(repr_).alpha_hint;
}

std::span<const double> GraiCurve::grid() const {
  const auto* t = std::get_if<Tab>(&repr_);
  if (!t) throw DomainError("curve is symbolic: no grid");
  return t->grid;
}

std::span<const double> GraiCurve::values() const {
  const auto* t = std::get_if<Tab>(&repr_);
  if (!t) throw DomainError("curve is symbolic: no values");
  return t->values;
}

const ParametricFamily& GraiCurve::family() const {
  const auto* s = std::get_if<Sym>(&repr_);
  if (!s) throw DomainError("curve is tabulated: no family");
  return s->family;
}

// ---------------------------------------------------------------------------
// TSV format

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_curve_tsv(const GraiCurve& curve, const std::string& path,
                     std::span<const double> abscissae) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  const double alpha = curve.alpha_hint().value_or(
      std::numeric_limits<double>::quiet_NaN());
  out << "# grai alpha=" << fmt17(alpha) << "\n";
  auto emit = [&](double x, double v) {
    out << fmt17(x) << '\t' << fmt17(v) << '\n';
  };
  if (!abscissae.empty()) {
    for (double x : abscissae) emit(x, curve(x));
  } else if (curve.is_tabulated()) {
    auto g = curve.grid();
    auto v = curve.values();
    for (std::size_t i = 0; i < g.size(); ++i) emit(g[i], v[i]);
  } else {
    throw DomainError("symbolic curve requires explicit abscissae to write");
  }
}

GraiCurve read_curve_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::string line;
  std::optional<double> alpha_hint;
  std::vector<double> xs, vs;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("alpha=");
      if (pos != std::string::npos) {
        try {
          alpha_hint = std::stod(line.substr(pos + 6));
        } catch (const std::exception&) {
          // header without a parseable alpha is tolerated
        }
      }
      continue;
    }
    std::istringstream ls(line);
    double x, v;
    if (!(ls >> x >> v))
      throw DomainError("curve file '" + path + "': bad row at line " +
                        std::to_string(lineno));
    xs.push_back(x);
    vs.push_back(v);
  }
  return GraiCurve::tabulated(std::move(xs), std::move(vs), alpha_hint);
}

}  // namespace raintensity
