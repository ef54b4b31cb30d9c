#include "raintensity/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "raintensity/errors.hpp"
#include "raintensity/rng.hpp"

namespace raintensity {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0)
    throw DomainError(std::string(what) + " must be finite and > 0");
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

void check_x(double x) {
  if (std::isnan(x)) throw DomainError("x is NaN");
  if (std::isinf(x) && x < 0) throw DomainError("x is -inf");
}

}  // namespace

GeneralizedPareto::GeneralizedPareto(double alpha_) : alpha(alpha_) {
  require_finite(alpha, "gpd alpha");
}

Exponential::Exponential(double rate_) : rate(rate_) {
  require_finite_positive(rate, "exponential rate");
}

InvWeibull2::InvWeibull2(double shape_, double scale_) : shape(shape_), scale(scale_) {
  require_finite_positive(shape, "invw2 shape");
  require_finite_positive(scale, "invw2 scale");
}

InvLogLogistic::InvLogLogistic(double shape_, double scale_) : shape(shape_), scale(scale_) {
  require_finite_positive(shape, "invllog shape");
  require_finite_positive(scale, "invllog scale");
}

InvModifiedWeibull::InvModifiedWeibull(double shape_, double scale_, double rate_)
    : shape(shape_), scale(scale_), rate(rate_) {
  require_finite_positive(shape, "invmw shape");
  require_finite_positive(scale, "invmw scale");
  if (!std::isfinite(rate) || rate < 0.0)
    throw DomainError("invmw rate must be finite and >= 0");
}

ExponentiatedExponential::ExponentiatedExponential(double alpha_, double rate_)
    : alpha(alpha_), rate(rate_) {
  require_finite_positive(alpha, "expexp alpha");
  require_finite_positive(rate, "expexp rate");
}

Support support(const ParametricFamily& d) {
  if (const auto* g = std::get_if<GeneralizedPareto>(&d); g && g->alpha > 0.0)
    return {0.0, 1.0 / g->alpha};
  return {0.0, kInf};
}

namespace {

// cdf/sf/pdf/quantile cores per family; x already range-checked.

double gpd_cdf(double alpha, double x) {
  if (alpha == 0.0) return -std::expm1(-x);
  // 1 - (1 - alpha x)^(1/alpha)
  return -std::expm1(std::log1p(-alpha * x) / alpha);
}

double gpd_sf(double alpha, double x) {
  if (alpha == 0.0) return std::exp(-x);
  return std::exp(std::log1p(-alpha * x) / alpha);
}

double gpd_pdf(double alpha, double x) {
  if (alpha == 0.0) return std::exp(-x);
  return std::exp(std::log1p(-alpha * x) * ((1.0 - alpha) / alpha));
}

double gpd_quantile(double alpha, double p) {
  if (alpha == 0.0) return -std::log1p(-p);
  return -std::expm1(alpha * std::log1p(-p)) / alpha;
}

double invw2_arg(const InvWeibull2& d, double x) {
  return d.scale * std::pow(x, -d.shape);
}

double invmw_arg(const InvModifiedWeibull& d, double x) {
  return std::pow(d.scale / x, d.shape) * std::exp(-d.rate * x);
}

double expexp_log_base(const ExponentiatedExponential& d, double x) {
  // log(1 - exp(-rate x))
  return std::log(-std::expm1(-d.rate * x));
}

}  // namespace

double cdf(const ParametricFamily& d, double x) {
  check_x(x);
  const Support s = support(d);
  if (x <= s.lo) return 0.0;
  if (x >= s.hi) return 1.0;
  return std::visit(
      [x](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GeneralizedPareto>) {
          return gpd_cdf(f.alpha, x);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return -std::expm1(-f.rate * x);
        } else if constexpr (std::is_same_v<T, InvWeibull2>) {
          return std::exp(-invw2_arg(f, x));
        } else if constexpr (std::is_same_v<T, InvLogLogistic>) {
          const double t = std::pow(f.scale / x, f.shape);
          return 1.0 / (1.0 + t);
        } else if constexpr (std::is_same_v<T, InvModifiedWeibull>) {
          return std::exp(-invmw_arg(f, x));
        } else {
          return std::exp(expexp_log_base(f, x) / f.alpha);
        }
      },
      d);
}

double sf(const ParametricFamily& d, double x) {
  check_x(x);
  const Support s = support(d);
  if (x <= s.lo) return 1.0;
  if (x >= s.hi) return 0.0;
  return std::visit(
      [x](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GeneralizedPareto>) {
          return gpd_sf(f.alpha, x);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return std::exp(-f.rate * x);
        } else if constexpr (std::is_same_v<T, InvWeibull2>) {
          return -std::expm1(-invw2_arg(f, x));
        } else if constexpr (std::is_same_v<T, InvLogLogistic>) {
          const double t = std::pow(f.scale / x, f.shape);
          return t / (1.0 + t);
        } else if constexpr (std::is_same_v<T, InvModifiedWeibull>) {
          return -std::expm1(-invmw_arg(f, x));
        } else {
          return -std::expm1(expexp_log_base(f, x) / f.alpha);
        }
      },
      d);
}

double pdf(const ParametricFamily& d, double x) {
  check_x(x);
  const Support s = support(d);
  if (x <= s.lo || x >= s.hi) return 0.0;
  return std::visit(
      [x](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GeneralizedPareto>) {
          return gpd_pdf(f.alpha, x);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return f.rate * std::exp(-f.rate * x);
        } else if constexpr (std::is_same_v<T, InvWeibull2>) {
          const double a = invw2_arg(f, x);
          return f.shape * a / x * std::exp(-a);
        } else if constexpr (std::is_same_v<T, InvLogLogistic>) {
          const double t = std::pow(f.scale / x, f.shape);
          const double den = 1.0 + t;
          return f.shape / x * t / (den * den);
        } else if constexpr (std::is_same_v<T, InvModifiedWeibull>) {
          const double a = invmw_arg(f, x);
          return std::exp(-a) * a * (f.shape / x + f.rate);
        } else {
          const double lb = expexp_log_base(f, x);  // log(1-e^{-Bx})
          return f.rate * std::exp(-f.rate * x) / f.alpha *
                 std::exp(lb * (1.0 / f.alpha - 1.0));
        }
      },
      d);
}

namespace {

double invmw_quantile(const InvModifiedWeibull& d, double p) {
  // F is strictly increasing; bracket then bisect. exp(-rate x) <= 1 gives
  // F >= the rate=0 cdf, so the rate=0 quantile bounds from above.
  const double target = -std::log(p);  // (scale/x)^shape e^{-rate x} = target
  double hi = d.scale * std::pow(target, -1.0 / d.shape);
  while (invmw_arg(d, hi) > target) hi *= 2.0;
  double lo = hi;
  while (invmw_arg(d, lo) < target) lo *= 0.5;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (invmw_arg(d, mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double quantile(const ParametricFamily& d, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile: p outside (0,1)");
  return std::visit(
      [p](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GeneralizedPareto>) {
          return gpd_quantile(f.alpha, p);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return -std::log1p(-p) / f.rate;
        } else if constexpr (std::is_same_v<T, InvWeibull2>) {
          return std::pow(f.scale / -std::log(p), 1.0 / f.shape);
        } else if constexpr (std::is_same_v<T, InvLogLogistic>) {
          return f.scale * std::pow(p / (1.0 - p), 1.0 / f.shape);
        } else if constexpr (std::is_same_v<T, InvModifiedWeibull>) {
          if (f.rate == 0.0)
            return f.scale * std::pow(-std::log(p), -1.0 / f.shape);
          return invmw_quantile(f, p);
        } else {
          // 1 - e^{-Bx} = p^alpha
          return -std::log1p(-std::exp(f.alpha * std::log(p))) / f.rate;
        }
      },
      d);
}

double sample_from_uniform(const ParametricFamily& d, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("uniform draw outside (0,1)");
  return quantile(d, 1.0 - u);
}

Sample sample(const ParametricFamily& d, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample: n must be >= 1");
  SplitMix64 gen(seed);
  std::vector<double> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    values.push_back(sample_from_uniform(d, gen.uniform01()));
  return Sample(std::move(values), to_string(d));
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string to_string(const ParametricFamily& d) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GeneralizedPareto>) {
          return "gpd(alpha=" + fmt(f.alpha) + ")";
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return "exp(b=" + fmt(f.rate) + ")";
        } else if constexpr (std::is_same_v<T, InvWeibull2>) {
          return "invw2(beta=" + fmt(f.shape) + ",lambda=" + fmt(f.scale) + ")";
        } else if constexpr (std::is_same_v<T, InvLogLogistic>) {
          return "invllog(gamma=" + fmt(f.shape) + ",lambda=" + fmt(f.scale) + ")";
        } else if constexpr (std::is_same_v<T, InvModifiedWeibull>) {
          return "invmw(gamma=" + fmt(f.shape) + ",lambda=" + fmt(f.scale) +
                 ",delta=" + fmt(f.rate) + ")";
        } else {
          return "expexp(alpha=" + fmt(f.alpha) + ",b=" + fmt(f.rate) + ")";
        }
      },
      d);
}

namespace {

std::string lower_nospace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::map<std::string, double> parse_kwargs(const std::string& body,
                                           const std::string& ctx) {
  std::map<std::string, double> kw;
  if (body.empty()) return kw;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    const std::string item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw DomainError("family spec '" + ctx + "': expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string valstr = item.substr(eq + 1);
    std::size_t used = 0;
    double val;
    try {
      val = std::stod(valstr, &used);
    } catch (const std::exception&) {
      throw DomainError("family spec '" + ctx + "': bad numeric value '" + valstr + "'");
    }
    if (used != valstr.size())
      throw DomainError("family spec '" + ctx + "': bad numeric value '" + valstr + "'");
    if (!kw.emplace(key, val).second)
      throw DomainError("family spec '" + ctx + "': duplicate parameter '" + key + "'");
    pos = comma + 1;
  }
  return kw;
}

double take(std::map<std::string, double>& kw, const std::string& key,
            const std::string& ctx) {
  auto it = kw.find(key);
  if (it == kw.end())
    throw DomainError("family spec '" + ctx + "': missing parameter '" + key + "'");
  const double v = it->second;
  kw.erase(it);
  return v;
}

}  // namespace

ParametricFamily parse_family(const std::string& text) {
  const std::string s = lower_nospace(text);
  const std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw DomainError("family spec '" + text + "': expected name(key=value,...)");
  const std::string name = s.substr(0, open);
  auto kw = parse_kwargs(s.substr(open + 1, s.size() - open - 2), text);

  ParametricFamily out = [&]() -> ParametricFamily {
    if (name == "gpd") return GeneralizedPareto(take(kw, "alpha", text));
    if (name == "exp") return Exponential(take(kw, "b", text));
    if (name == "invw2") {
      const double beta = take(kw, "beta", text);
      return InvWeibull2(beta, take(kw, "lambda", text));
    }
    if (name == "invllog") {
      const double gamma = take(kw, "gamma", text);
      return InvLogLogistic(gamma, take(kw, "lambda", text));
    }
    if (name == "invmw") {
      const double gamma = take(kw, "gamma", text);
      const double lambda = take(kw, "lambda", text);
      return InvModifiedWeibull(gamma, lambda, take(kw, "delta", text));
    }
    if (name == "expexp") {
      const double alpha = take(kw, "alpha", text);
      return ExponentiatedExponential(alpha, take(kw, "b", text));
    }
    throw DomainError("family spec '" + text + "': unknown family '" + name + "'");
  }();
  if (!kw.empty())
    throw DomainError("family spec '" + text + "': unexpected parameter '" +
                      kw.begin()->first + "'");
  return out;
}

}  // namespace raintensity
