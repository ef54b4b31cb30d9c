#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include "raintensity/distributions.hpp"
#include "raintensity/errors.hpp"

using namespace raintensity;

namespace {

const std::vector<ParametricFamily> kCatalog = {
    GeneralizedPareto(-1.0),
    GeneralizedPareto(0.0),
    GeneralizedPareto(0.7),
    Exponential(1.0),
    Exponential(2.0),
    InvWeibull2(2.0, 1.0),
    InvWeibull2(1.0, 3.0),
    InvLogLogistic(4.0, 0.5),
    InvModifiedWeibull(0.5, 2.0, 1.5),
    InvModifiedWeibull(2.0, 1.0, 0.0),
    ExponentiatedExponential(2.0, 1.5),
    ExponentiatedExponential(1.0, 2.0),
};

// central-difference derivative with adaptive step
double num_deriv(const ParametricFamily& d, double x) {
  const double h = std::max(1e-6 * x, 1e-9);
  return (cdf(d, x + h) - cdf(d, x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("cdf point values") {
  CHECK(cdf(InvLogLogistic(4.0, 0.5), 0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cdf(InvWeibull2(2.0, 1.0), 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(cdf(GeneralizedPareto(-1.0), 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("pdf point values") {
  CHECK(pdf(InvWeibull2(1.0, 1.0), 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(pdf(GeneralizedPareto(0.0), 0.5) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  // right-limit at the support edge
  CHECK(pdf(Exponential(2.0), 1e-300) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pdf(Exponential(2.0), 0.0) == 0.0);
  CHECK(pdf(InvWeibull2(2.0, 1.0), -1.0) == 0.0);
  CHECK_THROWS_AS(pdf(Exponential(1.0), std::nan("")), DomainError);
}

TEST_CASE("quantile point values") {
  CHECK(quantile(GeneralizedPareto(0.0), 1.0 - std::exp(-1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(quantile(InvLogLogistic(4.0, 0.5), 0.5) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(quantile(GeneralizedPareto(1.0), 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(quantile(Exponential(1.0), 0.0), DomainError);
  CHECK_THROWS_AS(quantile(Exponential(1.0), 1.0), DomainError);
}

TEST_CASE("cdf/quantile round-trip across the catalog") {
  for (const auto& d : kCatalog) {
    for (double p = 0.001; p < 0.9995; p += 0.0415) {
      const double x = quantile(d, p);
      CHECK(cdf(d, x) == doctest::Approx(p).epsilon(1e-10));
    }
  }
}

TEST_CASE("pdf matches the numerical cdf derivative") {
  for (const auto& d : kCatalog) {
    for (double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
      const double x = quantile(d, p);
      CHECK(pdf(d, x) == doctest::Approx(num_deriv(d, x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("pdf integrates to 1") {
  // adaptive Gauss-Kronrod between quantile break points covers both tails
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  const std::vector<double> breaks = {
      1e-9,  1e-6, 1e-3, 0.01, 0.05, 0.1,  0.3,        0.5,        0.7,
      0.9,   0.95, 0.99, 0.999, 1.0 - 1e-4, 1.0 - 1e-5, 1.0 - 1e-6,
      1.0 - 1e-7, 1.0 - 1e-8, 1.0 - 1e-9};
  for (const auto& d : kCatalog) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      const double a = quantile(d, breaks[i]);
      const double b = quantile(d, breaks[i + 1]);
      acc += GK::integrate([&d](double x) { return pdf(d, x); }, a, b, 12, 1e-12);
    }
    CHECK(acc == doctest::Approx(1.0).epsilon(2e-6));
  }
}

TEST_CASE("sf complements cdf") {
  for (const auto& d : kCatalog)
    for (double p : {0.01, 0.3, 0.5, 0.9, 0.999}) {
      const double x = quantile(d, p);
      CHECK(sf(d, x) == doctest::Approx(1.0 - cdf(d, x)).epsilon(1e-12));
    }
}

TEST_CASE("gpd alpha=0 coincides with Exponential(1)") {
  const ParametricFamily g = GeneralizedPareto(0.0);
  const ParametricFamily e = Exponential(1.0);
  for (double x = 0.05; x < 8.0; x += 0.17) {
    CHECK(cdf(g, x) == doctest::Approx(cdf(e, x)).epsilon(1e-14));
    CHECK(pdf(g, x) == doctest::Approx(pdf(e, x)).epsilon(1e-14));
  }
}

TEST_CASE("expexp alpha=1 coincides with Exponential(B)") {
  const ParametricFamily ee = ExponentiatedExponential(1.0, 2.0);
  const ParametricFamily e = Exponential(2.0);
  for (double x = 0.05; x < 4.0; x += 0.13) {
    CHECK(cdf(ee, x) == doctest::Approx(cdf(e, x)).epsilon(1e-13));
    CHECK(pdf(ee, x) == doctest::Approx(pdf(e, x)).epsilon(1e-13));
  }
}

TEST_CASE("gpd support bound for alpha > 0") {
  const ParametricFamily g = GeneralizedPareto(2.0);
  CHECK(support(g).hi == doctest::Approx(0.5));
  CHECK(cdf(g, 0.5) == 1.0);
  CHECK(cdf(g, 0.6) == 1.0);
  CHECK(cdf(g, 0.0) == 0.0);
}

TEST_CASE("construction validates parameters") {
  CHECK_THROWS_AS(Exponential(0.0), DomainError);
  CHECK_THROWS_AS(Exponential(-1.0), DomainError);
  CHECK_THROWS_AS(InvWeibull2(1.0, std::nan("")), DomainError);
  CHECK_THROWS_AS(InvLogLogistic(-2.0, 1.0), DomainError);
  CHECK_THROWS_AS(InvModifiedWeibull(1.0, 1.0, -0.5), DomainError);
  CHECK_NOTHROW(InvModifiedWeibull(1.0, 1.0, 0.0));
  CHECK_THROWS_AS(ExponentiatedExponential(0.0, 1.0), DomainError);
}

TEST_CASE("sampling: forced uniform, determinism, median band") {
  const ParametricFamily d = InvLogLogistic(4.0, 0.5);
  CHECK(sample_from_uniform(d, 0.5) == doctest::Approx(0.5).epsilon(1e-14));

  const Sample a = sample(d, 100, 42);
  const Sample b = sample(d, 100, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a.values()[i] == b.values()[i]);

  const Sample c = sample(d, 1000, 7);
  const double med = c.quantile(0.5);
  CHECK(med > 0.45);
  CHECK(med < 0.55);

  CHECK_THROWS_AS(sample(d, 0, 1), DomainError);
}

TEST_CASE("family spec grammar") {
  CHECK(to_string(parse_family("invw2(beta=2,lambda=1)")) ==
        "invw2(beta=2,lambda=1)");
  CHECK(to_string(parse_family("INVLLOG(Gamma=4, Lambda=0.5)")) ==
        "invllog(gamma=4,lambda=0.5)");
  CHECK_NOTHROW(parse_family("invmw(gamma=0.3,lambda=550,delta=31.7)"));
  CHECK_NOTHROW(parse_family("gpd(alpha=-1)"));
  CHECK_NOTHROW(parse_family("exp(b=2)"));
  CHECK_NOTHROW(parse_family("expexp(alpha=2,b=1.5)"));
  CHECK_THROWS_AS(parse_family("weibull(k=1)"), DomainError);
  CHECK_THROWS_AS(parse_family("exp(b=1,extra=2)"), DomainError);
  CHECK_THROWS_AS(parse_family("exp(2)"), DomainError);      // positional
  CHECK_THROWS_AS(parse_family("exp(b=abc)"), DomainError);  // non-numeric
  CHECK_THROWS_AS(parse_family("exp(b=0)"), DomainError);    // constraint
}
