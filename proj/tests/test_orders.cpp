#include <cmath>
#include <vector>

#include <doctest.h>

#include "raintensity/errors.hpp"
#include "raintensity/orders.hpp"

using namespace raintensity;

TEST_CASE("rai order basics") {
  const ParametricFamily x = InvLogLogistic(3.0, 0.8);
  CHECK(rai_order_check(x, x, 0.7, joint_interior_grid(x, x)).direction ==
        OrderDirection::equal);

  // constant GRAI levels 3 < 5 at alpha=-1
  const ParametricFamily y = InvLogLogistic(5.0, 0.8);
  const auto res = rai_order_check(x, y, -1.0, joint_interior_grid(x, y));
  CHECK(res.direction == OrderDirection::x_le_y);
  CHECK(res.max_signed_gap == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(res.crossings.empty());
}

TEST_CASE("alpha=1 order agrees with the hazard comparison") {
  const ParametricFamily x = Exponential(2.0);
  const ParametricFamily y = Exponential(1.0);
  const auto grid = joint_interior_grid(x, y);
  const auto res = rai_order_check(x, y, 1.0, grid);
  CHECK(res.direction == OrderDirection::x_ge_y);  // Exp(2) <=hr Exp(1)
  // independent check: x * f/(1-F) ordering on the grid
  for (double t : grid) {
    const double hx = t * pdf(x, t) / (1.0 - cdf(x, t));
    const double hy = t * pdf(y, t) / (1.0 - cdf(y, t));
    CHECK(hx >= hy - 1e-12);
  }
}

TEST_CASE("alpha=-1 order agrees with the log-odds comparison") {
  const ParametricFamily x = InvWeibull2(2.0, 1.0);
  const ParametricFamily y = InvWeibull2(2.0, 3.0);
  const auto grid = joint_interior_grid(x, y);
  const auto res = rai_order_check(x, y, -1.0, grid);
  for (double t : grid) {
    const double gx = t * pdf(x, t) / (cdf(x, t) * (1.0 - cdf(x, t)));
    const double gy = t * pdf(y, t) / (cdf(y, t) * (1.0 - cdf(y, t)));
    if (res.direction == OrderDirection::x_le_y) CHECK(gx <= gy + 1e-10);
  }
  CHECK(res.direction == OrderDirection::x_le_y);
}

TEST_CASE("alpha=n order agrees with the largest-order-statistic hazards") {
  const ParametricFamily x = Exponential(2.0);
  const ParametricFamily y = Exponential(1.0);
  const auto grid = joint_interior_grid(x, y, 128);
  for (double n : {2.0, 3.0}) {
    const auto res = rai_order_check(x, y, n, grid);
    // hazard of the maximum: n F^{n-1} f / (1 - F^n)
    bool ge = true;
    for (double t : grid) {
      const double Fx = cdf(x, t), Fy = cdf(y, t);
      const double hx = n * std::pow(Fx, n - 1) * pdf(x, t) / (1.0 - std::pow(Fx, n));
      const double hy = n * std::pow(Fy, n - 1) * pdf(y, t) / (1.0 - std::pow(Fy, n));
      ge = ge && (t * hx >= t * hy - 1e-12);
    }
    CHECK(ge);
    CHECK(res.direction == OrderDirection::x_ge_y);
  }
}

TEST_CASE("crossing detection") {
  // different shapes cross: invLLog(3,1) vs invLLog(5,1) GRAI at alpha=0
  const ParametricFamily x = InvLogLogistic(3.0, 1.0);
  const ParametricFamily y = InvLogLogistic(5.0, 1.0);
  const auto res = rai_order_check(x, y, 1.0, joint_interior_grid(x, y));
  CHECK(res.direction == OrderDirection::crossing);
  CHECK(!res.crossings.empty());
}

TEST_CASE("reciprocal duality") {
  // 1/X for X ~ invW2(beta, lambda) is Weibull: F(x) = 1 - exp(-lambda x^beta)
  const ParametricFamily d = InvWeibull2(2.0, 1.5);
  const GenericDist recip = reciprocal_of(d);
  std::vector<double> grid;
  for (int i = 0; i < 60; ++i)
    grid.push_back(0.2 * std::pow(3.0 / 0.2, i / 59.0));
  for (double alpha : {-1.0, 0.0, 0.7})
    CHECK(reciprocal_duality_check(d, recip, alpha, grid) < 1e-10);

  // closed-form Weibull built by hand matches the adapter
  const GenericDist weib{
      [](double x) { return -std::expm1(-1.5 * x * x); },
      [](double x) { return 3.0 * x * std::exp(-1.5 * x * x); }};
  for (double alpha : {-1.0, 0.0})
    CHECK(reciprocal_duality_check(d, weib, alpha, grid) < 1e-10);

  // inverse log-logistic <-> log-logistic
  const ParametricFamily l = InvLogLogistic(4.0, 0.5);
  const GenericDist recip_l = reciprocal_of(l);
  for (double alpha : {-1.0, 0.5})
    CHECK(reciprocal_duality_check(l, recip_l, alpha, grid) < 1e-10);

  // negative control: a wrong reciprocal is loudly rejected
  const GenericDist wrong = reciprocal_of(InvWeibull2(2.0, 3.0));
  CHECK(reciprocal_duality_check(d, wrong, 0.0, grid) > 0.1);
}

TEST_CASE("implication cascades") {
  // case 1: X <=st Y with X <=_{-1 RAI} Y (scale-ordered inverse Weibulls)
  const ParametricFamily x1 = InvWeibull2(2.0, 1.0);
  const ParametricFamily y1 = InvWeibull2(2.0, 3.0);
  const auto rep1 = implication_report(x1, y1, -1.0, joint_interior_grid(x1, y1));
  CHECK(rep1.premise_st);
  CHECK(rep1.premise_holds());
  REQUIRE(!rep1.checks.empty());
  for (const auto& c : rep1.checks) {
    CHECK(c.alpha < -1.0);
    CHECK(c.holds);
  }

  // case 2: Exp(2) <=st Exp(1) with X >=_{-1 RAI} Y propagates upward
  const ParametricFamily x2 = Exponential(2.0);
  const ParametricFamily y2 = Exponential(1.0);
  const auto rep2 = implication_report(x2, y2, -1.0, joint_interior_grid(x2, y2));
  CHECK(rep2.premise_st);
  CHECK(rep2.beta_direction == OrderDirection::x_ge_y);
  REQUIRE(!rep2.checks.empty());
  for (const auto& c : rep2.checks) {
    CHECK(c.alpha > -1.0);
    CHECK(c.holds);
  }

  // at beta=0 the two inverse Weibulls tie (both constant beta): the equal
  // premise propagates in both directions and every spot check must hold
  const auto rep3 = implication_report(x1, y1, 0.0, joint_interior_grid(x1, y1));
  CHECK(rep3.beta_direction == OrderDirection::equal);
  CHECK(rep3.checks.size() == 6);
  for (const auto& c : rep3.checks) CHECK(c.holds);

  // crossing cdfs: premise fails, no implication claimed
  const ParametricFamily xc = InvLogLogistic(3.0, 1.0);
  const ParametricFamily yc = InvLogLogistic(5.0, 1.0);
  const auto repc = implication_report(xc, yc, -1.0, joint_interior_grid(xc, yc));
  CHECK(!repc.premise_st);
  CHECK(!repc.premise_holds());
  CHECK(repc.checks.empty());

  // identical families: every order holds with equality
  const auto repe = implication_report(x1, x1, 0.5, joint_interior_grid(x1, x1));
  CHECK(repe.premise_holds());
  for (const auto& c : repe.checks) CHECK(c.holds);
}

TEST_CASE("grid construction guards") {
  const ParametricFamily a = GeneralizedPareto(2.0);   // support (0, 0.5)
  const ParametricFamily b = InvWeibull2(2.0, 400.0);  // mass far right
  CHECK_THROWS_AS(joint_interior_grid(a, b), DomainError);
}
