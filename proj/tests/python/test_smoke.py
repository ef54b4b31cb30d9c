"""Smoke tests for the python bindings."""

import math

import pytest

import raintensity as ri


def test_family_basics():
    d = ri.parse_family("invllog(gamma=4,lambda=0.5)")
    assert d.cdf(0.5) == pytest.approx(0.5)
    assert d.quantile(0.5) == pytest.approx(0.5)
    assert d.pdf(0.5) > 0
    lo, hi = d.support()
    assert lo == 0.0 and math.isinf(hi)
    with pytest.raises(ValueError):
        ri.parse_family("nosuch(a=1)")


def test_grai_values():
    d = ri.parse_family("invllog(gamma=4,lambda=0.5)")
    assert ri.grai_alpha(d, -1.0, 0.3) == pytest.approx(4.0)
    w = ri.parse_family("invw2(beta=2,lambda=1)")
    assert ri.grai_alpha(w, 1.0, 1.0) == pytest.approx(
        2 * math.exp(-1) / (1 - math.exp(-1)), rel=1e-12
    )
    assert ri.grai_general(w.cdf, w.pdf, 0.0, 1.0) == pytest.approx(
        ri.grai_alpha(w, 0.0, 1.0), rel=1e-10
    )


def test_sampling_and_fit_pipeline():
    d = ri.parse_family("invllog(gamma=4,lambda=0.5)")
    values = d.sample(n=1000, seed=3)
    assert len(values) == 1000
    assert values == d.sample(n=1000, seed=3)
    s = ri.Sample(values)
    rep = ri.fit_pipeline(s, -1.0, ri.ShapeModel.constant)
    assert 3.6 <= rep["intercept"] <= 4.4
    assert 0.45 <= rep["scale_mle"] <= 0.55
    assert rep["identified"].startswith("invllog(")


def test_reconstruction_roundtrip():
    w = ri.parse_family("invw2(beta=2,lambda=1)")
    grid = [w.quantile(p / 100.0) for p in range(1, 100, 2)]
    assert ri.roundtrip_error(w, 1.0, grid) < 1e-6
    curve = ri.GraiCurve.symbolic(w, 2.0)
    rec = ri.ReconstructedCdf(curve, 2.0)
    assert rec(1.0) == pytest.approx(w.cdf(1.0), abs=1e-7)


def test_gof():
    counts = [26, 322, 371, 150, 68, 29, 15, 5, 3, 3, 0, 1, 2, 1, 0, 0, 0, 0, 0, 1]
    d = ri.parse_family("invllog(gamma=3.7990,lambda=0.4957)")
    rep = ri.chi_square_counts(counts, 1000.0, d, 0.21, 1)
    assert rep["dof"] == 7
    assert rep["statistic"] == pytest.approx(9.3209, abs=0.02)

    data = [0.067, 0.068, 0.076, 0.081, 0.084, 0.085, 0.085, 0.086, 0.089, 0.098,
            0.098, 0.114, 0.114, 0.115, 0.121, 0.125, 0.131, 0.149, 0.160, 0.485]
    mw = ri.parse_family("invmw(gamma=0.3441,lambda=549.9663,delta=31.6785)")
    ks = ri.ks_test(ri.Sample(data), mw)
    assert ks["statistic"] == pytest.approx(0.1496, abs=0.002)


def test_orders():
    x = ri.parse_family("invllog(gamma=3,lambda=0.8)")
    y = ri.parse_family("invllog(gamma=5,lambda=0.8)")
    grid = ri.joint_interior_grid(x, y)
    assert ri.rai_order_check(x, y, -1.0, grid)["direction"] == "X<=Y"
    w = ri.parse_family("invw2(beta=2,lambda=1.5)")
    dual_grid = [0.25 * (12.0 ** (i / 49.0)) for i in range(50)]
    assert ri.reciprocal_duality_check(w, 0.0, dual_grid) < 1e-10
