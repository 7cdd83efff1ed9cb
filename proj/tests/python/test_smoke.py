import cmath
import math

import pytest

import _pbgreen as pbg


def test_complex_distance():
    assert pbg.complex_distance([3, 4, 0], [0, 0, 0]) == pytest.approx(5.0)
    rt = pbg.complex_distance([0, 0, 2], [0, 0, 1])
    assert rt == pytest.approx(2 - 1j)


def test_green_worked_value():
    g = pbg.holomorphic_green([0, 0, 2], 2.0, [0, 0, 0.5], 1.0)
    expected = (4 + 1j) / (34 * math.pi**2)
    assert abs(g - expected) < 1e-15


def test_domain_errors():
    with pytest.raises(pbg.DomainError):
        pbg.cauchy_kernel(1 + 1j)
    with pytest.raises(pbg.DomainError):
        pbg.directivity(pbg.SpacetimeDirection([1, 0, 0], 1.0))


def test_directivity_and_gap():
    y = pbg.SpacetimeDirection([0, 0, 1], 3.0)
    assert pbg.directivity(y) == pytest.approx(0.5)
    assert pbg.convexity_gap(y, y) == pytest.approx(0.5)


def test_coupling_peak():
    ye, yr, t = pbg.optimal_alignment([0, 0, 0], [0, 0, 100], 0.5, 0.5, 1.0, 1.0)
    e = pbg.EmitterDish(pbg.RealSpacetimePoint([0, 0, 0], 0.0), ye)
    r = pbg.ReceiverDish(pbg.RealSpacetimePoint([0, 0, 100], t), yr)
    measured = abs(pbg.coupling(e, r))
    predicted = pbg.peak_coupling(100.0, 1.0, 2.0)
    assert measured == pytest.approx(predicted, rel=5 * 1.0 / 100.0)


def test_source_flux():
    value, disagreement, converged = pbg.source_flux(
        pbg.SpacetimeDirection([0, 0, 0.5], 1.0), 5.0, 24
    )
    assert converged
    assert abs(value - 1.0) < 1e-6


def test_scenario_sampling():
    cfg = """{
      "kind": "green",
      "emitter": {"center": {"x": [0,0,0], "t": 0.0},
                   "extension": {"y": [0,0,0.5], "s": 1.0}},
      "grid": {"origin": [0,0,2,2], "spacing": [1,1,1,1], "counts": [1,1,1,1]}
    }"""
    values, mask = pbg.sample_scenario(cfg)
    assert mask == [0]
    expected = (4 + 1j) / (34 * math.pi**2)
    assert abs(values[0] - expected) < 1e-15
