import math

import pytest

import d3g3lab as d3


def test_version():
    assert d3.__version__


def test_geometry():
    a = d3.TorusPoint(0.1, 0.1)
    b = d3.TorusPoint(0.9, 0.1)
    assert d3.toroidal_distance(a, b) == pytest.approx(0.2)
    assert d3.connection_probability(0.1) == pytest.approx(math.pi * 0.01)
    with pytest.raises(ValueError):
        d3.connection_probability(0.6)


def test_degree_sets_and_classification():
    s = d3.DegreeSet.parse("[2,4]")
    assert 3 in s
    assert 5 not in s
    assert d3.classify("nat", "nat").startswith("all/all")
    assert d3.predicted_order_monotonicity("{0,1}", "{3,4}") == "non-increasing"


def test_run_limit_case():
    out = d3.run(d=0.1, ss="nat", sc="nat", n0=5, seed=1, max_steps=3)
    orders = [s.order for s in out["snapshots"]]
    assert orders == [5, 10, 20, 40]
    assert out["stop_reason"] == "budget"


def test_run_summary_reproducible():
    kwargs = dict(d=0.15, ss="[0,4]", sc="[0,4]", n0=40, seed=9, max_steps=25)
    a = d3.run_summary(**kwargs)
    b = d3.run_summary(**kwargs)
    assert a["order"] == b["order"]
    assert a["vn"] == b["vn"]
    for n, s, c in zip(a["order"], a["conserved"], a["created"]):
        assert s + c <= 2 * n


def test_nervousness():
    assert d3.vertex_nervousness([1, 2, 3], [2, 3, 4]) == pytest.approx(0.5)
    assert d3.vertex_nervousness([], []) is None
    assert d3.edge_nervousness([(1, 2), (2, 3)], [(1, 2), (3, 4)]) == pytest.approx(2 / 3)


def test_mean_field():
    params = d3.SegmentParams(2, 5, 0.05)
    assert d3.relationship(params, 0) == 0.0
    profile = d3.analyze_relationship(params)
    assert profile["fixed_points"] == [0, 217, 703]
    assert profile["regime"] == "three_fp"
    assert profile["sustainable_interval"]["N_m"] == 217

    l, equilibrium = d3.isolated_limit(0.1)
    assert l == pytest.approx(15.3534, abs=1e-3)
    assert equilibrium == pytest.approx(2 * l)


def test_redistributed_chain():
    params = d3.SegmentParams(2, 5, 0.05)
    chain = d3.redistributed_run(598, params, steps=50, seed=3)
    assert chain[0] == 598
    assert all(n % 2 == 0 for n in chain[1:])
    assert chain == d3.redistributed_run(598, params, steps=50, seed=3)
