import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from splitsim.analysis import (
    UNBOUNDED,
    best_integer_n,
    expected_survivor_fraction,
    expected_teleport_coverage,
    ideal_teleport_increment,
    initial_rate,
    linear_zero_n,
    optimal_n_linear,
    predict,
)
from splitsim.dynamics import FailureParams, failure_rate
from splitsim.oracles import survivor_fraction_chains

A = math.pi * 0.01


def test_rate_ratio_examples():
    r1 = {k: initial_rate(k, 1, A, 0.005, 4e-6) for k in ("constant", "radius", "area")}
    assert initial_rate("constant", 4, A, 0.005) / r1["constant"] == pytest.approx(2.0, rel=1e-14)
    assert initial_rate("radius", 37, A, 0.005) / r1["radius"] == pytest.approx(1.0, rel=1e-14)
    assert initial_rate("area", 4, A, 0.005) / r1["area"] == pytest.approx(0.5, rel=1e-14)


def test_rate_carries_absolute_constant():
    # one agent of radius 0.1 at 0.005 per step sweeps 2 r v
    assert initial_rate("constant", 1, A, 0.005) == pytest.approx(2 * 0.1 * 0.005, rel=1e-14)


def test_optimum_examples():
    assert optimal_n_linear(0.005, 4e-6) == pytest.approx(417.0, rel=1e-12)
    g = 1e-3
    assert optimal_n_linear(2 * g, g) == pytest.approx(1.0, rel=1e-12)
    assert optimal_n_linear(0.005, 0.0) == UNBOUNDED


@given(st.floats(1e-4, 1e-2), st.floats(1e-7, 1e-4))
def test_optimum_beats_nearby_integers(V0, gamma):
    n_star = optimal_n_linear(V0, gamma)
    if n_star < 3:
        return
    best = initial_rate("linear", round(n_star), A, V0, gamma)
    for k in range(max(1, math.floor(n_star) - 2), math.ceil(n_star) + 3):
        assert best >= initial_rate("linear", k, A, V0, gamma) * (1 - 1e-12)


def test_integer_scan_lands_next_to_optimum():
    for V0, gamma in [(0.005, 4e-6), (0.003, 1e-5), (0.01, 7e-6)]:
        n_star = optimal_n_linear(V0, gamma)
        n_int = best_integer_n("linear", linear_zero_n(V0, gamma), A, V0, gamma)
        assert n_int in (math.floor(n_star), math.ceil(n_star))


def test_linear_rate_zero_once_stopped():
    assert initial_rate("linear", 2000, A, 0.005, 4e-6) == 0.0


def test_ideal_teleport_increment():
    assert ideal_teleport_increment(A, 1.0) == pytest.approx(3.14159, abs=1e-5)
    assert ideal_teleport_increment(0.0, 1.0) == 0.0
    assert ideal_teleport_increment(A, 2.0) == pytest.approx(ideal_teleport_increment(A, 1.0) / 4)


def test_expected_teleport_coverage_starts_ideal():
    c = expected_teleport_coverage([0, 1], A, 1.0)
    assert c[0] == 0.0 and c[1] == pytest.approx(100 * A)


def test_survivor_fraction():
    params = FailureParams(True, 0.1, 0.1)
    assert expected_survivor_fraction(1000, params, 0) == 1.0
    assert expected_survivor_fraction(1, params, 10**6) == 1.0
    analytic = expected_survivor_fraction(1000, params, 100)
    assert analytic == pytest.approx(0.005995, abs=2e-6)
    sim = survivor_fraction_chains(failure_rate(1000, params), 100, chains=100_000, seed=1)
    assert abs(sim - analytic) < 4 * math.sqrt(analytic * (1 - analytic) / 100_000)


def test_predict_table():
    rows = predict()
    assert len(rows) == 24
    assert all(r.rate >= 0 for r in rows)
