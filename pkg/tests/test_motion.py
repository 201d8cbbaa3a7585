import math

import numpy as np
import pytest
from scipy import stats

from splitsim.engine import AgentState
from splitsim.motion import (
    VelocityProfile,
    WalkParams,
    advance_walker,
    duration_pmf,
    sample_step_duration,
    sample_turn_angle,
    turn_angle_from_uniform,
    velocity,
)
from splitsim.oracles import ccdf_slope, power_law_mass


def test_degenerate_support():
    rng = np.random.default_rng(0)
    params = WalkParams(delta_min=5, delta_max=5)
    assert set(sample_step_duration(params, rng, 1000)) == {5}
    assert sample_step_duration(params, rng) == 5


def test_durations_in_support_and_integer():
    rng = np.random.default_rng(1)
    params = WalkParams(alpha=0.7, delta_min=3, delta_max=40)
    s = sample_step_duration(params, rng, 50_000)
    assert s.dtype == np.int64
    assert s.min() >= 3 and s.max() <= 40


def test_pmf_matches_direct_summation():
    params = WalkParams()
    pmf = duration_pmf(params)
    assert pmf[0] == pytest.approx(power_law_mass(2.0, 1, 10_000, 1), rel=1e-12)
    assert pmf[0] == pytest.approx(0.831907, abs=1e-6)
    assert pmf[9] == pytest.approx(power_law_mass(2.0, 1, 10_000, 10), rel=1e-10)


def test_mass_at_one_empirical():
    rng = np.random.default_rng(2)
    s = sample_step_duration(WalkParams(), rng, 200_000)
    p = power_law_mass(2.0, 1, 10_000, 1)
    se = math.sqrt(p * (1 - p) / s.size)
    assert abs(np.mean(s == 1) - p) < 4 * se


def test_ccdf_slope():
    rng = np.random.default_rng(0)
    s = sample_step_duration(WalkParams(), rng, 1_000_000)
    slope = ccdf_slope(s)
    assert slope == pytest.approx(-2.0, abs=0.1)
    # analytic CCDF of the truncated law over the same fit range
    pmf = duration_pmf(WalkParams())
    ccdf = pmf[::-1].cumsum()[::-1]
    ks = np.unique(np.round(np.geomspace(5, 100, 20)).astype(int))
    analytic = np.polyfit(np.log(ks), np.log(ccdf[ks - 1]), 1)[0]
    assert slope == pytest.approx(analytic, abs=0.05)


def test_uniform_turns_when_rho_zero():
    rng = np.random.default_rng(4)
    theta = sample_turn_angle(WalkParams(rho=0.0), rng, 100_000)
    assert theta.min() >= -math.pi and theta.max() < math.pi
    res = stats.kstest(theta, stats.uniform(loc=-math.pi, scale=2 * math.pi).cdf)
    assert res.pvalue > 0.01


def test_median_draw_returns_mu():
    assert float(turn_angle_from_uniform(0.5, 0.7, 0.3)) == pytest.approx(0.7)


def test_concentrated_turns():
    rng = np.random.default_rng(5)
    theta = sample_turn_angle(WalkParams(rho=0.99), rng, 100_000)
    resultant = np.abs(np.mean(np.exp(1j * theta)))
    assert 1 - resultant < 0.05
    # mean resultant length of the wrapped Cauchy equals rho
    assert resultant == pytest.approx(0.99, abs=2e-3)


@pytest.mark.parametrize("rho, mu", [(0.6, 1.0), (0.2, -2.0), (0.9, 0.0)])
def test_turns_follow_wrapped_cauchy(rho, mu):
    rng = np.random.default_rng(6)
    theta = sample_turn_angle(WalkParams(rho=rho, mu=mu), rng, 100_000)
    # scipy's wrapcauchy lives on [0, 2pi) with mean 0
    shifted = np.mod(theta - mu, 2 * math.pi)
    res = stats.kstest(shifted, stats.wrapcauchy(rho).cdf)
    assert res.pvalue > 0.01


@pytest.mark.parametrize(
    "kind, n, expected",
    [("constant", 1000, 0.005), ("linear", 2000, 0.0), ("radius", 4, 0.0025), ("area", 10, 0.0005)],
)
def test_velocity_examples(kind, n, expected):
    assert velocity(VelocityProfile(kind, 0.005, 4e-6), n) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("kind", ["constant", "linear", "radius", "area"])
def test_velocity_nonincreasing_and_exact_at_one(kind):
    prof = VelocityProfile(kind, 0.005, 4e-6)
    assert velocity(prof, 1) == 0.005
    v = [velocity(prof, n) for n in range(1, 3000)]
    assert all(a >= b for a, b in zip(v, v[1:]))


def test_linear_profile_zero_past_threshold():
    prof = VelocityProfile("linear", 0.005, 4e-6)
    assert all(velocity(prof, n) == 0.0 for n in range(1251, 5000))


def test_velocity_rejects_zero():
    with pytest.raises(ValueError):
        velocity(VelocityProfile(), 0)


@pytest.mark.parametrize("bad", [dict(alpha=2.5), dict(alpha=0.0), dict(rho=1.0), dict(delta_min=0), dict(delta_min=5, delta_max=4)])
def test_walk_params_validation(bad):
    with pytest.raises(ValueError):
        WalkParams(**bad)


def test_advance_mid_run():
    rng = np.random.default_rng(0)
    s = advance_walker(AgentState((0.5, 0.5), 0.3, 3), WalkParams(), rng)
    assert s.remaining_run == 2 and s.heading == 0.3


def test_advance_turns_at_end_of_run():
    rng = np.random.default_rng(0)
    params = WalkParams(rho=0.9999)
    for rem in (0, 1):
        s = advance_walker(AgentState((0.5, 0.5), 0.3, rem), params, rng)
        assert abs(s.heading - 0.3) < 0.01
        assert params.delta_min <= s.remaining_run <= params.delta_max


def test_samplers_deterministic():
    a = sample_step_duration(WalkParams(), np.random.default_rng(9), 100)
    b = sample_step_duration(WalkParams(), np.random.default_rng(9), 100)
    np.testing.assert_array_equal(a, b)
    a = sample_turn_angle(WalkParams(rho=0.3), np.random.default_rng(9), 100)
    b = sample_turn_angle(WalkParams(rho=0.3), np.random.default_rng(9), 100)
    np.testing.assert_array_equal(a, b)
