"""Closed-form initial coverage rates and the optima they imply.

Rates ignore overlaps and carry the explicit constant ``2 * sqrt(A / pi)``,
so ``initial_rate`` is an area per step directly comparable to early
simulated coverage slopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import FailureParams, failure_rate
from .motion import PROFILE_KINDS, VelocityProfile, velocity

# returned by optimal_n_linear when speed never drops with n
UNBOUNDED = math.inf


@dataclass(frozen=True)
class RatePrediction:
    kind: str
    n: int
    rate: float


def initial_rate(kind: str, n: int, A: float, V0: float, gamma: float = 0.0) -> float:
    """Initial collective coverage rate ``2 * sqrt(A n / pi) * v(n)`` (area per step)."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if not A > 0:
        raise ValueError(f"A must be > 0, got {A!r}")
    v = velocity(VelocityProfile(kind, V0, gamma), n)
    return 2.0 * math.sqrt(A * n / math.pi) * v


def predict(kinds=PROFILE_KINDS, n_values=(1, 2, 10, 100, 500, 1000), A=math.pi * 0.01,
            V0=0.005, gamma=4e-6) -> list[RatePrediction]:
    return [RatePrediction(k, n, initial_rate(k, n, A, V0, gamma)) for k in kinds for n in n_values]


def optimal_n_linear(V0: float, gamma: float) -> float:
    """Continuous maximizer ``(V0 + gamma) / (3 gamma)`` of the linear-profile rate.

    Writing the rate as ``a x - b x**3`` with ``x = sqrt(n)``, ``a = V0 + gamma``
    and ``b = gamma`` puts the peak at ``n = a / (3 b)``.
    """
    if gamma < 0:
        raise ValueError(f"gamma must be >= 0, got {gamma!r}")
    if gamma == 0:
        return UNBOUNDED
    return (V0 + gamma) / (3.0 * gamma)


def linear_zero_n(V0: float, gamma: float) -> int:
    """Smallest integer n at which the linear profile has stopped (speed 0)."""
    return math.ceil(1.0 + V0 / gamma)


def best_integer_n(kind: str, n_max: int, A: float, V0: float, gamma: float = 0.0) -> int:
    """Integer argmax of ``initial_rate`` over ``1..n_max`` by direct scan (first maximum wins)."""
    rates = np.array([initial_rate(kind, n, A, V0, gamma) for n in range(1, n_max + 1)])
    return int(np.argmax(rates)) + 1


def ideal_teleport_increment(A: float, p: float) -> float:
    """Coverage gain per repositioning round if nothing were ever revisited, in percent."""
    if not A < p * p:
        raise ValueError(f"A must be < p^2, got A={A!r}, p={p!r}")
    return 100.0 * A / (p * p)


def expected_teleport_coverage(rounds, A: float, p: float, n: int = 1) -> np.ndarray:
    """Expected coverage after each round when ``n`` disks land independently and uniformly.

    Continuum limit: a point stays uncovered through one placement with
    probability ``1 - A / (n p^2)``.
    """
    a = A / (n * p * p)
    return 100.0 * (1.0 - (1.0 - a) ** (n * np.asarray(rounds, dtype=float)))


def expected_survivor_fraction(n: int, params: FailureParams, t) -> float:
    """Probability an agent is still running after ``t`` steps."""
    k = failure_rate(n, params)
    return (1.0 - k) ** t
