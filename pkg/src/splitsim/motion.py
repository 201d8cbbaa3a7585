"""Random-walk samplers and velocity profiles.

Straight-run durations follow a discrete power law on a bounded integer
support; turning angles follow a wrapped Cauchy law.  Both samplers take an
explicit :class:`numpy.random.Generator` and draw in a fixed order so runs are
reproducible from their seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .engine import AgentState

PROFILE_KINDS = ("constant", "linear", "radius", "area")

# lookup-table sampler; keeps the cumulative table a few MB at most
MAX_DELTA_SUPPORT = 10_000_000


@dataclass(frozen=True)
class WalkParams:
    alpha: float = 2.0
    rho: float = 0.0
    mu: float = 0.0
    delta_min: int = 1
    delta_max: int = 10_000

    def __post_init__(self):
        if not 0 < self.alpha <= 2:
            raise ValueError(f"walk alpha must be in (0, 2], got {self.alpha!r}")
        if not 0 <= self.rho < 1:
            raise ValueError(f"rho must be in [0, 1), got {self.rho!r}")
        if not -math.pi <= self.mu < math.pi:
            raise ValueError(f"mu must be in [-pi, pi), got {self.mu!r}")
        if int(self.delta_min) != self.delta_min or self.delta_min < 1:
            raise ValueError(f"delta_min must be an integer >= 1, got {self.delta_min!r}")
        if int(self.delta_max) != self.delta_max or self.delta_max < self.delta_min:
            raise ValueError(f"delta_max must be an integer >= delta_min, got {self.delta_max!r}")
        if self.delta_max - self.delta_min + 1 > MAX_DELTA_SUPPORT:
            raise ValueError(f"delta support wider than {MAX_DELTA_SUPPORT} steps")


@dataclass(frozen=True)
class VelocityProfile:
    kind: str = "constant"
    V0: float = 0.005
    gamma: float = 4e-6

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ValueError(f"profile kind must be one of {PROFILE_KINDS}, got {self.kind!r}")
        if not self.V0 >= 0:
            raise ValueError(f"V0 must be >= 0, got {self.V0!r}")
        if not self.gamma >= 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma!r}")


@lru_cache(maxsize=32)
def _duration_cdf(alpha: float, delta_min: int, delta_max: int) -> np.ndarray:
    k = np.arange(delta_min, delta_max + 1, dtype=float)
    w = k ** -(alpha + 1.0)
    cdf = np.cumsum(w)
    cdf /= cdf[-1]
    cdf.setflags(write=False)
    return cdf


def duration_pmf(params: WalkParams) -> np.ndarray:
    """Probability of each duration ``delta_min..delta_max`` (index 0 is ``delta_min``)."""
    cdf = _duration_cdf(params.alpha, params.delta_min, params.delta_max)
    return np.diff(cdf, prepend=0.0)


def sample_step_duration(params: WalkParams, rng: np.random.Generator, size=None):
    """Draw straight-run durations with ``P(delta) ~ delta**-(alpha+1)``.

    Inverse transform against the cumulative table of the normalized discrete
    law, so the result is always an integer in ``[delta_min, delta_max]``.
    """
    cdf = _duration_cdf(params.alpha, params.delta_min, params.delta_max)
    u = rng.random(size)
    idx = np.searchsorted(cdf, u, side="right")
    idx = np.minimum(idx, len(cdf) - 1)
    out = idx + params.delta_min
    if size is None:
        return int(out)
    return out.astype(np.int64)


def wrap_angle(theta):
    out = np.mod(np.asarray(theta, dtype=float) + math.pi, 2.0 * math.pi) - math.pi
    return np.where(out >= math.pi, -math.pi, out)


def turn_angle_from_uniform(u, mu: float, rho: float):
    """Wrapped Cauchy inverse CDF evaluated at ``u`` in (0, 1)."""
    u = np.asarray(u, dtype=float)
    theta = mu + 2.0 * np.arctan((1.0 - rho) / (1.0 + rho) * np.tan(math.pi * (u - 0.5)))
    return wrap_angle(theta)


def sample_turn_angle(params: WalkParams, rng: np.random.Generator, size=None):
    u = rng.random(size)
    theta = turn_angle_from_uniform(u, params.mu, params.rho)
    return float(theta) if size is None else theta


def velocity(profile: VelocityProfile, n: int) -> float:
    """Per-agent speed for a group of ``n``."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    V0 = profile.V0
    if profile.kind == "constant":
        return V0
    if profile.kind == "linear":
        return max(V0 - profile.gamma * (n - 1), 0.0)
    if profile.kind == "radius":
        return V0 / math.sqrt(n)
    return V0 / n


def advance_walker(state: AgentState, params: WalkParams, rng: np.random.Generator) -> AgentState:
    """Straight-run bookkeeping for one agent after it has moved this step.

    The run counter is decremented; once it reaches zero the agent turns by a
    wrapped Cauchy angle and starts a fresh run, so every run lasts exactly the
    sampled number of steps.
    """
    remaining = state.remaining_run - 1
    if remaining > 0:
        return replace(state, remaining_run=remaining)
    heading = float(wrap_angle(state.heading + sample_turn_angle(params, rng)))
    return replace(state, heading=heading, remaining_run=sample_step_duration(params, rng))
