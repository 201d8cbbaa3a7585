"""Collision slowdown and group-size-dependent failures."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Sequence

import numpy as np

from . import _kernels
from .geometry import disk_overlap_area, torus_distance

if TYPE_CHECKING:
    from .engine import AgentState


@dataclass(frozen=True)
class CollisionParams:
    enabled: bool = False
    residual: float = 0.05
    # stopped (failed) agents still block others
    failed_obstruct: bool = True

    def __post_init__(self):
        if not 0 < self.residual <= 1:
            raise ValueError(f"collision residual must be in (0, 1], got {self.residual!r}")


@dataclass(frozen=True)
class FailureParams:
    enabled: bool = False
    beta: float = 0.1
    alpha: float = 0.01

    def __post_init__(self):
        if not 0 <= self.beta <= 1:
            raise ValueError(f"failure beta must be in [0, 1], got {self.beta!r}")
        if not self.alpha > 0:
            raise ValueError(f"failure alpha must be > 0, got {self.alpha!r}")


def slowdown_factor(overlap_sum, r: float, residual: float):
    """``max(residual, 1 - overlap / (pi r^2))``, elementwise."""
    return np.maximum(residual, 1.0 - np.asarray(overlap_sum) / (math.pi * r * r))


def collision_velocity_factor(
    agent: AgentState,
    neighbors: Sequence[AgentState],
    r: float,
    params: CollisionParams,
    p: float = 1.0,
) -> float:
    """Fraction of its profile speed an agent keeps given the disks it overlaps.

    Overlaps with all neighbors are summed and normalized by the footprint
    area; the result never drops below ``params.residual``.  Heading is not
    touched.
    """
    total = 0.0
    for other in neighbors:
        d = float(torus_distance(agent.position, other.position, p))
        total += disk_overlap_area(d, r)
    return float(slowdown_factor(total, r, params.residual))


def neighbor_overlap_sums(positions: np.ndarray, present: np.ndarray, r: float, p: float) -> np.ndarray:
    """Summed lens area each agent shares with every other ``present`` agent."""
    xs = np.ascontiguousarray(positions[:, 0], dtype=float)
    ys = np.ascontiguousarray(positions[:, 1], dtype=float)
    return _kernels.overlap_sums(xs, ys, np.ascontiguousarray(present, dtype=np.bool_), float(r), float(p))


def failure_rate(n: int, params: FailureParams) -> float:
    """Per-step failure probability ``beta * (1 - n**-alpha)``; exactly zero for ``n == 1``."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if n == 1:
        return 0.0
    return params.beta * (1.0 - n ** -params.alpha)


def failure_mask(alive: np.ndarray, k: float, rng: np.random.Generator) -> np.ndarray:
    """One uniform per alive agent, in index order; returns the agents failing now."""
    failing = np.zeros(alive.shape, dtype=bool)
    idx = np.flatnonzero(alive)
    failing[idx] = rng.random(idx.size) < k
    return failing


def apply_failures(agents: Sequence[AgentState], k: float, rng: np.random.Generator) -> list[AgentState]:
    if not 0 <= k < 1:
        raise ValueError(f"k must be in [0, 1), got {k!r}")
    alive = np.array([a.alive for a in agents], dtype=bool)
    failing = failure_mask(alive, k, rng)
    return [replace(a, alive=False) if f else a for a, f in zip(agents, failing)]
