"""Simulation loop: random-walk mode and the teleport (no gradual motion) mode."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _kernels
from .coverage import CoverageGrid, coverage_percent, stamp_disks
from .dynamics import (
    CollisionParams,
    FailureParams,
    failure_mask,
    failure_rate,
    neighbor_overlap_sums,
    slowdown_factor,
)
from .geometry import radius_from_split
from .motion import (
    VelocityProfile,
    WalkParams,
    sample_step_duration,
    sample_turn_angle,
    velocity,
    wrap_angle,
)

MODES = ("walk", "teleport")
DEFAULT_A = math.pi * 0.1**2


class ConfigError(ValueError):
    """Invalid simulation or sweep configuration; the message names the field."""


@dataclass(frozen=True)
class SimConfig:
    p: float = 1.0
    A: float = DEFAULT_A
    n: int = 1
    m: int = 1000
    profile: VelocityProfile = field(default_factory=VelocityProfile)
    walk: WalkParams = field(default_factory=WalkParams)
    collisions: CollisionParams = field(default_factory=CollisionParams)
    failures: FailureParams = field(default_factory=FailureParams)
    mode: str = "walk"
    # steps in walk mode, rounds in teleport mode
    max_steps: int = 10_000
    record_every: int = 1
    seed: int = 0

    def __post_init__(self):
        if not self.p > 0:
            raise ConfigError(f"p must be > 0, got {self.p!r}")
        if not 0 < self.A < self.p**2:
            raise ConfigError(f"A must satisfy 0 < A < p^2 = {self.p**2!r}, got {self.A!r}")
        if int(self.n) != self.n or self.n < 1:
            raise ConfigError(f"n must be an integer >= 1, got {self.n!r}")
        if int(self.m) != self.m or self.m < 1:
            raise ConfigError(f"m must be an integer >= 1, got {self.m!r}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if int(self.max_steps) != self.max_steps or self.max_steps < 0:
            raise ConfigError(f"max_steps must be an integer >= 0, got {self.max_steps!r}")
        if int(self.record_every) != self.record_every or self.record_every < 1:
            raise ConfigError(f"record_every must be an integer >= 1, got {self.record_every!r}")

    @property
    def radius(self) -> float:
        return radius_from_split(self.A, self.n)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class AgentState:
    position: tuple[float, float]
    heading: float
    remaining_run: int
    alive: bool = True


@dataclass
class CoverageSeries:
    t: np.ndarray
    c: np.ndarray
    # first index with c == 100, or None when censored
    t_f: int | None = None

    @property
    def censored(self) -> bool:
        return self.t_f is None


@dataclass
class RunResult:
    config: SimConfig
    seed: int
    series: CoverageSeries
    alive: np.ndarray
    newly_covered_total: int
    covered_count: int
    wall_time: float = 0.0

    @property
    def t_f(self) -> int | None:
        return self.series.t_f

    @property
    def final_coverage(self) -> float:
        return float(self.series.c[-1])


class EngineState:
    """Mutable state of one walk-mode run; owns its generator and grid."""

    def __init__(self, config: SimConfig, seed: int):
        self.config = config
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self.grid = CoverageGrid(config.m, config.p)
        self.r = config.radius
        self.v = velocity(config.profile, config.n)
        self.k = failure_rate(config.n, config.failures) if config.failures.enabled else 0.0
        self.t = 0
        self.t_f: int | None = None
        self.newly_total = 0
        self.positions = np.empty((config.n, 2))
        self.headings = np.empty(config.n)
        self.remaining = np.empty(config.n, dtype=np.int64)
        self.alive = np.ones(config.n, dtype=bool)
        self.last_factors = np.ones(config.n)
        self._t: list[int] = []
        self._c: list[float] = []
        self._alive: list[int] = []

    @property
    def coverage(self) -> float:
        return coverage_percent(self.grid)

    @property
    def complete(self) -> bool:
        return self.grid.covered_count == self.grid.n_cells

    def agents(self) -> list[AgentState]:
        return [
            AgentState((float(x), float(y)), float(h), int(rem), bool(a))
            for (x, y), h, rem, a in zip(self.positions, self.headings, self.remaining, self.alive)
        ]

    def stamp_all(self) -> int:
        sel = self.alive
        newly = stamp_disks(self.grid, self.positions[sel, 0], self.positions[sel, 1], self.r)
        self.newly_total += newly
        return newly

    def record(self):
        if self._t and self._t[-1] == self.t:
            return
        self._t.append(self.t)
        self._c.append(self.coverage)
        self._alive.append(int(np.count_nonzero(self.alive)))

    def result(self, wall_time: float = 0.0) -> RunResult:
        series = CoverageSeries(np.array(self._t, dtype=np.int64), np.array(self._c), self.t_f)
        return RunResult(
            config=self.config,
            seed=self.seed,
            series=series,
            alive=np.array(self._alive, dtype=np.int64),
            newly_covered_total=self.newly_total,
            covered_count=self.grid.covered_count,
            wall_time=wall_time,
        )


def init_simulation(config: SimConfig, seed: int | None = None) -> EngineState:
    """Place agents uniformly at random (overlaps allowed), draw headings and runs, stamp once."""
    if seed is None:
        seed = config.seed
    state = EngineState(config, seed)
    rng = state.rng
    n, p = config.n, config.p
    state.positions[:] = rng.random((n, 2)) * p
    state.headings[:] = rng.uniform(-math.pi, math.pi, n)
    state.remaining[:] = sample_step_duration(config.walk, rng, n)
    state.stamp_all()
    if state.complete:
        state.t_f = 0
    state.record()
    return state


def step(state: EngineState) -> EngineState:
    """Advance one step: failures, collision factors, move and stamp, turn bookkeeping, record."""
    cfg = state.config
    state.t += 1
    alive = state.alive

    if state.k > 0:
        alive &= ~failure_mask(alive, state.k, state.rng)

    if cfg.collisions.enabled and cfg.n > 1:
        present = np.ones(cfg.n, dtype=bool) if cfg.collisions.failed_obstruct else alive
        sums = neighbor_overlap_sums(state.positions, present, state.r, cfg.p)
        factors = slowdown_factor(sums, state.r, cfg.collisions.residual)
    else:
        factors = np.ones(cfg.n)
    state.last_factors = factors

    xs = np.ascontiguousarray(state.positions[:, 0])
    ys = np.ascontiguousarray(state.positions[:, 1])
    newly = _kernels.move_and_stamp(
        state.grid.covered, state.grid.m, state.grid.h, cfg.p,
        xs, ys, state.headings, factors * state.v, alive, state.r,
    )
    state.positions[:, 0] = xs
    state.positions[:, 1] = ys
    state.grid.covered_count += newly
    state.newly_total += newly

    state.remaining[alive] -= 1
    turning = alive & (state.remaining <= 0)
    count = int(np.count_nonzero(turning))
    if count:
        turns = sample_turn_angle(cfg.walk, state.rng, count)
        state.headings[turning] = wrap_angle(state.headings[turning] + turns)
        state.remaining[turning] = sample_step_duration(cfg.walk, state.rng, count)

    if state.t_f is None and state.complete:
        state.t_f = state.t
    if state.t % cfg.record_every == 0 or state.t_f is not None or state.t >= cfg.max_steps:
        state.record()
    return state


def run(config: SimConfig, seed: int | None = None) -> RunResult:
    """Step until full coverage or ``max_steps``; a run that never completes has ``t_f = None``."""
    if config.mode == "teleport":
        return run_teleport(config, seed)
    start = time.perf_counter()
    state = init_simulation(config, seed)
    while state.t_f is None and state.t < config.max_steps:
        step(state)
    state.record()
    return state.result(time.perf_counter() - start)


def run_teleport(config: SimConfig, seed: int | None = None) -> RunResult:
    """Repositioning rounds: every agent jumps to a fresh uniform position and stamps once.

    Round 0 is the empty grid.  Collisions and failures do not apply in this mode.
    """
    if seed is None:
        seed = config.seed
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    grid = CoverageGrid(config.m, config.p)
    r = config.radius
    n = config.n
    ts, cs = [0], [0.0]
    t_f = None
    newly_total = 0
    for rnd in range(1, config.max_steps + 1):
        pts = rng.random((n, 2)) * config.p
        newly_total += stamp_disks(grid, pts[:, 0], pts[:, 1], r)
        done = grid.covered_count == grid.n_cells
        if done:
            t_f = rnd
        if rnd % config.record_every == 0 or done or rnd == config.max_steps:
            ts.append(rnd)
            cs.append(coverage_percent(grid))
        if done:
            break
    series = CoverageSeries(np.array(ts, dtype=np.int64), np.array(cs), t_f)
    return RunResult(
        config=config,
        seed=seed,
        series=series,
        alive=np.full(len(ts), n, dtype=np.int64),
        newly_covered_total=newly_total,
        covered_count=grid.covered_count,
        wall_time=time.perf_counter() - start,
    )
