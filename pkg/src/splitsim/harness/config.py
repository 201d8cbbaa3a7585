"""Sweep configuration files.

Flat ``key = value`` text, one setting per line, ``#`` starts a comment.  The
first non-blank line may be the version header ``splitsim-config v1``.  List
values are comma separated.  Every key is optional; omitted keys take the
defaults below (the experiment chosen can change a few of them, see
``EXPERIMENT_DEFAULTS``).

=========================  ==========================================  ===================
key                        meaning                                     default
=========================  ==========================================  ===================
experiment                 teleport, initial_coverage, full_coverage,  full_coverage
                           collisions or failures
profiles                   subset of constant, linear, radius, area    all four
n_values                   group sizes, each >= 1                      1,2,10,100,500,1000
master_seed                base seed                                   0
seeds.count                seeds are master_seed + 0..count-1          30
seeds                      explicit seed list (overrides the above)
max_steps                  step (or round) budget per run              10000
record_every               sampling stride for c(t)                    1
env.p                      side of the periodic square                 1
env.A                      total footprint area                        pi * 0.01
env.m                      grid cells per side                         1000
profile.V0                 single-agent speed per step                 0.005
profile.gamma              linear-profile slope                        4e-6
walk.alpha                 run-length exponent, (0, 2]                 2
walk.rho / walk.mu         wrapped Cauchy concentration / mean         0 / 0
walk.delta_min/.delta_max  run-length support in steps                 1 / 10000
collisions.enabled         overlap slowdown on/off                     false
collisions.residual        speed fraction kept at full overlap         0.05
collisions.failed_obstruct failed agents still block others            true
failures.enabled           group-size failures on/off                  false
failures.beta              asymptotic per-step failure probability     0.1
failures.alpha             failure exponent                            0.01
=========================  ==========================================  ===================
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from pathlib import Path

from ..dynamics import CollisionParams, FailureParams
from ..engine import ConfigError, SimConfig
from ..motion import PROFILE_KINDS, VelocityProfile, WalkParams

HEADER = "splitsim-config v1"
EXPERIMENTS = ("teleport", "initial_coverage", "full_coverage", "collisions", "failures")
PAPER_N_VALUES = (1, 2, 10, 100, 500, 1000)

EXPERIMENT_DEFAULTS = {
    "teleport": {"env.m": 2000, "max_steps": 100},
    "initial_coverage": {"max_steps": 100},
    "full_coverage": {},
    "collisions": {"collisions.enabled": True},
    "failures": {"failures.enabled": True, "profiles": ("constant",)},
}


def _int(text):
    value = float(text) if any(c in text for c in ".eE") else int(text)
    if int(value) != value:
        raise ValueError
    return int(value)


def _float(text):
    return float(text)


def _bool(text):
    low = text.lower()
    if low in ("true", "yes", "on", "1"):
        return True
    if low in ("false", "no", "off", "0"):
        return False
    raise ValueError


def _list(item):
    def parse(text):
        return tuple(item(t.strip()) for t in text.split(",") if t.strip())
    return parse


def _choice(options):
    def parse(text):
        if text not in options:
            raise ValueError
        return text
    return parse


# key -> (parser, range check, human-readable allowed range)
_SCHEMA = {
    "experiment": (_choice(EXPERIMENTS), None, "one of " + ", ".join(EXPERIMENTS)),
    "profiles": (_list(_choice(PROFILE_KINDS)), lambda v: len(v) > 0, "non-empty subset of " + ", ".join(PROFILE_KINDS)),
    "n_values": (_list(_int), None, "non-empty list of integers >= 1"),
    "master_seed": (_int, lambda v: 0 <= v < 2**64, "integer in [0, 2^64)"),
    "seeds.count": (_int, lambda v: v >= 1, "integer >= 1"),
    "seeds": (_list(_int), None, "non-empty list of distinct integers in [0, 2^64)"),
    "max_steps": (_int, lambda v: v >= 0, "integer >= 0"),
    "record_every": (_int, lambda v: v >= 1, "integer >= 1"),
    "env.p": (_float, lambda v: v > 0, "> 0"),
    "env.A": (_float, lambda v: v > 0, "> 0 and < env.p^2"),
    "env.m": (_int, lambda v: v >= 1, "integer >= 1"),
    "profile.V0": (_float, lambda v: v >= 0, ">= 0"),
    "profile.gamma": (_float, lambda v: v >= 0, ">= 0"),
    "walk.alpha": (_float, lambda v: 0 < v <= 2, "(0, 2]"),
    "walk.rho": (_float, lambda v: 0 <= v < 1, "[0, 1)"),
    "walk.mu": (_float, lambda v: -math.pi <= v < math.pi, "[-pi, pi)"),
    "walk.delta_min": (_int, lambda v: v >= 1, "integer >= 1"),
    "walk.delta_max": (_int, lambda v: v >= 1, "integer >= walk.delta_min"),
    "collisions.enabled": (_bool, None, "true or false"),
    "collisions.residual": (_float, lambda v: 0 < v <= 1, "(0, 1]"),
    "collisions.failed_obstruct": (_bool, None, "true or false"),
    "failures.enabled": (_bool, None, "true or false"),
    "failures.beta": (_float, lambda v: 0 <= v <= 1, "[0, 1]"),
    "failures.alpha": (_float, lambda v: v > 0, "> 0"),
}


@dataclass(frozen=True)
class SweepSpec:
    base: SimConfig = field(default_factory=SimConfig)
    n_values: tuple[int, ...] = PAPER_N_VALUES
    profiles: tuple[str, ...] = PROFILE_KINDS
    seeds: tuple[int, ...] = tuple(range(30))
    experiment: str = "full_coverage"
    master_seed: int = 0
    # True when the file listed seeds explicitly, so a new master seed leaves them alone
    explicit_seeds: bool = False

    def config_for(self, profile: str, n: int) -> SimConfig:
        return replace(self.base, n=n, profile=replace(self.base.profile, kind=profile))

    def with_master_seed(self, master_seed: int) -> SweepSpec:
        if self.explicit_seeds:
            return replace(self, master_seed=master_seed)
        seeds = tuple(master_seed + i for i in range(len(self.seeds)))
        return replace(self, master_seed=master_seed, seeds=seeds)


def _parse_value(key, text):
    if key not in _SCHEMA:
        raise ConfigError(f"unknown key {key!r}; allowed keys: {', '.join(sorted(_SCHEMA))}")
    parse, check, allowed = _SCHEMA[key]
    try:
        value = parse(text)
    except ValueError:
        raise ConfigError(f"{key} = {text!r} is invalid; allowed: {allowed}") from None
    if check is not None and not check(value):
        raise ConfigError(f"{key} = {text!r} is out of range; allowed: {allowed}")
    if key == "n_values":
        if not value:
            raise ConfigError("n_values must be a non-empty list of integers >= 1")
        for i, n in enumerate(value):
            if n < 1:
                raise ConfigError(f"n_values[{i}] must be >= 1, got {n}")
    if key == "seeds":
        if not value:
            raise ConfigError(f"seeds must be {allowed}")
        for i, s in enumerate(value):
            if not 0 <= s < 2**64:
                raise ConfigError(f"seeds[{i}] = {s} is out of range; allowed: integer in [0, 2^64)")
        if len(set(value)) != len(value):
            raise ConfigError("seeds must be distinct")
    return value


def parse_text(text: str) -> SweepSpec:
    values: dict = {}
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("splitsim-config"):
            if seen_content:
                raise ConfigError(f"line {lineno}: version header must come first")
            if line != HEADER:
                raise ConfigError(f"line {lineno}: unsupported header {line!r}; expected {HEADER!r}")
            seen_content = True
            continue
        seen_content = True
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, val = (s.strip() for s in line.partition("="))
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = _parse_value(key, val)
    return build_spec(values)


def build_spec(values: dict) -> SweepSpec:
    """Assemble a validated spec from already-parsed ``key -> value`` settings."""
    experiment = values.get("experiment", "full_coverage")
    merged = dict(EXPERIMENT_DEFAULTS[experiment])
    merged.update(values)
    get = merged.get

    master_seed = get("master_seed", 0)
    if "seeds" in merged:
        seeds, explicit = tuple(merged["seeds"]), True
    else:
        seeds, explicit = tuple(master_seed + i for i in range(get("seeds.count", 30))), False

    try:
        walk = WalkParams(
            alpha=get("walk.alpha", 2.0),
            rho=get("walk.rho", 0.0),
            mu=get("walk.mu", 0.0),
            delta_min=get("walk.delta_min", 1),
            delta_max=get("walk.delta_max", 10_000),
        )
    except ValueError as exc:
        raise ConfigError(f"walk: {exc}") from None
    profile = VelocityProfile("constant", get("profile.V0", 0.005), get("profile.gamma", 4e-6))
    collisions = CollisionParams(
        enabled=get("collisions.enabled", False),
        residual=get("collisions.residual", 0.05),
        failed_obstruct=get("collisions.failed_obstruct", True),
    )
    failures = FailureParams(
        enabled=get("failures.enabled", False),
        beta=get("failures.beta", 0.1),
        alpha=get("failures.alpha", 0.01),
    )
    try:
        base = SimConfig(
            p=get("env.p", 1.0),
            A=get("env.A", math.pi * 0.01),
            m=get("env.m", 1000),
            profile=profile,
            walk=walk,
            collisions=collisions,
            failures=failures,
            mode="teleport" if experiment == "teleport" else "walk",
            max_steps=get("max_steps", 10_000),
            record_every=get("record_every", 1),
            seed=seeds[0],
        )
    except ConfigError as exc:
        raise ConfigError(f"env: {exc}") from None
    return SweepSpec(
        base=base,
        n_values=tuple(get("n_values", PAPER_N_VALUES)),
        profiles=tuple(get("profiles", PROFILE_KINDS)),
        seeds=seeds,
        experiment=experiment,
        master_seed=master_seed,
        explicit_seeds=explicit,
    )


def parse_config(path) -> SweepSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_text(text)
