"""Brute-force reference computations.

Each function here deliberately avoids the fast paths it is used to check:
no bounding boxes, no lookup tables, no closed forms.
"""

from __future__ import annotations

import math

import numpy as np


def overlap_monte_carlo(d: float, r: float, samples: int = 10_000_000, seed: int = 0, chunk: int = 1_000_000):
    """Lens area of two radius-``r`` disks ``d`` apart by uniform sampling of a bounding box.

    Returns ``(estimate, standard_error)``.
    """
    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    while done < samples:
        k = min(chunk, samples - done)
        x = rng.uniform(-r, r, k)
        y = rng.uniform(-r, r, k)
        in_a = x * x + y * y <= r * r
        in_b = (x - d) ** 2 + y * y <= r * r
        hits += int(np.count_nonzero(in_a & in_b))
        done += k
    box = 4.0 * r * r
    frac = hits / samples
    return frac * box, box * math.sqrt(frac * (1.0 - frac) / samples)


def brute_force_cells(center, r: float, m: int, p: float) -> np.ndarray:
    """Flat indices of every cell center within torus distance ``r``, by scanning all m*m cells."""
    c = (np.arange(m) + 0.5) * (p / m)
    ax = np.abs(c - center[0])
    ay = np.abs(c - center[1])
    ax = np.minimum(ax, p - ax)
    ay = np.minimum(ay, p - ay)
    inside = ax[:, None] ** 2 + ay[None, :] ** 2 <= r * r
    return np.flatnonzero(inside.ravel())


def power_law_mass(alpha: float, delta_min: int, delta_max: int, k: int) -> float:
    """``P(delta = k)`` for ``P ~ delta**-(alpha+1)`` normalized by direct summation."""
    total = math.fsum(j ** -(alpha + 1.0) for j in range(delta_min, delta_max + 1))
    return k ** -(alpha + 1.0) / total


def ccdf_slope(samples: np.ndarray, k_lo: int = 5, k_hi: int = 100) -> float:
    """Least-squares slope of log P(X >= k) against log k over ``k_lo..k_hi``."""
    samples = np.sort(np.asarray(samples))
    ks = np.unique(np.round(np.geomspace(k_lo, k_hi, 20)).astype(int))
    tail = 1.0 - np.searchsorted(samples, ks, side="left") / samples.size
    slope, _ = np.polyfit(np.log(ks), np.log(tail), 1)
    return float(slope)


def survivor_fraction_chains(k: float, t: int, chains: int = 100_000, seed: int = 0) -> float:
    """Fraction of independent Bernoulli(k)-per-step chains that survive ``t`` steps."""
    rng = np.random.default_rng(seed)
    alive = np.ones(chains, dtype=bool)
    for _ in range(t):
        alive &= rng.random(chains) >= k
    return float(alive.mean())


def report() -> list[tuple[str, str]]:
    """The reference values quoted in the test suite, recomputed from scratch."""
    from .dynamics import FailureParams, failure_rate

    est, se = overlap_monte_carlo(0.1, 0.1)
    cells = brute_force_cells((0.5, 0.5), 0.1, 1000, 1.0).size
    mass = power_law_mass(2.0, 1, 10_000, 1)
    k = failure_rate(1000, FailureParams(True, 0.1, 0.1))
    chains = survivor_fraction_chains(k, 100)
    return [
        ("lens area d=0.1 r=0.1 (MC, 1e7)", f"{est:.6f} +/- {se:.6f}"),
        ("cells within r=0.1 of (0.5,0.5), m=1000", str(cells)),
        ("P(delta=1), alpha=2, support 1..1e4", f"{mass:.6f}"),
        ("k(1000), beta=0.1, alpha=0.1", f"{k:.6f}"),
        ("survivors after 100 steps (1e5 chains)", f"{chains:.5f}"),
    ]
