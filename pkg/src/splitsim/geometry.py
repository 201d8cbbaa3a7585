"""Torus arithmetic and equal-radius disk geometry on the periodic p x p square."""

from __future__ import annotations

import math

import numpy as np


def _check_finite(value, name):
    arr = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return arr


def wrap_position(raw, p: float) -> np.ndarray:
    """Map a point (or an ``(..., 2)`` array of points) onto ``[0, p)``."""
    if not p > 0:
        raise ValueError(f"p must be > 0, got {p!r}")
    arr = _check_finite(raw, "raw")
    out = np.mod(arr, p)
    # fmod rounding can return exactly p for tiny negative inputs
    out[out >= p] = 0.0
    return out


def torus_delta(a, b, p: float) -> np.ndarray:
    """Minimal-image displacement from ``a`` to ``b``; components lie in ``[-p/2, p/2)``."""
    a = _check_finite(a, "a")
    b = _check_finite(b, "b")
    d = np.mod(b - a + 0.5 * p, p) - 0.5 * p
    return np.where(d >= 0.5 * p, d - p, d)


def torus_distance(a, b, p: float):
    d = torus_delta(a, b, p)
    return np.hypot(d[..., 0], d[..., 1])


def disk_overlap_area(d: float, r: float) -> float:
    """Area of the lens shared by two radius-``r`` disks whose centers are ``d`` apart."""
    if not r > 0:
        raise ValueError(f"r must be > 0, got {r!r}")
    if d < 0 or not math.isfinite(d):
        raise ValueError(f"d must be a finite distance >= 0, got {d!r}")
    if d >= 2.0 * r:
        return 0.0
    c = min(1.0, max(-1.0, d / (2.0 * r)))
    return 2.0 * r * r * math.acos(c) - 0.5 * d * math.sqrt(max(0.0, 4.0 * r * r - d * d))


def disk_overlap_areas(d: np.ndarray, r: float) -> np.ndarray:
    """Vectorized :func:`disk_overlap_area`."""
    d = np.asarray(d, dtype=float)
    if np.any(d < 0):
        raise ValueError("distances must be >= 0")
    inside = d < 2.0 * r
    c = np.clip(d / (2.0 * r), -1.0, 1.0)
    lens = 2.0 * r * r * np.arccos(c) - 0.5 * d * np.sqrt(np.maximum(0.0, 4.0 * r * r - d * d))
    return np.where(inside, lens, 0.0)


def radius_from_split(A: float, n: int) -> float:
    """Radius of one agent when total footprint ``A`` is split over ``n`` equal disks."""
    if not A > 0:
        raise ValueError(f"A must be > 0, got {A!r}")
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    return math.sqrt(A / (n * math.pi))
