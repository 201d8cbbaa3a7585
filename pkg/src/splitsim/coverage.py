"""The m x m coverage grid, disk stamping and the coverage percentage."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels


def _box_range(c, r, h):
    return np.arange(math.ceil((c - r) / h - 0.5), math.floor((c + r) / h - 0.5) + 1)


def cells_in_disk(center, r: float, m: int, p: float) -> np.ndarray:
    """Sorted flat indices ``i * m + j`` of cells whose centers are within torus distance ``r``.

    The boundary is inclusive.  Disks wider than the torus simply wrap onto
    cells they already hit.
    """
    if not r > 0:
        raise ValueError(f"r must be > 0, got {r!r}")
    x, y = float(center[0]), float(center[1])
    h = p / m
    ii = _box_range(x, r, h)
    jj = _box_range(y, r, h)
    dx = (ii + 0.5) * h - x
    dy = (jj + 0.5) * h - y
    inside = dx[:, None] ** 2 + dy[None, :] ** 2 <= r * r
    flat = (ii[:, None] % m) * m + (jj[None, :] % m)
    return np.unique(flat[inside])


@dataclass
class CoverageGrid:
    """Ever-covered flags for an m x m grid over the p x p torus (flat, row-major)."""

    m: int
    p: float = 1.0
    covered: np.ndarray = field(init=False, repr=False)
    covered_count: int = field(init=False, default=0)

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"m must be an integer >= 1, got {self.m!r}")
        if not self.p > 0:
            raise ValueError(f"p must be > 0, got {self.p!r}")
        self.m = int(self.m)
        self.covered = np.zeros(self.m * self.m, dtype=np.bool_)

    @property
    def h(self) -> float:
        return self.p / self.m

    @property
    def n_cells(self) -> int:
        return self.m * self.m

    def as_image(self) -> np.ndarray:
        """2-D view indexed ``[i, j]`` with ``i`` along x."""
        return self.covered.reshape(self.m, self.m)

    def recount(self) -> int:
        return int(np.count_nonzero(self.covered))

    def copy(self) -> CoverageGrid:
        other = CoverageGrid(self.m, self.p)
        other.covered[:] = self.covered
        other.covered_count = self.covered_count
        return other


def stamp_disk(grid: CoverageGrid, center, r: float) -> int:
    """Mark the disk's cells covered and return how many were newly covered."""
    newly = _kernels.stamp_disk(grid.covered, grid.m, grid.h, float(center[0]), float(center[1]), float(r))
    grid.covered_count += newly
    return newly


def stamp_disks(grid: CoverageGrid, xs: np.ndarray, ys: np.ndarray, r: float) -> int:
    xs = np.ascontiguousarray(xs, dtype=float)
    ys = np.ascontiguousarray(ys, dtype=float)
    newly = _kernels.stamp_disks(grid.covered, grid.m, grid.h, xs, ys, float(r))
    grid.covered_count += newly
    return newly


def coverage_percent(grid: CoverageGrid) -> float:
    if grid.covered_count == grid.n_cells:
        return 100.0
    return grid.covered_count / grid.n_cells * 100.0
