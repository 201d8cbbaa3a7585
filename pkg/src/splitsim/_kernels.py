"""Compiled inner loops: disk stamping, movement with sub-steps, neighbor overlap sums.

Cell ``(i, j)`` has center ``((i + 0.5) * h, (j + 0.5) * h)`` with ``h = p / m`` and
lives at flat index ``(i % m) * m + (j % m)``.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def stamp_disk(covered, m, h, x, y, r):
    r2 = r * r
    ilo = math.ceil((x - r) / h - 0.5) - 1
    ihi = math.floor((x + r) / h - 0.5) + 1
    newly = 0
    for i in range(ilo, ihi + 1):
        dx = (i + 0.5) * h - x
        dx2 = dx * dx
        if dx2 > r2:
            continue
        s = math.sqrt(r2 - dx2)
        jlo = math.ceil((y - s) / h - 0.5) - 1
        jhi = math.floor((y + s) / h - 0.5) + 1
        row = (i % m) * m
        for j in range(jlo, jhi + 1):
            dy = (j + 0.5) * h - y
            if dx2 + dy * dy <= r2:
                k = row + j % m
                if not covered[k]:
                    covered[k] = True
                    newly += 1
    return newly


@njit(cache=True)
def stamp_disks(covered, m, h, xs, ys, r):
    newly = 0
    for a in range(xs.shape[0]):
        newly += stamp_disk(covered, m, h, xs[a], ys[a], r)
    return newly


@njit(cache=True)
def _wrap(v, p):
    v = v % p
    if v >= p:
        v = 0.0
    return v


@njit(cache=True)
def move_and_stamp(covered, m, h, p, xs, ys, headings, dists, active, r):
    """Advance active agents by ``dists`` along their headings, stamping after each sub-step.

    A displacement longer than ``r`` is split into equal sub-steps no longer
    than ``r`` so the swept band has no gaps.
    """
    newly = 0
    for a in range(xs.shape[0]):
        if not active[a]:
            continue
        d = dists[a]
        nsub = 1
        if d > r:
            nsub = int(math.ceil(d / r))
        step = d / nsub
        ux = math.cos(headings[a]) * step
        uy = math.sin(headings[a]) * step
        x = xs[a]
        y = ys[a]
        for _ in range(nsub):
            x = _wrap(x + ux, p)
            y = _wrap(y + uy, p)
            newly += stamp_disk(covered, m, h, x, y, r)
        xs[a] = x
        ys[a] = y
    return newly


@njit(cache=True)
def _lens(d, r):
    if d >= 2.0 * r:
        return 0.0
    c = d / (2.0 * r)
    if c > 1.0:
        c = 1.0
    return 2.0 * r * r * math.acos(c) - 0.5 * d * math.sqrt(max(0.0, 4.0 * r * r - d * d))


@njit(cache=True)
def _min_image(d, p):
    half = 0.5 * p
    if d >= half:
        d -= p
    elif d < -half:
        d += p
    return d


@njit(cache=True)
def overlap_sums(xs, ys, present, r, p):
    """Per-agent sum of lens areas with every other present agent (torus distances).

    Uses a uniform cell list with cells at least ``2r`` wide; falls back to
    all pairs when fewer than three cells fit per side.
    """
    n = xs.shape[0]
    sums = np.zeros(n)
    cutoff = 2.0 * r
    g = int(p // cutoff)
    if g < 3:
        for i in range(n):
            if not present[i]:
                continue
            for j in range(i + 1, n):
                if not present[j]:
                    continue
                dx = _min_image(xs[j] - xs[i], p)
                dy = _min_image(ys[j] - ys[i], p)
                d = math.sqrt(dx * dx + dy * dy)
                if d < cutoff:
                    o = _lens(d, r)
                    sums[i] += o
                    sums[j] += o
        return sums

    w = p / g
    head = -np.ones(g * g, dtype=np.int64)
    nxt = -np.ones(n, dtype=np.int64)
    cx = np.empty(n, dtype=np.int64)
    cy = np.empty(n, dtype=np.int64)
    for i in range(n):
        if not present[i]:
            continue
        a = min(int(xs[i] / w), g - 1)
        b = min(int(ys[i] / w), g - 1)
        cx[i] = a
        cy[i] = b
        c = a * g + b
        nxt[i] = head[c]
        head[c] = i
    for i in range(n):
        if not present[i]:
            continue
        for da in range(-1, 2):
            for db in range(-1, 2):
                c = ((cx[i] + da) % g) * g + (cy[i] + db) % g
                j = head[c]
                while j >= 0:
                    if j > i:
                        dx = _min_image(xs[j] - xs[i], p)
                        dy = _min_image(ys[j] - ys[i], p)
                        d = math.sqrt(dx * dx + dy * dy)
                        if d < cutoff:
                            o = _lens(d, r)
                            sums[i] += o
                            sums[j] += o
                    j = nxt[j]
    return sums
