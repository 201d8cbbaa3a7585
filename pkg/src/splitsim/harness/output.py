"""CSV export and cross-seed aggregation."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from itertools import groupby
from pathlib import Path

import numpy as np

CSV_HEADER = ("experiment", "profile", "n", "seed", "t", "coverage_pct", "alive")
SUMMARY_HEADER = (
    "experiment", "profile", "n", "t", "mean_c", "std_c", "runs", "t_f_median", "t_f_censored",
)


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def write_csv(runs, path) -> Path:
    """Long format: one row per recorded sample of every run."""
    if not runs:
        raise ValueError("no runs to write")
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER)
            for run in runs:
                s = run.result.series
                for t, c, alive in zip(s.t, s.c, run.result.alive):
                    w.writerow((run.experiment, run.profile, run.n, run.seed, int(t), _fmt(c), int(alive)))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path


@dataclass(frozen=True)
class SummaryRow:
    experiment: str
    profile: str
    n: int
    t: int
    mean_c: float
    std_c: float
    runs: int
    # None when the median run never reached full coverage
    t_f_median: float | None
    t_f_censored: int


def _group_key(run):
    return (run.experiment, run.profile, run.n)


def _forward_fill(t_grid, t, c):
    # a run that stopped at full coverage stays at its last value
    idx = np.searchsorted(t, t_grid, side="right") - 1
    return c[np.maximum(idx, 0)]


def summarize(runs) -> list[SummaryRow]:
    """Mean and sample standard deviation of c(t) across seeds for each (experiment, profile, n, t).

    Runs that finished early are carried forward at their last value.  The
    completion-time median counts censored runs as infinitely late.
    """
    rows = []
    ordered = sorted(runs, key=_group_key)
    for key, members in groupby(ordered, key=_group_key):
        members = list(members)
        t_grid = np.unique(np.concatenate([m.result.series.t for m in members]))
        curves = np.array([_forward_fill(t_grid, m.result.series.t, m.result.series.c) for m in members])
        mean = curves.mean(axis=0)
        std = curves.std(axis=0, ddof=1) if len(members) > 1 else np.zeros_like(mean)
        tfs = np.array([math.inf if m.result.t_f is None else m.result.t_f for m in members], dtype=float)
        med = float(np.median(tfs))
        censored = int(np.count_nonzero(np.isinf(tfs)))
        for t, mu, sd in zip(t_grid, mean, std):
            rows.append(SummaryRow(*key, int(t), float(mu), float(sd), len(members),
                                   None if math.isinf(med) or math.isnan(med) else med, censored))
    return rows


def write_summary_csv(rows, path) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SUMMARY_HEADER)
        for r in rows:
            tf = "censored" if r.t_f_median is None else f"{r.t_f_median:g}"
            w.writerow((r.experiment, r.profile, r.n, r.t, _fmt(r.mean_c), _fmt(r.std_c), r.runs, tf, r.t_f_censored))
    return path
