"""Run every (profile, n, seed) combination of a sweep, serially or in worker processes."""

from __future__ import annotations

import logging
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..engine import RunResult, run
from .config import SweepSpec

log = logging.getLogger(__name__)


@dataclass
class SweepRun:
    experiment: str
    profile: str
    n: int
    seed: int
    result: RunResult

    @property
    def key(self):
        return (self.experiment, self.profile, self.n, self.seed)


class SweepError(RuntimeError):
    """Some runs failed; ``completed`` holds the ones that did not."""

    def __init__(self, failures, completed):
        self.failures = failures
        self.completed = completed
        lines = [f"  profile={p} n={n} seed={s}: {msg}" for (p, n, s), msg in failures]
        super().__init__(f"{len(failures)} run(s) failed:\n" + "\n".join(lines))


def _task(args):
    spec, profile, n, seed = args
    try:
        return profile, n, seed, run(spec.config_for(profile, n), seed), None
    except Exception as exc:  # reported per combination, other runs continue
        return profile, n, seed, None, "".join(traceback.format_exception_only(type(exc), exc)).strip()


def tasks(spec: SweepSpec):
    return [(spec, profile, n, seed) for profile in spec.profiles for n in spec.n_values for seed in spec.seeds]


def run_sweep(spec: SweepSpec, jobs: int = 1, progress: bool = True) -> list[SweepRun]:
    """Execute the sweep; output order is fixed by (profile, n, seed) and independent of ``jobs``."""
    todo = tasks(spec)
    total = len(todo)
    if jobs > 1 and total > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = _collect(pool.map(_task, todo, chunksize=1), total, progress)
    else:
        outcomes = _collect(map(_task, todo), total, progress)

    order = {(p, n, s): i for i, (_, p, n, s) in enumerate(todo)}
    outcomes.sort(key=lambda o: order[o[:3]])
    runs, failures = [], []
    for profile, n, seed, result, err in outcomes:
        if err is None:
            runs.append(SweepRun(spec.experiment, profile, n, seed, result))
        else:
            failures.append(((profile, n, seed), err))
    if failures:
        raise SweepError(failures, runs)
    return runs


def _collect(iterator, total, progress):
    out = []
    for i, outcome in enumerate(iterator, 1):
        out.append(outcome)
        if progress:
            profile, n, seed, result, err = outcome
            status = "FAILED" if err else f"c={result.final_coverage:.2f}% t={result.series.t[-1]}"
            print(f"[{i}/{total}] {profile} n={n} seed={seed} {status}", file=sys.stderr)
    return out
