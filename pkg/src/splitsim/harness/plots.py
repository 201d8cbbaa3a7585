"""SVG charts of summarized coverage curves (derived views of the summary CSV)."""

from __future__ import annotations

import logging
from itertools import groupby
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

log = logging.getLogger(__name__)

PROFILE_CMAPS = {"constant": "Reds", "linear": "Greens", "radius": "Blues", "area": "Purples"}

_RC = {"svg.hashsalt": "splitsim", "svg.fonttype": "none"}


def _shade(cmap_name, rank, count):
    # darker shades for fewer agents
    frac = 0.95 if count == 1 else 0.95 - 0.6 * rank / (count - 1)
    return plt.get_cmap(cmap_name)(frac)


def _curves(rows):
    """``{profile: {n: (t, mean)}}`` keeping only groups with finite samples."""
    out = {}
    for (profile, n), grp in groupby(sorted(rows, key=lambda r: (r.profile, r.n, r.t)), key=lambda r: (r.profile, r.n)):
        grp = list(grp)
        t = np.array([r.t for r in grp], dtype=float)
        c = np.array([r.mean_c for r in grp], dtype=float)
        keep = np.isfinite(c)
        if not keep.any():
            log.warning("skipping empty group profile=%s n=%s", profile, n)
            continue
        out.setdefault(profile, {})[n] = (t[keep], c[keep])
    return out


def emit_plots(summary, out_dir) -> list[Path]:
    """Write ``<experiment>.svg`` (mean c(t) per n, one panel per profile) for every experiment.

    Walk-mode experiments also get ``<experiment>_final_vs_n.svg``: coverage
    at the last common sample against group size.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    by_exp = groupby(sorted(summary, key=lambda r: r.experiment), key=lambda r: r.experiment)
    with plt.rc_context(_RC):
        for experiment, rows in by_exp:
            curves = _curves(list(rows))
            if not curves:
                log.warning("experiment %s has no data; no chart written", experiment)
                continue
            written.append(_time_chart(experiment, curves, out_dir))
            if experiment != "teleport":
                written.append(_final_chart(experiment, curves, out_dir))
    return written


def _time_chart(experiment, curves, out_dir):
    profiles = list(curves)
    fig, axes = plt.subplots(1, len(profiles), figsize=(4 * len(profiles), 3.5), squeeze=False, sharey=True)
    xlabel = "round" if experiment == "teleport" else "step"
    for ax, profile in zip(axes[0], profiles):
        ns = sorted(curves[profile])
        cmap = PROFILE_CMAPS.get(profile, "Greys")
        for rank, n in enumerate(ns):
            t, c = curves[profile][n]
            ax.plot(t, c, color=_shade(cmap, rank, len(ns)), lw=1.2, label=f"n={n}", gid=f"series-{profile}-n{n}")
        ax.set_ylim(0, 100)
        ax.set_title(profile)
        ax.set_xlabel(xlabel)
        ax.legend(fontsize=7, loc="lower right")
    axes[0][0].set_ylabel("coverage c(t) [%]")
    fig.suptitle(experiment)
    fig.tight_layout()
    path = out_dir / f"{experiment}.svg"
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def _final_chart(experiment, curves, out_dir):
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for profile, per_n in curves.items():
        t_end = min(t[-1] for t, _ in per_n.values())
        ns = sorted(per_n)
        vals = [float(np.interp(t_end, *per_n[n])) for n in ns]
        color = plt.get_cmap(PROFILE_CMAPS.get(profile, "Greys"))(0.75)
        ax.plot(ns, vals, "o-", color=color, label=f"{profile} (t={t_end:g})", gid=f"final-{profile}")
    ax.set_xscale("log")
    ax.set_ylim(0, 100)
    ax.set_xlabel("number of agents n")
    ax.set_ylabel("coverage [%]")
    ax.legend(fontsize=7)
    ax.set_title(experiment)
    fig.tight_layout()
    path = out_dir / f"{experiment}_final_vs_n.svg"
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path
