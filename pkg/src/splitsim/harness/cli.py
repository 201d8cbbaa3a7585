"""Command line entry point: ``splitsim run | predict | oracle``."""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

from ..engine import ConfigError

EXIT_CONFIG = 2
EXIT_RUNTIME = 3


def _cmd_run(args) -> int:
    from .config import parse_config
    from .output import summarize, write_csv, write_summary_csv
    from .sweep import run_sweep

    spec = parse_config(args.config)
    if args.seed is not None:
        spec = spec.with_master_seed(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    runs = run_sweep(spec, jobs=args.jobs, progress=not args.quiet)
    write_csv(runs, out / "results.csv")
    if not args.csv_only:
        from .plots import emit_plots

        rows = summarize(runs)
        write_summary_csv(rows, out / "summary.csv")
        emit_plots(rows, out)
    print(f"wrote {len(runs)} runs to {out}", file=sys.stderr)
    return 0


def _cmd_predict(args) -> int:
    from ..analysis import initial_rate, linear_zero_n, optimal_n_linear, best_integer_n
    from ..motion import PROFILE_KINDS

    ns = args.n
    print("profile   " + "".join(f"{n:>12d}" for n in ns))
    for kind in PROFILE_KINDS:
        rates = [initial_rate(kind, n, args.A, args.V0, args.gamma) for n in ns]
        print(f"{kind:<10}" + "".join(f"{x:12.4e}" for x in rates))
    n_star = optimal_n_linear(args.V0, args.gamma)
    print(f"\nlinear optimum n* = {n_star:.6g}")
    if math.isfinite(n_star):
        n_int = best_integer_n("linear", linear_zero_n(args.V0, args.gamma), args.A, args.V0, args.gamma)
        print(f"best integer n    = {n_int}")
    print(f"teleport ideal    = {100 * args.A / args.p**2:.6g} % per round")
    return 0


def _cmd_oracle(args) -> int:
    from ..oracles import report

    for name, value in report():
        print(f"{name:<45} {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitsim", description="Split-over-n coverage simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a sweep from a config file")
    p_run.add_argument("config")
    p_run.add_argument("--out", default="out")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--seed", type=int, default=None, help="override master_seed")
    p_run.add_argument("--csv-only", action="store_true")
    p_run.add_argument("--quiet", action="store_true", help="no per-run progress lines")
    p_run.set_defaults(func=_cmd_run)

    p_pred = sub.add_parser("predict", help="closed-form initial coverage rates")
    p_pred.add_argument("--A", type=float, default=math.pi * 0.01)
    p_pred.add_argument("--p", type=float, default=1.0)
    p_pred.add_argument("--V0", type=float, default=0.005)
    p_pred.add_argument("--gamma", type=float, default=4e-6)
    p_pred.add_argument("--n", type=int, nargs="+", default=[1, 2, 10, 100, 500, 1000])
    p_pred.set_defaults(func=_cmd_predict)

    p_or = sub.add_parser("oracle", help="recompute reference values by brute force")
    p_or.set_defaults(func=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
