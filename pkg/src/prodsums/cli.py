"""Command-line interface.

Subcommands::

    clt         many-replication convergence experiment -> CSV report
    asclt       single-trajectory logarithmic-average run -> grid CSV
    slln        geometric means of one path at checkpoints -> CSV
    identity    linearized-vs-standardized agreement check
    dist-table  analytic moments of one or more distributions

Distributions are written ``family:param1[:param2[:param3]]``, for
example ``exponential:1`` or ``gamma:4:0.5``.  Every run echoes its
fully resolved configuration as JSON on stderr so results can be
reproduced exactly; seeds default to a fixed constant rather than the
clock.  Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .asclt import ASCLT_KINDS, AscltReport, run_asclt_path
from .distributions import DistributionSpec, make_distribution, moments
from .limits import LAW_TAGS, law_from_tag
from .montecarlo import (
    ConvergenceReport,
    ExperimentConfig,
    run_clt_experiment,
    run_slln_experiment,
)
from .statistics import (
    STATISTIC_KINDS,
    linearized_statistic,
    standardized_sum,
)
from .distributions import sample

__all__ = ["main", "entrypoint", "parse_dist", "emit_plot_script"]

DEFAULT_SEED = 0  # fixed, documented; reproducibility by default
IDENTITY_TOLERANCE = 1e-10


def parse_dist(text: str) -> DistributionSpec:
    """Parse the ``family:p1[:p2[:p3]]`` grammar into a validated spec."""
    parts = text.split(":")
    family, raw = parts[0], parts[1:]
    try:
        params = [float(p) for p in raw]
    except ValueError:
        raise ValueError(f"malformed distribution {text!r}: parameters must be numbers")
    return make_distribution(family, params)


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed integer list {text!r}")


def _parse_float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed number list {text!r}")


def emit_plot_script(report, csv_path: str, out_path: str) -> None:
    """Write a gnuplot script plotting a report's CSV.

    The script is plain text referencing the CSV by path; nothing is
    rendered here.
    """
    if isinstance(report, AscltReport):
        if report.grid.size == 0:
            raise ValueError("cannot plot an empty report")
        body = (
            "set datafile separator ','\n"
            "set key left top\n"
            "set xlabel 'x'\n"
            "set ylabel 'CDF'\n"
            f"plot '{csv_path}' every ::1 using 1:2 with linespoints title 'A_N', \\\n"
            f"     '{csv_path}' every ::1 using 1:3 with lines title 'limit CDF'\n"
        )
    elif isinstance(report, ConvergenceReport):
        if not report.rows:
            raise ValueError("cannot plot an empty report")
        body = (
            "set datafile separator ','\n"
            "set logscale xy\n"
            "set xlabel 'n'\n"
            "set ylabel 'KS distance'\n"
            f"plot '{csv_path}' every ::1 using 1:3 with linespoints title 'KS'\n"
        )
    else:
        raise ValueError(f"cannot plot a report of type {type(report).__name__}")
    with open(out_path, "w") as fh:
        fh.write(body)


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON config {path!r}: {exc}")
    if not isinstance(cfg, dict):
        raise ValueError(f"config {path!r} must contain a JSON object")
    return cfg


def _resolve(args, config_keys: dict[str, str]) -> dict:
    """Merge config-file values under explicit flags (flags win)."""
    cfg = _load_config(args.config) if getattr(args, "config", None) else {}
    resolved = {}
    for attr, key in config_keys.items():
        flag_value = getattr(args, attr)
        resolved[key] = flag_value if flag_value is not None else cfg.get(key)
    return resolved


def _echo_config(name: str, resolved: dict) -> None:
    print(f"{name} config: {json.dumps(resolved, sort_keys=True)}", file=sys.stderr)


def _emit_config(args, resolved: dict) -> None:
    if getattr(args, "emit_config", None):
        with open(args.emit_config, "w") as fh:
            json.dump(resolved, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _open_out(path):
    return open(path, "w") if path else sys.stdout


def _require(resolved: dict, key: str, parser: argparse.ArgumentParser) -> None:
    if resolved.get(key) is None:
        parser.error(f"missing required value {key!r} (flag or config file)")


def _cmd_clt(args, parser) -> int:
    keys = {
        "dist": "spec", "stat": "kind", "n": "nList", "reps": "M",
        "seed": "baseSeed", "law": "compareLaw", "workers": "workers",
    }
    resolved = _resolve(args, keys)
    for k in ("spec", "kind", "nList"):
        _require(resolved, k, parser)
    if resolved["M"] is None:
        resolved["M"] = 1000
    if resolved["baseSeed"] is None:
        resolved["baseSeed"] = DEFAULT_SEED
    if resolved["workers"] is None:
        resolved["workers"] = 1
    _echo_config("clt", resolved)
    _emit_config(args, resolved)

    spec = parse_dist(resolved["spec"]) if isinstance(resolved["spec"], str) else resolved["spec"]
    n_list = resolved["nList"]
    if isinstance(n_list, str):
        n_list = _parse_int_list(n_list)
    law = None
    if resolved["compareLaw"]:
        mu = moments(spec)[0]
        law = law_from_tag(resolved["compareLaw"], mu)
    config = ExperimentConfig(
        spec=spec,
        kind=resolved["kind"],
        n_list=tuple(n_list),
        reps=int(resolved["M"]),
        base_seed=int(resolved["baseSeed"]),
        compare_law=law,
        workers=int(resolved["workers"]),
    )
    report = run_clt_experiment(config)
    out = _open_out(args.out)
    try:
        report.to_csv(out, timing=args.timing)
    finally:
        if out is not sys.stdout:
            out.close()
    for row in report.rows:
        print(
            f"n={row.n} ks={row.ks:.6f} ({row.wall_seconds:.2f}s)",
            file=sys.stderr,
        )
    if args.plot:
        if not args.out:
            parser.error("--plot needs --out so the script can reference the CSV")
        emit_plot_script(report, args.out, args.plot)
    return 0


def _cmd_asclt(args, parser) -> int:
    keys = {
        "dist": "spec", "stat": "kind", "N": "N", "seed": "baseSeed",
        "exact_cutoff": "exactCutoff", "grid": "grid", "workers": "workers",
    }
    resolved = _resolve(args, keys)
    for k in ("spec", "kind", "N"):
        _require(resolved, k, parser)
    if resolved["baseSeed"] is None:
        resolved["baseSeed"] = DEFAULT_SEED
    if resolved["exactCutoff"] is None:
        resolved["exactCutoff"] = 2000
    if resolved["workers"] is None:
        resolved["workers"] = 1  # accepted for symmetry; a single path is sequential
    _echo_config("asclt", resolved)
    _emit_config(args, resolved)

    spec = parse_dist(resolved["spec"]) if isinstance(resolved["spec"], str) else resolved["spec"]
    grid = resolved["grid"]
    if isinstance(grid, str):
        grid = _parse_float_list(grid)
    report = run_asclt_path(
        spec,
        resolved["kind"],
        int(resolved["N"]),
        int(resolved["baseSeed"]),
        grid=grid,
        exact_cutoff=int(resolved["exactCutoff"]),
    )
    out = _open_out(args.out)
    try:
        report.to_csv(out)
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        f"sup-gap={report.sup_gap:.6f} (logN normalization: {report.sup_gap_logn:.6f}) "
        f"series from n={report.mode_switch_n} fallbacks={report.fallback_count}",
        file=sys.stderr,
    )
    if args.plot:
        if not args.out:
            parser.error("--plot needs --out so the script can reference the CSV")
        emit_plot_script(report, args.out, args.plot)
    return 0


def _cmd_slln(args, parser) -> int:
    keys = {"dist": "spec", "n": "nList", "seed": "baseSeed"}
    resolved = _resolve(args, keys)
    for k in ("spec", "nList"):
        _require(resolved, k, parser)
    if resolved["baseSeed"] is None:
        resolved["baseSeed"] = DEFAULT_SEED
    _echo_config("slln", resolved)
    _emit_config(args, resolved)
    spec = parse_dist(resolved["spec"]) if isinstance(resolved["spec"], str) else resolved["spec"]
    n_list = resolved["nList"]
    if isinstance(n_list, str):
        n_list = _parse_int_list(n_list)
    report = run_slln_experiment(spec, n_list, int(resolved["baseSeed"]))
    out = _open_out(args.out)
    try:
        report.to_csv(out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _cmd_identity(args, parser) -> int:
    resolved = {
        "spec": args.dist, "n": args.n, "reps": args.reps,
        "baseSeed": args.seed if args.seed is not None else DEFAULT_SEED,
        "muOverride": args.mu_override,
    }
    _echo_config("identity", resolved)
    spec = parse_dist(args.dist)
    mu, sigma, gam = moments(spec)
    if args.mu_override is not None:
        mu = args.mu_override
        gam = sigma / mu
    worst = 0.0
    for r in range(args.reps):
        path = sample(spec, args.n, resolved["baseSeed"], r)
        lin = linearized_statistic(path, mu, gam)
        std = standardized_sum(path, moments(spec)[0], sigma)
        worst = max(worst, abs(lin - std))
    print(f"max |linearized - standardized| = {worst:.3e} over {args.reps} paths")
    return 0 if worst <= IDENTITY_TOLERANCE else 1


def _cmd_dist_table(args, parser) -> int:
    dists = args.dist or [
        "exponential:1", "gamma:4:0.5", "lognormal:0:0.5",
        "uniform:0.5:1.5", "twopoint:0.5:2:0.5",
    ]
    _echo_config("dist-table", {"dists": dists})
    out = _open_out(args.out)
    try:
        out.write("family,params,mu,sigma,gamma\n")
        for text in dists:
            spec = parse_dist(text)
            mu, sigma, gam = moments(spec)
            params = ":".join(repr(p) for p in spec.params)
            out.write(f"{spec.family},{params},{mu!r},{sigma!r},{gam!r}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prodsums",
        description="Limit-theorem experiments for products of partial sums",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_config=True):
        p.add_argument("--seed", type=int, default=None,
                       help=f"base seed (default {DEFAULT_SEED})")
        p.add_argument("--out", default=None, help="output CSV path (default stdout)")
        if with_config:
            p.add_argument("--config", default=None, help="JSON config file")
            p.add_argument("--emit-config", default=None,
                           help="write the resolved config as JSON to this path")

    p = sub.add_parser("clt", help="many-replication convergence experiment")
    p.add_argument("--dist", default=None, help="family:params, e.g. exponential:1")
    p.add_argument("--stat", default=None, choices=STATISTIC_KINDS)
    p.add_argument("--n", default=None, help="comma-separated path lengths")
    p.add_argument("--reps", type=int, default=None, help="replications per n (default 1000)")
    p.add_argument("--law", default=None, choices=LAW_TAGS,
                   help="comparison law override")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--timing", action="store_true",
                   help="write measured wall-clock into the seconds column "
                        "(default writes 0 so reports are byte-reproducible)")
    p.add_argument("--plot", default=None, help="write a gnuplot script here")
    add_common(p)
    p.set_defaults(func=_cmd_clt)

    p = sub.add_parser("asclt", help="single-trajectory logarithmic average")
    p.add_argument("--dist", default=None)
    p.add_argument("--stat", default=None, choices=ASCLT_KINDS)
    p.add_argument("--N", type=int, default=None, help="trajectory length")
    p.add_argument("--exact-cutoff", type=int, default=None,
                   help="largest n evaluated exactly for the loo statistic (default 2000)")
    p.add_argument("--grid", default=None,
                   help="comma-separated grid points (default: 19 normal quantiles)")
    p.add_argument("--workers", type=int, default=None,
                   help="accepted for config symmetry; a single path runs sequentially")
    p.add_argument("--plot", default=None, help="write a gnuplot script here")
    add_common(p)
    p.set_defaults(func=_cmd_asclt)

    p = sub.add_parser("slln", help="geometric means along one path")
    p.add_argument("--dist", default=None)
    p.add_argument("--n", default=None, help="comma-separated checkpoints")
    add_common(p)
    p.set_defaults(func=_cmd_slln)

    p = sub.add_parser("identity", help="linearized-vs-standardized check")
    p.add_argument("--dist", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reps", type=int, required=True)
    p.add_argument("--mu-override", type=float, default=None,
                   help="deliberately wrong mu, to demonstrate failure")
    add_common(p, with_config=False)
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("dist-table", help="analytic moments table")
    p.add_argument("--dist", action="append", default=None,
                   help="repeatable; defaults to a showcase of all families")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_dist_table)

    return parser


def main(argv=None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args, parser)
    except SystemExit as exc:  # parser.error inside a command
        return int(exc.code) if exc.code is not None else 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
