"""Many-replication experiments: empirical CDFs, KS distances, reports.

Replicate r of row i (the i-th entry of the n list) draws its path from
stream index ``i * 2**32 + r``, so every replicate has its own
pre-assigned substream and the experiment is reproducible for any
worker count: workers only split the replicate range into chunks,
and chunks are reduced back in replicate order.

Product-form statistics are evaluated and compared on the log scale by
default (``loo`` against the standard normal, ``rw`` against the
variance-2 normal).  Passing a product-scale law (``expnorm`` /
``expsqrt2``) exponentiates the values first; because exp is strictly
increasing this leaves the KS distance unchanged up to rounding.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distributions import DistributionSpec, moments, sample
from .limits import LimitLaw, limit_cdf, normal_var2, point_mass, std_normal
from . import statistics as stats
from .statistics import STATISTIC_KINDS

__all__ = [
    "ExperimentConfig",
    "EmpiricalCdf",
    "ConvergenceRow",
    "ConvergenceReport",
    "SllnReport",
    "empirical_cdf",
    "ks_distance",
    "default_compare_law",
    "run_clt_experiment",
    "run_slln_experiment",
]

CLT_CSV_HEADER = "n,M,ks,mean,sd,mean_remainder,mean_maxdev,seconds"
SLLN_CSV_HEADER = "n,gm_prefix,err_prefix,gm_loo,err_loo"

# laws a kind may be compared against: its log-scale limit, plus the
# product-scale equivalent for the product-form statistics
_ALLOWED_LAWS = {
    "loo": ("n01", "expnorm"),
    "rw": ("n02", "expsqrt2"),
    "lin": ("n01",),
    "std": ("n01",),
    "gm-prefix": ("point",),
    "gm-loo": ("point",),
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Replication experiment: which statistic, which sizes, how many."""

    spec: DistributionSpec
    kind: str
    n_list: tuple[int, ...]
    reps: int
    base_seed: int
    compare_law: LimitLaw | None = None  # None: default law for the kind
    workers: int = 1

    def __post_init__(self):
        if self.kind not in STATISTIC_KINDS:
            raise ValueError(
                f"unknown statistic {self.kind!r}; expected one of "
                f"{', '.join(STATISTIC_KINDS)}"
            )
        ns = tuple(int(n) for n in self.n_list)
        if not ns or any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("n list must be nonempty and strictly increasing")
        min_n = 1 if self.kind in ("rw", "std", "gm-prefix") else 2
        if ns[0] < min_n:
            raise ValueError(f"kind {self.kind!r} needs n >= {min_n}")
        object.__setattr__(self, "n_list", ns)
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.compare_law is not None:
            allowed = _ALLOWED_LAWS[self.kind]
            if self.compare_law.tag not in allowed:
                raise ValueError(
                    f"law {self.compare_law.tag!r} is not a limit of kind "
                    f"{self.kind!r}; allowed: {', '.join(allowed)}"
                )


def default_compare_law(kind: str, spec: DistributionSpec) -> LimitLaw:
    """The limit law each statistic kind is compared against (log scale)."""
    if kind == "rw":
        return normal_var2()
    if kind in ("loo", "lin", "std"):
        return std_normal()
    if kind in ("gm-prefix", "gm-loo"):
        return point_mass(moments(spec)[0])
    raise ValueError(f"unknown statistic {kind!r}")


@dataclass(frozen=True)
class EmpiricalCdf:
    """Right-continuous empirical CDF of a finite sample."""

    sorted_values: np.ndarray

    def evaluate(self, x: float) -> float:
        m = self.sorted_values.size
        return float(np.searchsorted(self.sorted_values, x, side="right")) / m


def empirical_cdf(values) -> EmpiricalCdf:
    v = np.sort(np.asarray(values, dtype=float))
    if v.size == 0:
        raise ValueError("empirical CDF needs at least one value")
    v.setflags(write=False)
    return EmpiricalCdf(v)


def ks_distance(emp: EmpiricalCdf, law: LimitLaw) -> float:
    """Exact sup-distance between an empirical CDF and a limit law.

    Evaluated as the max over the sorted sample v_(1..M) of
    ``max(i/M - F(v_i), F(v_i) - (i-1)/M)``, which attains the sup for
    monotone F (including the step CDF of a point mass).
    """
    v = emp.sorted_values
    m = v.size
    f = np.array([limit_cdf(law, x) for x in v])
    i = np.arange(1, m + 1, dtype=float)
    return float(max(np.max(i / m - f), np.max(f - (i - 1.0) / m)))


_STAT_FUNCS = {
    "loo": lambda v, mu, sigma, gam: stats.loo_log_statistic(v, mu, gam),
    "rw": lambda v, mu, sigma, gam: stats.rw_log_statistic(v, mu, gam),
    "lin": lambda v, mu, sigma, gam: stats.linearized_statistic(v, mu, gam),
    "std": lambda v, mu, sigma, gam: stats.standardized_sum(v, mu, sigma),
    "gm-prefix": lambda v, mu, sigma, gam: stats.geometric_mean_prefix(v),
    "gm-loo": lambda v, mu, sigma, gam: stats.geometric_mean_loo(v),
}


def _replicate_block(args) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate replicates r0..r1-1 of one row; top level for pickling."""
    spec, kind, n, base_seed, row_index, r0, r1 = args
    mu, sigma, gam = moments(spec)
    func = _STAT_FUNCS[kind]
    want_diag = kind == "loo"
    vals = np.empty(r1 - r0)
    rems = np.full(r1 - r0, math.nan)
    devs = np.full(r1 - r0, math.nan)
    for j, r in enumerate(range(r0, r1)):
        path = sample(spec, n, base_seed, (row_index << 32) + r)
        v = path.values
        vals[j] = func(v, mu, sigma, gam)
        if want_diag:
            rems[j] = stats.remainder_magnitude(v, mu, gam)
            devs[j] = stats.max_relative_deviation(v, mu)
    return vals, rems, devs


def _row_values(config: ExperimentConfig, row_index: int, n: int):
    m = config.reps
    if config.workers == 1:
        blocks = [
            _replicate_block(
                (config.spec, config.kind, n, config.base_seed, row_index, 0, m)
            )
        ]
    else:
        chunk = max(1, -(-m // (config.workers * 4)))
        tasks = [
            (config.spec, config.kind, n, config.base_seed, row_index, r0,
             min(r0 + chunk, m))
            for r0 in range(0, m, chunk)
        ]
        with ProcessPoolExecutor(max_workers=config.workers) as ex:
            blocks = list(ex.map(_replicate_block, tasks))
    vals = np.concatenate([b[0] for b in blocks])
    rems = np.concatenate([b[1] for b in blocks])
    devs = np.concatenate([b[2] for b in blocks])
    return vals, rems, devs


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    reps: int
    ks: float
    mean: float
    sd: float
    mean_remainder: float
    mean_maxdev: float
    wall_seconds: float


@dataclass(frozen=True)
class ConvergenceReport:
    config: ExperimentConfig
    law: LimitLaw
    rows: tuple[ConvergenceRow, ...]

    def to_csv(self, fileobj, timing: bool = False) -> None:
        """Write the report; timing=False zeroes the seconds column.

        Wall-clock differs from run to run, so the deterministic form is
        the default: with it, reports for the same config and seed are
        byte-identical regardless of worker count.
        """
        fileobj.write(CLT_CSV_HEADER + "\n")
        for r in self.rows:
            secs = r.wall_seconds if timing else 0.0
            fileobj.write(
                f"{r.n},{r.reps},{r.ks!r},{r.mean!r},{r.sd!r},"
                f"{r.mean_remainder!r},{r.mean_maxdev!r},{secs:.6f}\n"
            )


def run_clt_experiment(config: ExperimentConfig) -> ConvergenceReport:
    """Run the replication experiment described by the config.

    For each n, draws ``reps`` independent paths, evaluates the
    configured statistic, and records the KS distance of the empirical
    law against the comparison law, plus the sample mean/sd and (for the
    leave-one-out kind) the mean Taylor-remainder and max-deviation
    diagnostics.  Deterministic for fixed base_seed whatever the worker
    count.
    """
    law = config.compare_law or default_compare_law(config.kind, config.spec)
    product_scale = law.tag in ("expnorm", "expsqrt2")
    rows = []
    for i, n in enumerate(config.n_list):
        t0 = time.perf_counter()
        vals, rems, devs = _row_values(config, i, n)
        data = np.exp(vals) if product_scale else vals
        ks = ks_distance(empirical_cdf(data), law)
        rows.append(
            ConvergenceRow(
                n=n,
                reps=config.reps,
                ks=ks,
                mean=float(np.mean(data)),
                sd=float(np.std(data, ddof=1)) if data.size > 1 else 0.0,
                mean_remainder=float(np.mean(rems)),
                mean_maxdev=float(np.mean(devs)),
                wall_seconds=time.perf_counter() - t0,
            )
        )
    return ConvergenceReport(config=config, law=law, rows=tuple(rows))


@dataclass(frozen=True)
class SllnRow:
    n: int
    gm_prefix: float
    err_prefix: float
    gm_loo: float
    err_loo: float


@dataclass(frozen=True)
class SllnReport:
    spec: DistributionSpec
    base_seed: int
    mu: float
    rows: tuple[SllnRow, ...]

    def to_csv(self, fileobj) -> None:
        fileobj.write(SLLN_CSV_HEADER + "\n")
        for r in self.rows:
            fileobj.write(
                f"{r.n},{r.gm_prefix!r},{r.err_prefix!r},"
                f"{r.gm_loo!r},{r.err_loo!r}\n"
            )


def run_slln_experiment(spec: DistributionSpec, n_list, base_seed: int) -> SllnReport:
    """Geometric means of one growing path, evaluated at checkpoints.

    Both geometric means converge almost surely to mu, so the report
    carries |value - mu| alongside each value.
    """
    ns = tuple(int(n) for n in n_list)
    if not ns or any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("n list must be nonempty and strictly increasing")
    if ns[0] < 2:
        raise ValueError("geometric means need n >= 2")
    mu = moments(spec)[0]
    path = sample(spec, ns[-1], base_seed, 0)
    rows = []
    for n in ns:
        prefix = path.values[:n]
        gp = stats.geometric_mean_prefix(prefix)
        gl = stats.geometric_mean_loo(prefix)
        rows.append(SllnRow(n, gp, abs(gp - mu), gl, abs(gl - mu)))
    return SllnReport(spec=spec, base_seed=int(base_seed), mu=mu, rows=tuple(rows))
