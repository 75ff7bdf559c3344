"""Logarithmic-average empirical distributions along one trajectory.

The almost-sure central limit theorem says that for a single path the
log-weighted occupation fractions

    A_N(x) = (1/W_N) * sum_{n=2..N} (1/n) * I(t_n <= x),
    W_N    = sum_{n=2..N} 1/n,

converge to the limit CDF at x, where t_n is the statistic evaluated on
the first n draws.  Two normalization conventions differ only by
O(1/log N): the classical statements divide by log N, while dividing by
W_N keeps A_N inside [0, 1] at every finite N.  :meth:`evaluate` uses
W_N; the log N variant is exposed alongside it for fidelity to the
classical form.

Accumulation starts at n = 2 because the leave-one-out statistic is
undefined on a single draw (its normalizer (n-1)*mu vanishes); the
single dropped term is irrelevant in the limit.

Statistic evaluation inside :func:`run_asclt_path` is O(1) per step for
the prefix kinds (``rw``, ``lin``, ``std``) and for the leave-one-out
kind beyond ``exact_cutoff``, where the power-sum series takes over
(falling back to the exact O(n) evaluation on the rare steps where the
series validity gate fails).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distributions import DistributionSpec, moments, sample
from .limits import LimitLaw, limit_cdf, normal_quantile, normal_var2, std_normal
from .statistics import loo_log_statistic
from .streaming import init_state, loo_log_series
from .summation import NeumaierSum

__all__ = [
    "ASCLT_KINDS",
    "LogAvgAccumulator",
    "new_accumulator",
    "default_grid",
    "AscltReport",
    "run_asclt_path",
]

ASCLT_KINDS = ("loo", "rw", "lin", "std")

ASCLT_CSV_HEADER = "x,A_N,F_limit,gap"


def default_grid() -> np.ndarray:
    """Standard 19-point grid: normal quantiles at p = 0.05, ..., 0.95."""
    return np.array([normal_quantile(0.05 * j) for j in range(1, 20)])


class LogAvgAccumulator:
    """Per-grid-point accumulation of 1/n-weighted indicator mass.

    Weights and the total are Kahan-compensated so the normalization
    identity (total = H_N - 1) holds to 1e-9 even for very long runs.
    Accumulation is strictly sequential in n.
    """

    def __init__(self, grid):
        g = np.asarray(grid, dtype=float)
        if g.ndim != 1 or g.size == 0:
            raise ValueError("grid must be a nonempty 1-D sequence")
        if not np.all(np.diff(g) > 0.0):
            raise ValueError("grid must be strictly increasing")
        g = g.copy()
        g.setflags(write=False)
        self.grid = g
        self._w = np.zeros(g.size)
        self._wc = np.zeros(g.size)  # Kahan compensations
        self._total = NeumaierSum()
        self.last_n = 1  # first accepted n is 2

    @property
    def total_weight(self) -> float:
        return self._total.value

    @property
    def weights(self) -> np.ndarray:
        return self._w + self._wc

    def accumulate(self, n: int, t_n: float) -> "LogAvgAccumulator":
        """Add the indicator row for step n; n must equal last_n + 1."""
        if n != self.last_n + 1:
            raise ValueError(
                f"accumulation must be strictly sequential: expected "
                f"n = {self.last_n + 1}, got {n}"
            )
        w = 1.0 / n
        # I(t_n <= grid[j]) holds for every j from the first grid point >= t_n
        j = int(np.searchsorted(self.grid, t_n, side="left"))
        if j < self.grid.size:
            ws = self._w[j:]
            cs = self._wc[j:]
            y = w - cs
            t = ws + y
            cs[:] = (t - ws) - y
            ws[:] = t
        self._total.add(w)
        self.last_n = n
        return self

    def evaluate(self) -> np.ndarray:
        """A_N over the grid, normalized by the accumulated 1/n mass."""
        if self.last_n < 2:
            raise ValueError("nothing accumulated yet")
        return np.clip(self.weights / self.total_weight, 0.0, 1.0)

    def evaluate_log_normalized(self) -> np.ndarray:
        """A_N normalized by log N, matching the classical statements."""
        if self.last_n < 2:
            raise ValueError("nothing accumulated yet")
        return self.weights / math.log(self.last_n)


def new_accumulator(grid) -> LogAvgAccumulator:
    """Fresh accumulator over a strictly increasing grid."""
    return LogAvgAccumulator(grid)


@dataclass
class AscltReport:
    """Result of a single-trajectory run against its comparison law."""

    spec: DistributionSpec
    kind: str
    n_max: int
    base_seed: int
    exact_cutoff: int
    law: LimitLaw
    grid: np.ndarray
    a_values: np.ndarray
    limit_values: np.ndarray
    sup_gap: float
    a_values_logn: np.ndarray | None = field(repr=False, default=None)
    sup_gap_logn: float = math.nan
    mode_switch_n: int | None = None
    fallback_count: int = 0

    def rows(self):
        for x, a, f in zip(self.grid, self.a_values, self.limit_values):
            yield float(x), float(a), float(f), float(a - f)

    def to_csv(self, fileobj) -> None:
        fileobj.write(ASCLT_CSV_HEADER + "\n")
        for x, a, f, gap in self.rows():
            fileobj.write(f"{x!r},{a!r},{f!r},{gap!r}\n")


def _comparison_law(kind: str) -> LimitLaw:
    # log-scale comparison laws: the product statistics are accumulated
    # as their logs, so e^Z laws become plain normals
    return normal_var2() if kind == "rw" else std_normal()


def run_asclt_path(
    spec: DistributionSpec,
    kind: str,
    n_max: int,
    base_seed: int,
    grid=None,
    exact_cutoff: int = 2000,
    stream_index: int = 0,
) -> AscltReport:
    """Stream one path of length n_max and log-average its statistic.

    For each n = 2..n_max the statistic t_n of the first n draws is
    accumulated against the grid, then compared to the law the ASCLT
    predicts for that statistic (on the log scale for the product
    kinds).  Returns the report with both normalizations and the sup
    gap against the limit CDF.
    """
    if kind not in ASCLT_KINDS:
        raise ValueError(
            f"unknown ASCLT statistic {kind!r}; expected one of {', '.join(ASCLT_KINDS)}"
        )
    n_max = int(n_max)
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    exact_cutoff = int(exact_cutoff)
    if exact_cutoff < 2:
        raise ValueError("exact_cutoff must be >= 2")

    mu, sigma, gam = moments(spec)
    path = sample(spec, n_max, base_seed, stream_index)
    v = path.values
    acc = LogAvgAccumulator(default_grid() if grid is None else grid)
    law = _comparison_law(kind)

    state = init_state(mu)
    running = NeumaierSum()  # rw: sum of log(S_k/(k mu)); lin/std: sum of draws
    mode_switch = None
    fallbacks = 0

    for n in range(1, n_max + 1):
        x = float(v[n - 1])
        state.update(x)
        if kind == "rw":
            running.add(math.log1p((state.total - n * mu) / (n * mu)))
        if n < 2:
            continue
        if kind == "rw":
            t = running.value / (gam * math.sqrt(n))
        elif kind == "std":
            t = state.p1 / (sigma * math.sqrt(n))
        elif kind == "lin":
            # reduced form of the leave-one-out linearization
            t = (state.total - n * mu) / (sigma * math.sqrt(n))
        else:  # loo
            if n <= exact_cutoff:
                t = loo_log_statistic(v[:n], mu, gam)
            else:
                t, valid = loo_log_series(state, gam)
                if not valid:
                    fallbacks += 1
                    t = loo_log_statistic(v[:n], mu, gam)
                elif mode_switch is None:
                    mode_switch = n
        acc.accumulate(n, t)

    a = acc.evaluate()
    f = np.array([limit_cdf(law, x) for x in acc.grid])
    a_logn = acc.evaluate_log_normalized()
    return AscltReport(
        spec=spec,
        kind=kind,
        n_max=n_max,
        base_seed=int(base_seed),
        exact_cutoff=exact_cutoff,
        law=law,
        grid=acc.grid,
        a_values=a,
        limit_values=f,
        sup_gap=float(np.max(np.abs(a - f))),
        a_values_logn=a_logn,
        sup_gap_logn=float(np.max(np.abs(a_logn - f))),
        mode_switch_n=mode_switch,
        fallback_count=fallbacks,
    )
