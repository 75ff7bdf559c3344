"""Positive-support random variate generation with exact analytic moments.

Five families are supported, all with support contained in (0, inf) and
strictly positive variance, so the coefficient of variation sigma/mu is
always defined and positive:

======================= ======================== =========================
family                  parameters               analytic moments
======================= ======================== =========================
``exponential``         rate > 0                 mu = sigma = 1/rate
``gamma``               shape > 0, scale > 0     mu = k*theta, var = k*theta^2
``lognormal``           log_mean, log_sd > 0     mu = exp(m + s^2/2)
``uniform``             0 < a < b                mu = (a+b)/2, sd = (b-a)/sqrt(12)
``twopoint``            0 < low < high,          mu = p*low + (1-p)*high,
                        0 < p_low < 1            sd = (high-low)*sqrt(p*(1-p))
======================= ======================== =========================

Sampling is deterministic and splittable.  A path is addressed by a
``(base_seed, stream_index)`` pair of 64-bit integers; the pair is mixed
into a single Philox key by :func:`derive_stream_seed`, so replicate ``r``
of an experiment can simply use ``stream_index = r`` and the draws never
depend on evaluation order or worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FAMILIES",
    "DistributionSpec",
    "SamplePath",
    "make_distribution",
    "moments",
    "sample",
    "derive_stream_seed",
]

FAMILIES = ("exponential", "gamma", "lognormal", "uniform", "twopoint")

_ARITY = {
    "exponential": 1,
    "gamma": 2,
    "lognormal": 2,
    "uniform": 2,
    "twopoint": 3,
}

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class DistributionSpec:
    """A validated positive-support distribution family.

    Construct through :func:`make_distribution`, which checks the support
    and positivity invariants.
    """

    family: str
    params: tuple[float, ...]

    def __str__(self) -> str:
        return self.family + ":" + ":".join(repr(p) for p in self.params)


@dataclass(frozen=True, eq=False)
class SamplePath:
    """An ordered sequence of positive draws with full seed provenance."""

    values: np.ndarray
    spec: DistributionSpec
    base_seed: int
    stream_index: int

    def __len__(self) -> int:
        return self.values.size


def make_distribution(family: str, params) -> DistributionSpec:
    """Build a validated spec from a family name and parameter list.

    Raises ``ValueError`` for an unknown family, wrong arity, or
    parameters that violate the positive-support / positive-variance
    invariants.
    """
    name = str(family).lower()
    if name not in FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}"
        )
    p = tuple(float(x) for x in params)
    if len(p) != _ARITY[name]:
        raise ValueError(
            f"{name} takes {_ARITY[name]} parameter(s), got {len(p)}"
        )
    if not all(math.isfinite(x) for x in p):
        raise ValueError(f"{name} parameters must be finite, got {p}")
    if name == "exponential":
        if p[0] <= 0:
            raise ValueError(f"exponential rate must be > 0, got {p[0]}")
    elif name == "gamma":
        if p[0] <= 0 or p[1] <= 0:
            raise ValueError(f"gamma requires shape > 0 and scale > 0, got {p}")
    elif name == "lognormal":
        if p[1] <= 0:
            raise ValueError(f"lognormal log-sd must be > 0, got {p[1]}")
    elif name == "uniform":
        if not 0 < p[0] < p[1]:
            raise ValueError(f"uniform requires 0 < a < b, got a={p[0]}, b={p[1]}")
    else:  # twopoint
        low, high, p_low = p
        if not 0 < low < high:
            raise ValueError(f"twopoint requires 0 < low < high, got {p[:2]}")
        if not 0 < p_low < 1:
            raise ValueError(f"twopoint requires 0 < p_low < 1, got {p_low}")
    return DistributionSpec(name, p)


def moments(spec: DistributionSpec) -> tuple[float, float, float]:
    """Exact analytic (mu, sigma, gamma) of a spec, gamma = sigma/mu."""
    p = spec.params
    if spec.family == "exponential":
        mu = sigma = 1.0 / p[0]
    elif spec.family == "gamma":
        shape, scale = p
        mu = shape * scale
        sigma = scale * math.sqrt(shape)
    elif spec.family == "lognormal":
        m, s = p
        mu = math.exp(m + 0.5 * s * s)
        sigma = mu * math.sqrt(math.expm1(s * s))
    elif spec.family == "uniform":
        a, b = p
        mu = 0.5 * (a + b)
        sigma = (b - a) / math.sqrt(12.0)
    else:  # twopoint
        low, high, p_low = p
        mu = p_low * low + (1.0 - p_low) * high
        sigma = (high - low) * math.sqrt(p_low * (1.0 - p_low))
    return mu, sigma, sigma / mu


def derive_stream_seed(base_seed: int, stream_index: int) -> int:
    """Mix (base_seed, stream_index) into one 64-bit generator key.

    The base seed is advanced by ``stream_index + 1`` increments of the
    64-bit golden-ratio constant 0x9E3779B97F4A7C15 and then passed
    through the SplitMix64 finalizer (xor-shift / multiply rounds with
    constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).  Distinct
    stream indices therefore key statistically independent Philox
    streams, and the mapping is reproducible across platforms.
    """
    base_seed = int(base_seed)
    stream_index = int(stream_index)
    if not 0 <= base_seed <= _MASK64:
        raise ValueError("base_seed must fit in 64 unsigned bits")
    if not 0 <= stream_index <= _MASK64:
        raise ValueError("stream_index must fit in 64 unsigned bits")
    z = (base_seed + ((stream_index + 1) & _MASK64) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _generator(base_seed: int, stream_index: int) -> np.random.Generator:
    # Philox is counter-based: cheap to key, arbitrary numbers of
    # independent streams.
    return np.random.Generator(
        np.random.Philox(key=derive_stream_seed(base_seed, stream_index))
    )


def _draw(spec: DistributionSpec, gen: np.random.Generator, n: int) -> np.ndarray:
    p = spec.params
    if spec.family == "exponential":
        # inverse CDF with U = 1 - random() in (0, 1]; log1p keeps the
        # small-u tail exact
        return -np.log1p(-gen.random(n)) / p[0]
    if spec.family == "gamma":
        return gen.standard_gamma(p[0], n) * p[1]
    if spec.family == "lognormal":
        return np.exp(p[0] + p[1] * gen.standard_normal(n))
    if spec.family == "uniform":
        a, b = p
        return a + (b - a) * gen.random(n)
    low, high, p_low = p
    return np.where(gen.random(n) < p_low, low, high)


def sample(
    spec: DistributionSpec, n: int, base_seed: int, stream_index: int = 0
) -> SamplePath:
    """Draw a path of ``n`` strictly positive values.

    Pure function of its arguments: the same (spec, n, base_seed,
    stream_index) always yields bit-identical values.  Zero draws (for
    example an exponential inverse CDF hitting U = 1, or an extreme
    small-shape gamma underflowing) are redrawn from the same stream, so
    every returned value is > 0.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"path length must be >= 1, got {n}")
    gen = _generator(base_seed, stream_index)
    values = _draw(spec, gen, n)
    bad = values <= 0.0
    while bad.any():
        values[bad] = _draw(spec, gen, int(bad.sum()))
        bad = values <= 0.0
    values.setflags(write=False)
    return SamplePath(values, spec, int(base_seed), int(stream_index))
