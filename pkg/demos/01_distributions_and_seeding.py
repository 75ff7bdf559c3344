#!/usr/bin/env python3
"""Positive-support families, analytic moments, and splittable seeding.

Every path is addressed by (base_seed, stream_index): replicate r of an
experiment uses stream r, and regenerating any stream is bit-exact.
"""

import numpy as np

from prodsums import make_distribution, moments, sample

print("families and their analytic moments")
print(f"{'spec':<28} {'mu':>9} {'sigma':>9} {'cv':>9}")
for text, spec in [
    ("exponential:1", make_distribution("exponential", [1.0])),
    ("gamma:4:0.5", make_distribution("gamma", [4.0, 0.5])),
    ("lognormal:0:0.5", make_distribution("lognormal", [0.0, 0.5])),
    ("uniform:0.5:1.5", make_distribution("uniform", [0.5, 1.5])),
    ("twopoint:0.5:2:0.5", make_distribution("twopoint", [0.5, 2.0, 0.5])),
]:
    mu, sigma, gam = moments(spec)
    print(f"{text:<28} {mu:>9.4f} {sigma:>9.4f} {gam:>9.4f}")

spec = make_distribution("gamma", [4.0, 0.5])
print("\nbit-exact replay: same (spec, n, seed, stream) twice")
a = sample(spec, 5, base_seed=42, stream_index=7)
b = sample(spec, 5, base_seed=42, stream_index=7)
print(" ", a.values)
print(" ", b.values)
print("  identical:", np.array_equal(a.values, b.values))

print("\nindependent streams: stream 0 vs stream 1 at n = 1e5")
x = sample(spec, 100_000, 42, 0).values
y = sample(spec, 100_000, 42, 1).values
print(f"  sample means {x.mean():.4f}, {y.mean():.4f} (analytic 2.0)")
print(f"  paired correlation {np.corrcoef(x, y)[0, 1]:+.5f}")
