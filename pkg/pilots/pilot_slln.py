#!/usr/bin/env python3
"""Pilot for the geometric-mean (strong-law) fixtures.

Runs one Exp(1) path per seed over seeds 0..49 and reports the
distribution of |gm_prefix(n) - 1| at the checkpoints used by the
acceptance suite.  The shipped tolerance (95th percentile <= 0.02 at
n = 1e5, medians decreasing across checkpoints) comes from this run;
the fluctuation scale of the prefix geometric mean is ~ sqrt(2/n).

Run:  python3 pilots/pilot_slln.py
"""

import numpy as np

from prodsums import make_distribution, run_slln_experiment

EXP1 = make_distribution("exponential", [1.0])
CHECKPOINTS = (1000, 10_000, 100_000)


def main() -> None:
    errs = {n: [] for n in CHECKPOINTS}
    for seed in range(50):
        for row in run_slln_experiment(EXP1, CHECKPOINTS, seed).rows:
            errs[row.n].append(row.err_prefix)
    for n in CHECKPOINTS:
        e = np.array(errs[n])
        print(
            f"n={n:>6}: median {np.median(e):.4f}  p95 {np.percentile(e, 95):.4f}  "
            f"max {e.max():.4f}"
        )
    final = np.array(errs[CHECKPOINTS[-1]])
    print(f"95th percentile at n=1e5: {np.percentile(final, 95):.4f} (tolerance 0.02)")
    medians = [float(np.median(errs[n])) for n in CHECKPOINTS]
    print("medians decreasing:", all(a > b for a, b in zip(medians, medians[1:])))


if __name__ == "__main__":
    main()
