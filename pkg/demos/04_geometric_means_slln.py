#!/usr/bin/env python3
"""Strong law for geometric means of normalized partial sums.

With only a first moment, (prod_k S_k / n!)^(1/n) converges almost
surely to the mean -- and the leave-one-out analogue behaves the same
way.  Watch the errors shrink along a single growing path.
"""

from prodsums import make_distribution, run_slln_experiment

for text, spec in [
    ("exponential:1", make_distribution("exponential", [1.0])),
    ("lognormal:0:0.5", make_distribution("lognormal", [0.0, 0.5])),
]:
    report = run_slln_experiment(spec, (100, 1000, 10_000, 100_000), base_seed=3)
    print(f"{text} (mu = {report.mu:.4f})")
    print(f"  {'n':>7} {'gm_prefix':>10} {'|err|':>9} {'gm_loo':>10} {'|err|':>9}")
    for r in report.rows:
        print(
            f"  {r.n:>7} {r.gm_prefix:>10.5f} {r.err_prefix:>9.5f} "
            f"{r.gm_loo:>10.5f} {r.err_loo:>9.5f}"
        )
    print()
