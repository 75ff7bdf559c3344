#!/usr/bin/env python3
"""Pilot for the Taylor-remainder scaling fixture.

The mean of the squared-deviation diagnostic over replicated paths has
the closed-form expectation gamma/sqrt(n) * n/(n-1); the acceptance
test requires the empirical mean over 200 Exp(1) paths to stay within a
factor 2.  This prints the ratio at the sizes the test uses, plus a
wider sweep.

Run:  python3 pilots/pilot_remainder.py
"""

import math

import numpy as np

from prodsums import make_distribution, moments, remainder_magnitude, sample

EXP1 = make_distribution("exponential", [1.0])


def main() -> None:
    gam = moments(EXP1)[2]
    for n in (100, 1000, 10_000, 100_000):
        rems = [
            remainder_magnitude(sample(EXP1, n, 300, r), 1.0, gam) for r in range(200)
        ]
        expectation = gam / math.sqrt(n) * n / (n - 1)
        ratio = float(np.mean(rems)) / (gam / math.sqrt(n))
        print(
            f"n={n:>6}: mean {np.mean(rems):.5f}  analytic {expectation:.5f}  "
            f"ratio-to-gamma/sqrt(n) {ratio:.3f}"
        )


if __name__ == "__main__":
    main()
