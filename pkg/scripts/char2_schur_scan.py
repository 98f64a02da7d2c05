#!/usr/bin/env python3
"""Scan small determinantal setups for Schur-image modules that fail to be
maximal Cohen-Macaulay in characteristic two.

For one-column shapes the Schur image coincides with the wedge image, which
is Cohen-Macaulay in every characteristic, so the interesting shapes have at
least two columns; the smallest candidate is shape (2) with l = 2, i.e.
setups (4, n, 2).  Those sizes are heavy for the exact engine, so each case
runs under a hard wall-clock budget and is reported as SKIPPED when it
exceeds it.

Usage: char2_schur_scan.py [max_seconds_per_case]
"""

import signal
import sys
import time

from detlab.detvar import certify_mcm, generic_setup, schur_module
from detlab.partitions import Partition

CASES = [
    # (m, n, l, shape)
    (2, 2, 1, (1,)),
    (3, 3, 1, (2,)),
    (3, 4, 1, (2,)),
    (3, 3, 2, (1, 1)),
    (4, 4, 2, (2,)),
    (4, 5, 2, (2,)),
]


class Budget(Exception):
    pass


def _alarm(signum, frame):
    raise Budget


def main() -> int:
    budget = int(sys.argv[1]) if len(sys.argv) > 1 else 120
    signal.signal(signal.SIGALRM, _alarm)
    print("schur-image Cohen-Macaulay scan over F_2 (no assertion, exploratory)")
    for m, n, l, shape in CASES:
        if not Partition(shape).fits_in_box(l, m - l):
            continue
        start = time.time()
        signal.alarm(budget)
        try:
            setup = generic_setup(m, n, l, char=2)
            mod = schur_module(setup, shape)
            cert = certify_mcm(mod.presentation, setup, mod.shape)
            verdict = "MCM" if cert.passed else "NOT MCM"
            print(
                f"  (m,n,l)=({m},{n},{l}) shape={shape}: pd={cert.pd} "
                f"codim={cert.expected} -> {verdict} "
                f"[{time.time() - start:.1f}s]"
            )
        except Budget:
            print(f"  (m,n,l)=({m},{n},{l}) shape={shape}: SKIPPED (over {budget}s budget)")
        finally:
            signal.alarm(0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
