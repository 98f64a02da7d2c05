#!/usr/bin/env python3
"""Run the full verification grid and print a JSON report.

Equivalent to `detlab suite --profile full --json`, kept as a script so the
grid is easy to tweak for experiments (edit the profile lists in
detlab.suite).
"""

import json
import sys
import time

from detlab.suite import run_suite


def main() -> int:
    profile = sys.argv[1] if len(sys.argv) > 1 else "full"
    start = time.time()
    result = run_suite(profile)
    result["wall_time_s"] = round(time.time() - start, 2)
    print(json.dumps(result, indent=2))
    return 0 if result["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
