#!/usr/bin/env python3
"""Scan order 12 and check the result row against the published counts.

This is the stretch run: 594236 graphs, roughly two hours on one core
(scaling is about ten-fold per order).  Use --jobs on a multicore box.
The test suite runs the same numbers when QUILTS_STRETCH=1 is set; this
script is the standalone version with progress output.
"""

import argparse
import sys
import time
from pathlib import Path

try:
    from quilts import pipeline
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from quilts import pipeline

EXPECTED = {"graphs_considered": 594236, "graphs_solved": 1584,
            "solutions": 8637, "dissections": 657}
# Dissections per side at order 12.
EXPECTED_SIDES = {6: 28, 7: 42, 8: 13, 9: 25, 10: 13, 11: 67,
                  12: 176, 13: 162, 14: 93, 15: 27, 16: 9, 17: 2}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)

    print("scanning order 12 with %d worker(s); expect hours"
          % args.jobs, file=sys.stderr)
    t0 = time.monotonic()
    r = pipeline.run_order(12, jobs=args.jobs)
    elapsed = time.monotonic() - t0

    got = {"graphs_considered": r.graphs_considered,
           "graphs_solved": r.graphs_solved,
           "solutions": r.solutions,
           "dissections": len(r.dissections)}
    failures = 0
    for name, want in EXPECTED.items():
        mark = "ok" if got[name] == want else "MISMATCH"
        failures += got[name] != want
        print("%-18s %8d  (expected %8d)  %s"
              % (name, got[name], want, mark))
    if r.per_side != EXPECTED_SIDES:
        failures += 1
        print("per-side MISMATCH: %r" % (r.per_side,))
    else:
        print("per-side counts match for all %d sides"
              % len(EXPECTED_SIDES))
    if r.collisions:
        failures += 1
        print("COLLISIONS: %d graphs realized more than one dissection"
              % r.collisions)
    print("elapsed %.0fs" % elapsed)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
