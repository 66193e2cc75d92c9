#!/usr/bin/env python3
"""Run the whole pipeline up to a chosen order and print the headline
tables: per-order tallies, the side-by-order grid, the exact-cover
crosscheck of that grid, and the derived least-order/greatest-side
tables.

Order 11 takes around five minutes on one core; the default of 9 gives
a quick run.  Pass --jobs to spread the scan over worker processes.
"""

import argparse
import sys
import time
from pathlib import Path

try:
    from quilts import exactcover, pipeline, sequences
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from quilts import exactcover, pipeline, sequences


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order-max", type=int, default=9)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)

    t0 = time.monotonic()
    results = pipeline.run_orders(
        args.order_max, jobs=args.jobs,
        progress=lambda r: print("  scanned order %d (%d graphs)"
                                 % (r.order, r.graphs_considered),
                                 file=sys.stderr))
    table = sequences.build_table(results)
    elapsed = time.monotonic() - t0

    print("order  considered  solved  structures  solutions  dissections")
    for r in results:
        print("%5d  %10d  %6d  %10d  %9d  %11d"
              % (r.order, r.graphs_considered, r.graphs_solved,
                 r.structures, r.solutions, len(r.dissections)))
    print()

    orders = sorted(table.enumerated_orders)
    sides = table.sides_seen()
    print("side\\order  " + "  ".join("%4d" % o for o in orders))
    for n in sides:
        row = [("%4d" % table.grid[(n, o)]) if (n, o) in table.grid
               else "   ." for o in orders]
        print("%10d  " % n + "  ".join(row))
    print()

    side_cap = min(8, sequences.g_of_N(table, table.order_max()))
    cover = exactcover.crosscheck_table(side_cap, table.order_max())
    window = {cell: v for cell, v in table.grid.items()
              if cell[0] <= side_cap}
    status = "agree" if window == cover.grid else "DISAGREE"
    print("exact-cover crosscheck (sides <= %d): %d cells, %s"
          % (side_cap, len(cover.grid), status))
    print()

    print("n  least order")
    for n in range(1, sequences.g_of_N(table, table.order_max()) + 1):
        print("%d  %d" % (n, sequences.f_of_n(table, n)))
    print()
    print("order  greatest side")
    for order in range(1, table.order_max() + 1):
        print("%5d  %d" % (order, sequences.g_of_N(table, order)))
    print()
    print("done in %.1fs" % elapsed)
    return 0 if status == "agree" else 1


if __name__ == "__main__":
    raise SystemExit(main())
