#!/usr/bin/env python3
"""Tally solutions per order under the two candidate counting
conventions and compare both against the published column.

A graph with a frame symmetry carries pairs of colourings that map to
each other when the square is rotated or reflected.  The raw count
treats those as distinct solutions; the orbit count collapses each
equivalence class to one.  Already at order 4 the two differ (the
four-square dissection has one graph, two colourings of its crossing
contact, one orbit), and the published column says 2, so the raw
convention is the one the pipeline freezes.
"""

import argparse
import math
import sys
from pathlib import Path

try:
    from quilts import planemaps
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from quilts import planemaps

from quilts.dissection import (Dissection, EquationHook, TRANSFORMS,
                               local_equations, realize, transformed)
from quilts.linsys import LinearSystem
from quilts.transversal import NS, WE, enumerate_structures

PUBLISHED = {4: 2, 5: 0, 6: 4, 7: 17, 8: 21, 9: 219}

# Quarter turns and diagonal reflections exchange the two colours.
SWAPS_COLOURS = {"e": False, "r": True, "r2": False, "r3": True,
                 "h": False, "v": False, "d": True, "a": True}


def placed_boxes(s):
    """Integer (x, y, size) per inner vertex, in vertex order."""
    order = s.base.order
    system = LinearSystem(3 * order)
    for coeffs, const in local_equations(s):
        system.add_equation(coeffs, const)
    values = system.solve().values
    scale = 1
    for v in values:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    return scale, tuple(
        (int(values[i] * scale), int(values[order + i] * scale),
         int(values[2 * order + i] * scale))
        for i in range(order))


def frame_signature(s, side, boxes) -> str:
    """Least encoding of the coloured contacts over the eight frames.

    Two structures are frame-equivalent exactly when their signatures
    match: the placed contact pairs pin the geometry and every edge's
    colour, and taking the minimum over the images removes the choice
    of frame.
    """
    contacts = [(colour, boxes[tail - 4], boxes[head - 4])
                for tail, head, colour in s.directed_edges()
                if tail >= 4 and head >= 4]
    best = None
    for name, _ in TRANSFORMS:
        swap = SWAPS_COLOURS[name]
        image = sorted(
            (WE if swap and colour == NS else NS if swap else colour,
             tuple(sorted(
                 transformed(Dissection(side, (box,)), name).squares[0]
                 for box in (a, b))))
            for colour, a, b in contacts)
        key = repr(image)
        if best is None or key < best:
            best = key
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order-max", type=int, default=8)
    args = ap.parse_args(argv)

    print("order  raw  orbits  published")
    agree_raw = agree_orbit = True
    for order in range(4, args.order_max + 1):
        raw = 0
        orbits = set()
        for t in planemaps.generate(order):
            ok, _ = planemaps.structural_filter(t)
            if not ok:
                continue
            code = None
            for s in enumerate_structures(
                    t, hook=EquationHook(order)):
                out = realize(s)
                if not isinstance(out, Dissection):
                    continue
                raw += 1
                if code is None:
                    code = planemaps.canonical_code(t)
                side, boxes = placed_boxes(s)
                orbits.add((code, frame_signature(s, side, boxes)))
        published = PUBLISHED.get(order)
        print("%5d  %3d  %6d  %s"
              % (order, raw, len(orbits),
                 "?" if published is None else published))
        if published is not None:
            agree_raw &= raw == published
            agree_orbit &= len(orbits) == published
    for name, flag in (("raw", agree_raw), ("orbit", agree_orbit)):
        print("%s convention %s the published column"
              % (name, "matches" if flag else "does not match"))
    return 0 if agree_raw else 1


if __name__ == "__main__":
    raise SystemExit(main())
