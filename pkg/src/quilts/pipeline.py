"""Orchestration of the structure-based enumeration, order by order.

For one order N the run walks every canonical plane triangulation, drops
the ones a structural test already rules out, enumerates transversal
structures on the survivors with the incremental equation hook attached,
and asks the realizer for a dissection per structure.  Distinct
dissections are kept up to the eight symmetries of the square; per-order
tallies (graphs considered and solved, structures, realized solutions,
reject reasons) are retained so published tables can be checked rather
than trusted.

Partitioned scans allow process pools; merging is deterministic, so the
counts never depend on the worker count.
"""

from __future__ import annotations

import logging
import multiprocessing
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from . import planemaps
from .dissection import (Dissection, EquationHook, canonicalize,
                         from_canonical, orbit_size, realize)
from .linsys import WIDTH_AUTO
from .sequences import CountTable, build_table
from .transversal import enumerate_structures

log = logging.getLogger(__name__)


@dataclass
class OrderResult:
    """Tallies and surviving dissections for one fully scanned order."""

    order: int
    graphs_considered: int = 0
    graphs_filtered: Dict[str, int] = field(default_factory=dict)
    graphs_solved: int = 0
    structures: int = 0
    solutions: int = 0
    rejects: Dict[str, int] = field(default_factory=dict)
    dissections: Tuple[Dissection, ...] = ()
    # graphs whose solutions realized more than one distinct dissection;
    # a cross admits two triangulations, so distinct graphs sharing one
    # dissection are normal, but one graph must stay single-valued
    collisions: int = 0
    # canonical dissection key -> least canonical code of a producing graph
    codes: Dict[bytes, bytes] = field(default_factory=dict, repr=False)

    @property
    def per_side(self) -> Dict[int, int]:
        out: Counter = Counter()
        for d in self.dissections:
            out[d.side] += 1
        return dict(out)

    @property
    def with_symmetry(self) -> int:
        """Dissections of this order in a fixed orientation: each symmetry
        class contributes its orbit size."""
        return sum(orbit_size(d) for d in self.dissections)

    @property
    def size_multiset_count(self) -> int:
        return len({tuple(sorted(d.sizes())) for d in self.dissections})

    @property
    def underdetermined(self) -> int:
        return self.rejects.get("underdetermined system", 0)


def scan_order(order: int,
               partition: Optional[Tuple[int, int]] = None,
               partition_depth: int = 5,
               width_mode: str = WIDTH_AUTO) -> OrderResult:
    """Scan one order (or one partition of it) in the current process."""
    res = OrderResult(order)
    filtered: Counter = Counter()
    rejects: Counter = Counter()
    canon: Dict[bytes, bytes] = {}
    for t in planemaps.generate(order, partition=partition,
                                partition_depth=partition_depth):
        res.graphs_considered += 1
        ok, reason = planemaps.structural_filter(t)
        if not ok:
            filtered[reason] += 1
            continue
        hook = EquationHook(order, width_mode=width_mode)
        keys_here = set()
        for s in enumerate_structures(t, hook=hook):
            res.structures += 1
            out = realize(s, system=hook.system)
            if not isinstance(out, Dissection):
                rejects[out.reason] += 1
                continue
            res.solutions += 1
            keys_here.add(canonicalize(out))
        if not keys_here:
            continue
        res.graphs_solved += 1
        if len(keys_here) > 1:
            res.collisions += 1
        code = planemaps.canonical_code(t)
        for key in keys_here:
            if key not in canon or code < canon[key]:
                canon[key] = code
    res.graphs_filtered = dict(filtered)
    res.rejects = dict(rejects)
    res.codes = canon
    res.dissections = tuple(from_canonical(key) for key in sorted(canon))
    return res


def _merge(parts: List[OrderResult]) -> OrderResult:
    res = OrderResult(parts[0].order)
    filtered: Counter = Counter()
    rejects: Counter = Counter()
    canon: Dict[bytes, bytes] = {}
    for part in parts:
        if part.order != res.order:
            raise ValueError("cannot merge results for different orders")
        res.graphs_considered += part.graphs_considered
        res.graphs_solved += part.graphs_solved
        res.structures += part.structures
        res.solutions += part.solutions
        res.collisions += part.collisions
        filtered.update(part.graphs_filtered)
        rejects.update(part.rejects)
        for key, code in part.codes.items():
            if key not in canon or code < canon[key]:
                canon[key] = code
    res.graphs_filtered = dict(filtered)
    res.rejects = dict(rejects)
    res.codes = canon
    res.dissections = tuple(from_canonical(key) for key in sorted(canon))
    return res


def _scan_args(args) -> OrderResult:
    return scan_order(*args)


def run_order(order: int, jobs: int = 1, partition_depth: int = 5,
              width_mode: str = WIDTH_AUTO) -> OrderResult:
    """Scan one order, optionally across a process pool.

    The partition merge is index-ordered, so the outcome is byte-for-byte
    identical whatever the worker count.
    """
    if jobs <= 1:
        res = scan_order(order, width_mode=width_mode)
    else:
        pieces = max(jobs * 4, 1)
        argv = [(order, (i, pieces), partition_depth, width_mode)
                for i in range(pieces)]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_scan_args, argv)
        res = _merge(parts)
    if res.underdetermined:
        log.warning("order %d: %d structures with underdetermined systems",
                    order, res.underdetermined)
    if res.collisions:
        log.error("order %d: %d graphs realized more than one dissection",
                  order, res.collisions)
    return res


def run_orders(order_max: int, jobs: int = 1,
               progress=None) -> List[OrderResult]:
    """Scan every order from 2 to order_max inclusive.

    Order 1 is left to the table builder, which injects the one-square
    tiling; the graph enumeration cannot represent it (its single vertex
    would touch both members of each opposite boundary pair).
    """
    out: List[OrderResult] = []
    for order in range(2, order_max + 1):
        res = run_order(order, jobs=jobs)
        out.append(res)
        if progress is not None:
            progress(res)
    return out


def count_table(order_max: int, jobs: int = 1, progress=None) -> CountTable:
    """End-to-end table of prime dissection counts for orders up to
    order_max."""
    return build_table(run_orders(order_max, jobs=jobs, progress=progress))
