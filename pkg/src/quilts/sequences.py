"""Aggregation of enumeration results into count tables and sequences.

A CountTable stores, per fully enumerated order, the prime-dissection
counts broken down by side, together with the with-symmetry totals and the
size-multiset counts.  Derived quantities (least order per side, greatest
side per order budget, and friends) refuse to answer when their truth
depends on orders that were never enumerated; callers see NotDetermined
instead of a silently wrong number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Set, Tuple


class NotDetermined(ValueError):
    """The enumerated bounds cannot settle the requested value."""


@dataclass
class CountTable:
    """Prime up-to-symmetry counts per (side, order) plus per-order totals.

    grid maps (n, N) to a count; absent keys are zero.  An order appears in
    enumerated_orders only when every dissection of that order has been
    generated, so zeros there are genuine zeros.
    """

    grid: Dict[Tuple[int, int], int] = field(default_factory=dict)
    order_totals: Dict[int, int] = field(default_factory=dict)
    with_symmetry: Dict[int, int] = field(default_factory=dict)
    size_multisets: Dict[int, int] = field(default_factory=dict)
    census: Dict[int, Dict[str, int]] = field(default_factory=dict)
    enumerated_orders: Set[int] = field(default_factory=set)

    def add_order(self, order: int, per_side: Dict[int, int],
                  with_symmetry: int, multiset_count: int) -> None:
        """Record one fully enumerated order."""
        if order in self.enumerated_orders:
            raise ValueError(f"order {order} recorded twice")
        for n, c in per_side.items():
            if c < 0:
                raise ValueError("negative count")
            if c:
                self.grid[(n, order)] = c
        self.order_totals[order] = sum(per_side.values())
        self.with_symmetry[order] = with_symmetry
        self.size_multisets[order] = multiset_count
        self.enumerated_orders.add(order)

    def order_max(self) -> int:
        """Largest M with every order 1..M enumerated."""
        m = 0
        while m + 1 in self.enumerated_orders:
            m += 1
        return m

    def require_orders(self, upto: int) -> None:
        if self.order_max() < upto:
            raise NotDetermined(
                f"orders 1..{upto} needed, enumerated only 1..{self.order_max()}")

    def count(self, n: int, order: int) -> int:
        if order not in self.enumerated_orders:
            raise NotDetermined(f"order {order} was not enumerated")
        return self.grid.get((n, order), 0)

    def side_counts(self, order: int) -> Dict[int, int]:
        if order not in self.enumerated_orders:
            raise NotDetermined(f"order {order} was not enumerated")
        return {n: c for (n, o), c in self.grid.items() if o == order}

    def sides_seen(self) -> List[int]:
        return sorted({n for n, _ in self.grid})

    def validate(self) -> None:
        """Raise ValueError on negative entries or marginal mismatches."""
        for key, c in self.grid.items():
            if c < 0:
                raise ValueError(f"negative count at {key}")
        for order in self.enumerated_orders:
            total = sum(c for (n, o), c in self.grid.items() if o == order)
            if total != self.order_totals.get(order, 0):
                raise ValueError(f"order {order} marginal mismatch")


def build_table(order_results: Iterable, include_trivial: bool = True) -> CountTable:
    """Assemble a CountTable from per-order pipeline summaries.

    The one-square tiling falls outside the graph enumeration (its vertex
    would neighbour opposite boundary sides), so the (n=1, order=1) entry
    is injected here to match the published sequence conventions.
    """
    table = CountTable()
    for res in order_results:
        table.add_order(res.order, dict(res.per_side), res.with_symmetry,
                        res.size_multiset_count)
    if include_trivial and 1 not in table.enumerated_orders:
        table.add_order(1, {1: 1}, 1, 1)
    table.validate()
    return table


def f_of_n(table: CountTable, n: int) -> int:
    """Least order of any prime dissection with side n."""
    limit = table.order_max()
    for order in range(1, limit + 1):
        if table.count(n, order):
            return order
    raise NotDetermined(
        f"no side-{n} dissection up to order {limit}; f({n}) > {limit} only")


def g_of_N(table: CountTable, order_budget: int) -> int:
    """Greatest side reachable with at most order_budget squares."""
    table.require_orders(order_budget)
    best = 0
    for (n, order) in table.grid:
        if order <= order_budget and n > best:
            best = n
    if best == 0:
        raise NotDetermined("no dissections recorded at all")
    return best


def least_edge_at_least(table: CountTable, order: int) -> int:
    """Least side whose cheapest prime dissection needs >= order squares."""
    if order > 1:
        table.require_orders(order - 1)
    bound = g_of_N(table, order - 1) + 1 if order > 1 else 1
    for n in range(1, bound + 1):
        if not any(table.count(n, o) for o in range(1, order)):
            return n
    raise AssertionError("a side above g(order-1) must qualify")


def smaller_squares_min(table: CountTable, n: int) -> int:
    """Fewest squares in any tiling of side n by strictly smaller squares.

    Every such tiling scales down to a prime dissection of a divisor, so
    the answer is the least f(d) over divisors d > 1 of n.
    """
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    if not divisors:
        raise NotDetermined("side 1 admits no smaller-square tiling")
    known = []
    open_ended = False
    for d in divisors:
        try:
            known.append(f_of_n(table, d))
        except NotDetermined:
            open_ended = True
    # An undetermined divisor still bounds its f below: nothing of that
    # side appeared up to order_max, so its f exceeds order_max.  A known
    # value at most order_max + 1 therefore settles the minimum.
    if known and (not open_ended or min(known) <= table.order_max() + 1):
        return min(known)
    raise NotDetermined(f"minimum for side {n} depends on unenumerated orders")


def order_sequences(table: CountTable, order_max: int) -> Dict[str, List[int]]:
    """Per-order sequence values for orders 1..order_max."""
    table.require_orders(order_max)
    rng = range(1, order_max + 1)
    return {
        "A221841": [table.order_totals[o] for o in rng],
        "A221842": [table.with_symmetry[o] for o in rng],
        "A232484": [table.size_multisets[o] for o in rng],
    }


BFILE = "bfile"
DELIMITED = "delimited"


def emit(name: str, values: Sequence[int], form: str = BFILE) -> str:
    """Render a sequence as OEIS b-file lines or name,index,value rows."""
    if form == BFILE:
        return "".join(f"{i} {v}\n" for i, v in enumerate(values, start=1))
    if form == DELIMITED:
        return "".join(f"{name},{i},{v}\n"
                       for i, v in enumerate(values, start=1))
    raise ValueError(f"unknown format {form!r}")


def parse_bfile(text: str) -> List[int]:
    """Inverse of emit(..., BFILE); validates the 1-based index column."""
    values = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, value = line.split()
        if int(idx) != len(values) + 1:
            raise ValueError(f"unexpected index {idx}")
        values.append(int(value))
    return values
