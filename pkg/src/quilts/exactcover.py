"""Independent tiling counts via exact cover over unit cells.

Tilings of an n-by-n board by integer squares are exact covers: columns
are the n*n unit cells and rows are all axis-aligned placements (x, y, k).
A second instance family quotients board and placements by a symmetry of
the square, so its covers biject with the tilings fixed by that symmetry;
Burnside's lemma then counts tilings up to symmetry without enumerating
them, and a Moebius sum over scale factors isolates the prime ones.  The
searches run on an array-backed dancing-links store with a choice of
column rule and an optional order-budget bound for windowed tables.

Everything here cross-checks the structure-based enumeration; nothing
feeds back into it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .dissection import TRANSFORMS, Dissection, canonicalize, is_prime, stabilizer
from .sequences import CountTable

Placement = Tuple[int, int, int]
RowSpec = Tuple[Tuple[Placement, ...], Tuple[int, ...]]  # (members, columns)

MRV = "mrv"
FIRST = "first"

SYMMETRY_NAMES = tuple(name for name, _ in TRANSFORMS)
_TRANSFORM = dict(TRANSFORMS)


@dataclass(frozen=True)
class ExactCoverInstance:
    """Column/row description of one tiling-as-cover problem.

    For the plain board (symmetry "e") columns are unit cells in row-major
    order and every row holds a single placement.  Under a symmetry g,
    columns are cell orbits and each row is a pairwise-disjoint orbit of
    placements, so one row may contribute several squares.
    """

    side: int
    symmetry: str
    columns: int
    rows: Tuple[RowSpec, ...]


def board_instance(n: int) -> ExactCoverInstance:
    """All placements of k-by-k squares, 1 <= k <= n, over n*n cells."""
    rows: List[RowSpec] = []
    for k in range(1, n + 1):
        for y in range(n - k + 1):
            for x in range(n - k + 1):
                cells = tuple(r * n + c + 1
                              for r in range(y, y + k)
                              for c in range(x, x + k))
                rows.append((((x, y, k),), cells))
    return ExactCoverInstance(n, "e", n * n, tuple(rows))


def _orbit(seed, apply_g) -> Tuple:
    out = [seed]
    nxt = apply_g(seed)
    while nxt != seed:
        out.append(nxt)
        nxt = apply_g(nxt)
    return tuple(out)


def symmetric_instance(n: int, g: str) -> ExactCoverInstance:
    """Cover instance whose solutions are the tilings fixed by symmetry g.

    Placement orbits whose members overlap can never appear in a g-fixed
    tiling and are dropped; a placement g maps to itself forms a singleton
    orbit (squares straddling a mirror axis or the centre).
    """
    fn = _TRANSFORM[g]
    if g == "e":
        return board_instance(n)

    def cell_apply(cell):
        return fn((cell[0], cell[1], 1), n)[:2]

    orbit_id: Dict[Tuple[int, int], int] = {}
    columns = 0
    for y in range(n):
        for x in range(n):
            if (x, y) in orbit_id:
                continue
            columns += 1
            for m in _orbit((x, y), cell_apply):
                orbit_id[m] = columns

    def place_apply(p):
        return fn(p, n)

    rows: List[RowSpec] = []
    seen = set()
    for k in range(1, n + 1):
        for y in range(n - k + 1):
            for x in range(n - k + 1):
                p = (x, y, k)
                if p in seen:
                    continue
                members = _orbit(p, place_apply)
                seen.update(members)
                cellsets = [frozenset((cx, cy)
                                      for cx in range(mx, mx + mk)
                                      for cy in range(my, my + mk))
                            for mx, my, mk in members]
                union: set = set()
                total = 0
                for cs in cellsets:
                    union |= cs
                    total += len(cs)
                if len(union) != total:
                    continue  # overlapping orbit: impossible in a fixed tiling
                cols = tuple(sorted({orbit_id[c] for c in union}))
                rows.append((tuple(members), cols))
    return ExactCoverInstance(n, g, columns, tuple(rows))


class _Links:
    """Array-backed dancing links; columns are 1..columns, 0 is the root."""

    def __init__(self, instance: ExactCoverInstance):
        width = instance.columns + 1
        self.left = [(i - 1) % width for i in range(width)]
        self.right = [(i + 1) % width for i in range(width)]
        self.up = list(range(width))
        self.down = list(range(width))
        self.col = list(range(width))
        self.row_of = [-1] * width
        self.size = [0] * width
        self.active = instance.columns
        for rid, (_, cols) in enumerate(instance.rows):
            first = None
            for c in cols:
                node = len(self.up)
                self.up.append(self.up[c])
                self.down.append(c)
                self.down[self.up[c]] = node
                self.up[c] = node
                self.col.append(c)
                self.row_of.append(rid)
                self.size[c] += 1
                if first is None:
                    first = node
                    self.left.append(node)
                    self.right.append(node)
                else:
                    self.left.append(self.left[first])
                    self.right.append(first)
                    self.right[self.left[first]] = node
                    self.left[first] = node

    def cover(self, c: int) -> None:
        left, right, up, down = self.left, self.right, self.up, self.down
        col, size = self.col, self.size
        right[left[c]] = right[c]
        left[right[c]] = left[c]
        self.active -= 1
        i = down[c]
        while i != c:
            j = right[i]
            while j != i:
                down[up[j]] = down[j]
                up[down[j]] = up[j]
                size[col[j]] -= 1
                j = right[j]
            i = down[i]

    def uncover(self, c: int) -> None:
        left, right, up, down = self.left, self.right, self.up, self.down
        col, size = self.col, self.size
        i = up[c]
        while i != c:
            j = left[i]
            while j != i:
                size[col[j]] += 1
                down[up[j]] = j
                up[down[j]] = j
                j = left[j]
            i = up[i]
        self.active += 1
        right[left[c]] = c
        left[right[c]] = c


def _search(links: _Links, on_solution, choose: str,
            bound: Optional[Callable[[int], bool]]) -> int:
    right, down, size, col = links.right, links.down, links.size, links.col
    row_of, left = links.row_of, links.left
    selected: List[int] = []
    count = 0

    def recurse() -> None:
        nonlocal count
        head = right[0]
        if head == 0:
            count += 1
            if on_solution is not None:
                on_solution(tuple(selected))
            return
        if bound is not None and not bound(len(selected)):
            return
        c = head
        if choose == MRV:
            best = size[c]
            j = right[c]
            while j != 0:
                if size[j] < best:
                    best, c = size[j], j
                j = right[j]
        if size[c] == 0:
            return
        links.cover(c)
        i = down[c]
        while i != c:
            selected.append(row_of[i])
            j = right[i]
            while j != i:
                links.cover(col[j])
                j = right[j]
            recurse()
            j = left[i]
            while j != i:
                links.uncover(col[j])
                j = left[j]
            selected.pop()
            i = down[i]
        links.uncover(c)

    recurse()
    return count


def solve_count(instance: ExactCoverInstance, visitor=None,
                choose: str = MRV) -> int:
    """Count exact covers, optionally visiting each one.

    The visitor receives the tiling as a tuple of (x, y, k) squares (orbit
    rows arrive expanded).  Visit order is deterministic for a fixed
    column rule.
    """
    links = _Links(instance)
    on_solution = None
    if visitor is not None:
        def on_solution(selected):
            squares: List[Placement] = []
            for rid in selected:
                squares.extend(instance.rows[rid][0])
            visitor(tuple(squares))
    return _search(links, on_solution, choose, None)


@lru_cache(maxsize=None)
def count_all(n: int) -> int:
    """Tilings of the n-by-n board in a fixed orientation."""
    return solve_count(board_instance(n))


def _mobius(m: int) -> int:
    out = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def count_fixed(n: int, g: str) -> int:
    """Tilings of side n fixed by the symmetry g."""
    if g == "e":
        return count_all(n)
    return solve_count(symmetric_instance(n, g))


def _mobius_sum(n: int, term: Callable[[int], int]) -> int:
    return sum(_mobius(d) * term(n // d) for d in range(1, n + 1) if n % d == 0)


def count_prime(n: int) -> int:
    """Tilings with coprime sizes: a scale-factor Moebius sum over all
    tilings (sizes all divisible by d biject with tilings of n/d)."""
    return _mobius_sum(n, count_all)


def count_up_to_symmetry(n: int, prime_only: bool = False,
                         method: str = "auto") -> int:
    """Orbit count of tilings under the eight symmetries of the square.

    method "burnside" averages fixed-point counts; "dedup" enumerates and
    canonicalizes (feasible for small n); "auto" picks burnside.  Both
    routes must agree wherever both run.
    """
    if method == "dedup":
        keys = set()
        for d in enumerate_tilings(n):
            if prime_only and not is_prime(d):
                continue
            keys.add(canonicalize(d))
        return len(keys)
    total = 0
    for g in SYMMETRY_NAMES:
        if prime_only:
            total += _mobius_sum(n, lambda m: count_fixed(m, g))
        else:
            total += count_fixed(n, g)
    if total % 8:
        raise AssertionError("Burnside sum must be divisible by the group order")
    return total // 8


def enumerate_tilings(n: int, order_cap: Optional[int] = None
                      ) -> Iterator[Dissection]:
    """Yield every tiling of side n, optionally only those with at most
    order_cap squares.

    The capped search fills cells top-left first; whenever the remaining
    budget of squares, each at most (n - y)**2 cells, cannot cover the
    uncovered area, the branch dies.  That keeps small-order windows
    affordable even where the full tiling count is out of reach.
    """
    instance = board_instance(n)
    links = _Links(instance)
    found: List[Dissection] = []

    def on_solution(selected):
        squares: List[Placement] = []
        for rid in selected:
            squares.extend(instance.rows[rid][0])
        found.append(Dissection(n, tuple(squares)))

    bound = None
    if order_cap is not None:
        def bound(used: int) -> bool:
            head = links.right[0]
            rest = n - (head - 1) // n
            return (order_cap - used) * rest * rest >= links.active

    _search(links, on_solution, FIRST, bound)
    return iter(found)


def stabilizer_census(n: int) -> Dict[str, int]:
    """Orbit counts per symmetry class over all tilings of side n."""
    census: Dict[str, int] = {}
    seen = set()
    for d in enumerate_tilings(n):
        key = canonicalize(d)
        if key in seen:
            continue
        seen.add(key)
        label = stabilizer(d)
        census[label] = census.get(label, 0) + 1
    return census


def crosscheck_table(n_max: int, N_max: int) -> CountTable:
    """Prime up-to-symmetry counts per (side, order) over a bounded window.

    Only the grid is populated: the window is complete in sides, not in
    orders, so order-derived quantities stay undetermined by design.
    """
    table = CountTable()
    for n in range(1, n_max + 1):
        seen = set()
        for d in enumerate_tilings(n, order_cap=N_max):
            if not is_prime(d):
                continue
            key = canonicalize(d)
            if key in seen:
                continue
            seen.add(key)
            table.grid[(n, d.order)] = table.grid.get((n, d.order), 0) + 1
    return table
