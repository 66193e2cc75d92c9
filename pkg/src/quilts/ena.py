"""Electrical-network reading of a dissection, used as a test oracle.

A vertical scan turns a dissection into a small network: nodes are the
maximal horizontal lines (each extended as far west and east as the
drawing allows), and every subsquare is an edge from its top line to its
bottom line.  Solving the network equations with unit "conductance" per
edge recovers each line's normalized height as a node potential, and each
inner node balances the sizes of the squares ending and starting there.
verify() checks both facts against the dissection. The scan never feeds
back into enumeration; it is an independent check of realized output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .dissection import Dissection
from .linsys import INCONSISTENT, LinearSystem, Underdetermined

Node = Tuple[int, int, int]  # (y, west end, east end)


@dataclass(frozen=True)
class ENAGraph:
    """Nodes top-to-bottom and one (top, bottom) node pair per subsquare."""

    side: int
    nodes: Tuple[Node, ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def incidence(self) -> List[List[int]]:
        """Rows per node: +1 where the node tops an edge, -1 where it
        bottoms one."""
        rows = [[0] * len(self.edges) for _ in self.nodes]
        for r, (top, bottom) in enumerate(self.edges):
            rows[top][r] = 1
            rows[bottom][r] = -1
        return rows

    def conductance(self) -> List[List[int]]:
        """j = i i^T; symmetric, diagonal holding node degrees."""
        inc = self.incidence()
        m = len(inc)
        return [[sum(inc[a][r] * inc[b][r] for r in range(len(self.edges)))
                 for b in range(m)] for a in range(m)]


def _merged_lines(d: Dissection) -> List[Node]:
    segments: dict = {}
    for x, y, s in d.squares:
        segments.setdefault(y, []).append((x, x + s))
        segments.setdefault(y + s, []).append((x, x + s))
    nodes = []
    for y in sorted(segments):
        spans = sorted(segments[y])
        lo, hi = spans[0]
        for a, b in spans[1:]:
            if a > hi:
                nodes.append((y, lo, hi))
                lo, hi = a, b
            else:
                hi = max(hi, b)
        nodes.append((y, lo, hi))
    return nodes


def vertical_scan(d: Dissection) -> ENAGraph:
    """Build the node/edge network of a dissection's horizontal lines."""
    nodes = _merged_lines(d)
    index = {}
    for k, (y, lo, hi) in enumerate(nodes):
        for x in range(lo, hi):
            index[(y, x)] = k
    edges = tuple((index[(y, x)], index[(y + s, x)]) for x, y, s in d.squares)
    return ENAGraph(d.side, tuple(nodes), edges)


def solve_potentials(g: ENAGraph) -> Tuple[Fraction, ...]:
    """Exact node potentials with the top line at 0 and the bottom at 1.

    The first and last nodes are pinned; every other row of j p = 0 is
    imposed exactly.  Raises ValueError if the system fails to determine
    all potentials, which a valid dissection never produces.
    """
    m = g.node_count
    sys = LinearSystem(m)
    top = [0] * m
    top[0] = 1
    if sys.add_equation(top, 0) == INCONSISTENT:
        raise ValueError("singular potential system")
    bottom = [0] * m
    bottom[m - 1] = 1
    if sys.add_equation(bottom, 1) == INCONSISTENT:
        raise ValueError("singular potential system")
    j = g.conductance()
    for h in range(1, m - 1):
        if sys.add_equation(j[h], 0) == INCONSISTENT:
            raise ValueError("singular potential system")
    solution = sys.solve()
    if isinstance(solution, Underdetermined):
        raise ValueError("singular potential system")
    return solution.values


def verify(d: Dissection) -> Tuple[bool, Optional[str]]:
    """Check a dissection against its own network reading.

    Passes when the solved potentials equal every line's y coordinate
    divided by the side, and when each inner node's incoming sizes (squares
    ending on the line) balance its outgoing sizes (squares starting there).

    Returns:
        (True, None) on pass, else (False, reason).
    """
    try:
        d.validate()
    except ValueError as err:
        return False, str(err)
    g = vertical_scan(d)
    try:
        p = solve_potentials(g)
    except ValueError as err:
        return False, str(err)
    for (y, _, _), value in zip(g.nodes, p):
        if value != Fraction(y, d.side):
            return False, f"potential {value} differs from line height {y}/{d.side}"
    m = g.node_count
    into = [0] * m
    out = [0] * m
    for (top, bottom), (_, _, s) in zip(g.edges, d.squares):
        out[top] += s
        into[bottom] += s
    if into[0] or out[m - 1]:
        return False, "top or bottom line is not extremal"
    for h in range(m):
        lo, hi = g.nodes[h][1], g.nodes[h][2]
        expect = hi - lo
        if h != 0 and into[h] != expect:
            return False, f"node {h} in-sizes {into[h]} != line length {expect}"
        if h != m - 1 and out[h] != expect:
            return False, f"node {h} out-sizes {out[h]} != line length {expect}"
    return True, None
