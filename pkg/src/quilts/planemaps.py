"""Imbedded triangulations of a four-sided disk.

A dissection graph candidate is a simple plane graph whose outer face is a
fixed 4-cycle of cardinal vertices and whose every inner face is a
triangle, with minimum degree 4.  The generator produces exactly one
representative per isomorphism class, where isomorphisms may rotate and
reflect the outer cycle.

Vertex numbering convention: 0..3 are the cardinal vertices in clockwise
outer-cycle order (North, East, South, West), inner vertices are 4 onward.
Rotation lists are clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

OUTER_CYCLE = (0, 1, 2, 3)

# The eight images of the directed outer edge (0, 1) under the symmetries
# of the square: four rotations, then four reflections (reversed reading).
_CODE_ROOTS = (
    (0, 1, False), (1, 2, False), (2, 3, False), (3, 0, False),
    (1, 0, True), (0, 3, True), (3, 2, True), (2, 1, True),
)

REJECT_OPPOSITE_CARDINAL_EDGE = "opposite-cardinal-edge"
REJECT_OPPOSITE_PAIR_ATTACHMENT = "attached-to-opposite-cardinals"
REJECT_CORNER_COUNT = "corner-count"
REJECT_SEPARATING_TRIANGLE = "separating-triangle"

FILTER_REASONS = (
    REJECT_OPPOSITE_CARDINAL_EDGE,
    REJECT_OPPOSITE_PAIR_ATTACHMENT,
    REJECT_CORNER_COUNT,
    REJECT_SEPARATING_TRIANGLE,
)


@dataclass(frozen=True)
class PlaneTriangulation:
    """Combinatorial map of one disk triangulation.

    Attributes:
        order: Number of inner vertices (the prospective subsquares).
        rotations: Clockwise neighbour list per vertex.  Outer vertices
            0..3 have linear rotations running from the next outer vertex
            around to the previous one; inner rotations are cyclic.
        outer_cycle: Always (0, 1, 2, 3); kept explicit for consumers.
    """

    order: int
    rotations: tuple
    outer_cycle: tuple = OUTER_CYCLE

    @property
    def vertex_count(self) -> int:
        return self.order + 4

    def adjacency(self) -> list:
        return [frozenset(rot) for rot in self.rotations]

    def edges(self) -> list:
        """All undirected edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u, rot in enumerate(self.rotations):
            for v in rot:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def faces(self) -> list:
        """Every face as a tuple of vertices, traced clockwise.

        The rule follows the face lying to the right of each directed
        edge; exactly one traced face is the outer 4-gon.
        """
        rotations = self.rotations
        seen = set()
        faces = []
        for u, rot in enumerate(rotations):
            for v in rot:
                if (u, v) in seen:
                    continue
                cycle = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    cycle.append(a)
                    nrot = rotations[b]
                    i = nrot.index(a)
                    a, b = b, nrot[(i + 1) % len(nrot)]
                faces.append(tuple(cycle))
        return faces

    def inner_faces(self) -> list:
        return [f for f in self.faces() if len(f) == 3]


def canonical_code(t: PlaneTriangulation) -> bytes:
    """Minimal breadth-first code over the eight outer-cycle rootings."""
    return min(_rooted_code(t.rotations, a, b, rev)
               for a, b, rev in _CODE_ROOTS)


def is_canonical(t: PlaneTriangulation) -> bool:
    """True when the stored rooting already attains the canonical code."""
    own = _rooted_code(t.rotations, 0, 1, False)
    return own == canonical_code(t)


def _rooted_code(rotations, a: int, b: int, reverse: bool) -> bytes:
    """Breadth-first code rooted at directed edge a->b.

    reverse reads every rotation backwards, which corresponds to an
    orientation-reversing (mirror) symmetry.  Two rooted maps produce the
    same byte string exactly when they are isomorphic as rooted maps.
    """
    lab = {a: 1, b: 2}
    order = [a, b]
    entry = {a: b, b: a}
    out = bytearray()
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        rot = rotations[v]
        if reverse:
            rot = rot[::-1]
        d = len(rot)
        i = rot.index(entry[v])
        for step in range(d):
            w = rot[(i + step) % d]
            l = lab.get(w)
            if l is None:
                order.append(w)
                l = len(order)
                lab[w] = l
                entry[w] = v
            out.append(l)
        out.append(0)
    return bytes(out)


def generate(order: int,
             partition: Optional[tuple] = None,
             partition_depth: int = 5) -> Iterator[PlaneTriangulation]:
    """Yield one disk triangulation per isomorphism class.

    The search fills the square region one triangle at a time, always at
    the first edge of the most recent open region, branching over the
    apex: a fresh interior vertex, or any other region-boundary vertex.
    Each rooted map is reached exactly once; a map is emitted only when
    its own rooting attains the minimal code, so the stream is
    duplicate-free without shared state.

    Args:
        order: Number of inner vertices; must be >= 1.
        partition: Optional (index, total) work split.  Workers walking
            different indices emit disjoint sets whose union is the full
            stream; the split happens at search depth partition_depth.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if partition is None:
        part_index, part_total = 0, 1
    else:
        part_index, part_total = partition
        if not (0 <= part_index < part_total):
            raise ValueError("bad partition %r" % (partition,))

    nv = order + 4
    adj = [set() for _ in range(nv)]
    for i in range(4):
        j = (i + 1) % 4
        adj[i].add(j)
        adj[j].add(i)
    triangles = []
    regions = [(0, 1, 2, 3)]
    # membership[v] = number of open regions whose boundary contains v.
    # A vertex whose count drops to zero is finished and must have final
    # degree at least 4, which prunes most hopeless branches early.
    membership = [1, 1, 1, 1] + [0] * order
    # Mutable counters: [next free vertex id, depth-partition tally].
    state = [4, 0]

    def fill(budget: int, depth: int):
        if part_total > 1 and depth == partition_depth:
            state[1] += 1
            if (state[1] - 1) % part_total != part_index:
                return
        if not regions:
            if budget == 0 and (part_total == 1 or part_index == 0
                                or depth >= partition_depth):
                t = _finish(order, nv, triangles, adj)
                if t is not None:
                    yield t
            return
        region = regions.pop()
        k = len(region)
        b0 = region[0]
        b1 = region[1]

        if budget > 0:
            x = state[0]
            state[0] += 1
            adj[b0].add(x)
            adj[x].add(b0)
            adj[b1].add(x)
            adj[x].add(b1)
            triangles.append((b0, b1, x))
            regions.append((b0, x) + region[1:])
            membership[x] = 1
            yield from fill(budget - 1, depth + 1)
            membership[x] = 0
            regions.pop()
            triangles.pop()
            adj[b0].discard(x)
            adj[x].clear()
            adj[b1].discard(x)
            state[0] -= 1

        for i in range(2, k):
            apex = region[i]
            chord1 = i > 2          # (b1, apex) is a fresh chord
            chord2 = i < k - 1      # (b0, apex) is a fresh chord
            # The outer 4-cycle must stay chordless: an edge between
            # opposite cardinals never bounds a 4-sided disk triangulation.
            if apex < 4:
                if chord1 and b1 < 4 and abs(b1 - apex) == 2:
                    continue
                if chord2 and b0 < 4 and abs(b0 - apex) == 2:
                    continue
            if chord1 and apex in adj[b1]:
                continue
            if chord2 and apex in adj[b0]:
                continue
            if chord1:
                adj[b1].add(apex)
                adj[apex].add(b1)
            if chord2:
                adj[b0].add(apex)
                adj[apex].add(b0)
            triangles.append((b0, b1, apex))
            pushed = 0
            finished = []
            if chord2:
                regions.append(region[i:] + (b0,))
                pushed += 1
            else:
                finished.append(b0)
            if chord1:
                regions.append(region[1:i + 1])
                pushed += 1
            else:
                finished.append(b1)
            membership[apex] += pushed - 1
            for v in finished:
                membership[v] -= 1
            ok = membership[apex] > 0 or len(adj[apex]) >= 4
            if ok:
                for v in finished:
                    if membership[v] == 0 and len(adj[v]) < 4:
                        ok = False
                        break
            if ok:
                yield from fill(budget, depth + 1)
            for v in finished:
                membership[v] += 1
            membership[apex] -= pushed - 1
            for _ in range(pushed):
                regions.pop()
            triangles.pop()
            if chord1:
                adj[b1].discard(apex)
                adj[apex].discard(b1)
            if chord2:
                adj[b0].discard(apex)
                adj[apex].discard(b0)

        regions.append(region)

    yield from fill(order, 0)


def _finish(order, nv, triangles, adj) -> Optional[PlaneTriangulation]:
    """Assemble rotations for a completed fill and keep canonical ones."""
    succ = {}
    for p, q, r in triangles:
        succ[(p, q)] = r
        succ[(q, r)] = p
        succ[(r, p)] = q
    rotations = []
    for v in range(nv):
        if v < 4:
            start = (v + 1) % 4
        else:
            start = min(adj[v])
        rot = [start]
        w = succ.get((v, start))
        while w is not None and w != start:
            rot.append(w)
            w = succ.get((v, w))
        if len(rot) != len(adj[v]):
            raise AssertionError("rotation build mismatch at vertex %d" % v)
        rotations.append(tuple(rot))
    rotations = tuple(rotations)
    own = _rooted_code(rotations, 0, 1, False)
    for a, b, rev in _CODE_ROOTS[1:]:
        if _code_precedes(rotations, a, b, rev, own):
            return None
    return PlaneTriangulation(order, rotations)


def _code_precedes(rotations, a, b, reverse, ref: bytes) -> bool:
    """True when the (a, b, reverse) rooted code is lexicographically
    smaller than ref.  Streams the code and stops at the first byte that
    differs, which settles almost every comparison within a few bytes."""
    lab = {a: 1, b: 2}
    order = [a, b]
    entry = {a: b, b: a}
    pos = 0
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        rot = rotations[v]
        if reverse:
            rot = rot[::-1]
        d = len(rot)
        i = rot.index(entry[v])
        for step in range(d):
            w = rot[(i + step) % d]
            l = lab.get(w)
            if l is None:
                order.append(w)
                l = len(order)
                lab[w] = l
                entry[w] = v
            r = ref[pos]
            pos += 1
            if l != r:
                return l < r
        if ref[pos]:
            return True
        pos += 1
    return False


def structural_filter(t: PlaneTriangulation):
    """Check the colour-independent dissection-graph properties.

    Returns:
        (True, None) for graphs that may represent a dissection, else
        (False, reason) with reason drawn from FILTER_REASONS.
    """
    adj = t.adjacency()
    if 2 in adj[0] or 3 in adj[1]:
        return False, REJECT_OPPOSITE_CARDINAL_EDGE
    for v in range(4, t.vertex_count):
        a = adj[v]
        if (0 in a and 2 in a) or (1 in a and 3 in a):
            return False, REJECT_OPPOSITE_PAIR_ATTACHMENT
    for c1, c2 in ((0, 1), (1, 2), (2, 3), (3, 0)):
        corners = sum(1 for v in range(4, t.vertex_count)
                      if c1 in adj[v] and c2 in adj[v])
        if corners != 1:
            return False, REJECT_CORNER_COUNT
    faces = {frozenset(f) for f in t.inner_faces()}
    for u, v in t.edges():
        for w in adj[u] & adj[v]:
            if w > v and frozenset((u, v, w)) not in faces:
                return False, REJECT_SEPARATING_TRIANGLE
    return True, None


def dump(t: PlaneTriangulation) -> str:
    """One-line debug form: `order; outer cycle; rotations`.

    Rotation lists appear in vertex order separated by ` | `, each as the
    clockwise neighbour ids separated by spaces.
    """
    outer = " ".join(str(v) for v in t.outer_cycle)
    rots = " | ".join(" ".join(str(w) for w in rot) for rot in t.rotations)
    return "%d; %s; %s" % (t.order, outer, rots)
