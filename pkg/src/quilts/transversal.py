"""Edge colourings and orientations that encode square contacts.

Each inner vertex of an accepted disk triangulation stands for a subsquare
and each edge for a contact between two sides.  Edges are coloured
North-South or West-East and directed (north-of, west-of).  Two local rules
pin the global shape: around every inner vertex the incident edges must
form, in rotation order, four nonempty blocks (NS in, WE out, NS out,
WE in), and inside every triangle exactly two edges share a colour and
those two either both enter or both leave their shared vertex.

enumerate_structures performs the exhaustive backtracking search over the
remaining freedom once the cardinal-incident edges and the boundary chains
are pinned by convention.  An optional equation-feedback hook can veto
partial assignments that are already algebraically inconsistent; hooks only
prune, they never change the set of yielded structures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .planemaps import PlaneTriangulation

NS = "NS"
WE = "WE"

NORTH, EAST, SOUTH, WEST = range(4)
CARDINAL_LABELS = ("N", "E", "S", "W")

# Edge states.  Edges are stored as ordered pairs (u, v) with u < v; FWD
# means the tail is u.  A NS edge points from the northern square to the
# southern one, a WE edge from the western square to the eastern one.
UNSET = 0
NS_FWD, NS_BWD, WE_FWD, WE_BWD = 1, 2, 3, 4

_COLOUR = (None, NS, NS, WE, WE)
_TAIL_IS_U = (False, True, False, True, False)
# Swap the endpoints' roles; used to read a state relative to a face cycle.
_FLIP = (0, 2, 1, 4, 3)

# How an edge looks from one endpoint: the four block kinds in the clockwise
# order they must appear around an inner vertex.
L_NS_IN, L_WE_OUT, L_NS_OUT, L_WE_IN = 1, 2, 3, 4
# state -> (view from u, view from v)
_LOCAL = ((0, 0),
          (L_NS_OUT, L_NS_IN),
          (L_NS_IN, L_NS_OUT),
          (L_WE_OUT, L_WE_IN),
          (L_WE_IN, L_WE_OUT))


@dataclass(frozen=True)
class TransversalStructure:
    """A (possibly partial) colouring and orientation of a triangulation.

    Attributes:
        base: the underlying disk triangulation.
        cardinals: compass labels of the four outer vertices, in index order.
        edges: the base's undirected edges as (u, v) pairs with u < v.
        states: per-edge state code, aligned with edges; 0 means unassigned.
    """

    base: PlaneTriangulation
    cardinals: Tuple[str, str, str, str]
    edges: Tuple[Tuple[int, int], ...]
    states: Tuple[int, ...]

    def colour(self, edge_id: int) -> Optional[str]:
        return _COLOUR[self.states[edge_id]]

    def direction(self, edge_id: int) -> Optional[Tuple[int, int]]:
        s = self.states[edge_id]
        if s == UNSET:
            return None
        u, v = self.edges[edge_id]
        return (u, v) if _TAIL_IS_U[s] else (v, u)

    @property
    def edge_colour(self) -> Tuple[Optional[str], ...]:
        return tuple(_COLOUR[s] for s in self.states)

    @property
    def edge_direction(self) -> Tuple[Optional[Tuple[int, int]], ...]:
        return tuple(self.direction(i) for i in range(len(self.edges)))

    def is_complete(self) -> bool:
        return UNSET not in self.states

    def directed_edges(self):
        """Yield (tail, head, colour) for every assigned edge."""
        for i, s in enumerate(self.states):
            if s != UNSET:
                u, v = self.edges[i]
                tail, head = (u, v) if _TAIL_IS_U[s] else (v, u)
                yield tail, head, _COLOUR[s]


@lru_cache(maxsize=None)
def _word_satisfiable(word: Tuple[int, ...]) -> bool:
    """Wildcard cyclic match against NS-in+ WE-out+ NS-out+ WE-in+.

    word holds the local view codes of a vertex's incident edges in
    rotation order, 0 standing for an unassigned edge.  Exact: True iff
    some completion of the wildcards matches the four-block pattern.
    """
    d = len(word)
    if d < 4:
        return False
    for start in range(d):
        if word[start] not in (0, 1):
            continue
        reach = 2  # bitmask of reachable blocks; start consumed block 1
        for k in range(1, d):
            c = word[(start + k) % d]
            nxt = 0
            for b in (1, 2, 3, 4) if c == 0 else (c,):
                if reach & ((1 << b) | (1 << (b - 1))):
                    nxt |= 1 << b
            reach = nxt & 0b11110
            if not reach:
                break
        else:
            if reach & 0b10000:
                return True
    return False


def _complete_face_ok(tri: Tuple[int, int, int]) -> bool:
    # tri holds states read along the face cycle (FWD = with the cycle).
    ns = tuple(s <= 2 for s in tri)
    if ns[0] == ns[1] == ns[2]:
        return False
    for i in range(3):
        j = (i + 1) % 3
        if ns[i] == ns[j]:
            # The shared vertex is the meeting point of edges i and j along
            # the cycle; "both toward or both away" reduces to opposite
            # cycle-senses.
            return (tri[i] in (1, 3)) != (tri[j] in (1, 3))
    raise AssertionError("unreachable")


def _build_face_table() -> dict:
    table = {}
    for key in itertools.product(range(5), repeat=3):
        options = [(s,) if s else (1, 2, 3, 4) for s in key]
        table[key] = any(_complete_face_ok(t)
                         for t in itertools.product(*options))
    return table


_FACE_OK = _build_face_table()


def _edge_index(s: TransversalStructure) -> dict:
    return {e: i for i, e in enumerate(s.edges)}


def vertex_condition(s: TransversalStructure, v: int) -> bool:
    """True unless no completion of v's unassigned incident edges can
    satisfy the four-block rule.  Exact for any partial assignment."""
    if v < 4:
        raise ValueError("cardinal vertices carry no block condition")
    eidx = _edge_index(s)
    word = []
    for w in s.base.rotations[v]:
        i = eidx[(v, w) if v < w else (w, v)]
        word.append(_LOCAL[s.states[i]][0 if v < w else 1])
    return _word_satisfiable(tuple(word))


def triangle_condition(s: TransversalStructure, face: Tuple[int, int, int]) -> bool:
    """True unless no completion of the face's unassigned edges satisfies
    the two-same-coloured rule with a consistent shared-vertex sense."""
    eidx = _edge_index(s)
    key = []
    for p, q in ((face[0], face[1]), (face[1], face[2]), (face[2], face[0])):
        i = eidx[(p, q) if p < q else (q, p)]
        st = s.states[i]
        key.append(st if p < q else _FLIP[st])
    return _FACE_OK[tuple(key)]


def rotate_cardinals(t: PlaneTriangulation, quarter_turns: int) -> PlaneTriangulation:
    """Relabel the boundary so a different outer vertex plays North.

    The four admissible compass labelings of one embedding are its four
    boundary rotations; this helper lets callers compare tallies across
    them (the reported counts use the fixed labeling).
    """
    k = quarter_turns % 4
    perm = list(range(t.vertex_count))
    for c in range(4):
        perm[c] = (c - k) % 4
    rots: list = [None] * t.vertex_count
    for v, row in enumerate(t.rotations):
        rots[perm[v]] = tuple(perm[w] for w in row)
    return PlaneTriangulation(t.order, tuple(rots), t.outer_cycle)


def enumerate_structures(t: PlaneTriangulation, hook=None,
                         stats: Optional[dict] = None
                         ) -> Iterator[TransversalStructure]:
    """Yield every complete valid edge colouring/orientation of t.

    Cardinal-incident edges, the four boundary edges and the chains linking
    each cardinal's inner neighbours are pinned first; the remaining edges
    are assigned in breadth-first order from the North vertex, colour
    before direction, re-checking only the vertices and faces the new edge
    touches.  Yields are complete structures under the fixed compass
    labeling of the outer cycle.

    Args:
        t: a triangulation accepted by structural_filter.
        hook: optional equation feedback with methods start(partial) -> bool,
            assign(edge_id, tail, head, colour) -> bool and unassign();
            assign is always balanced by unassign.  A False veto prunes the
            branch.  Hooks must restore their state exactly on unassign.
        stats: optional dict collecting search counters.

    Yields:
        TransversalStructure instances with all edges assigned.
    """
    rot = [list(r) for r in t.rotations]
    for c in range(4):
        i = rot[c].index((c + 1) % 4)
        rot[c] = rot[c][i:] + rot[c][:i]
        if rot[c][-1] != (c - 1) % 4:
            raise ValueError("outer rotation does not frame the boundary")

    edges = tuple(t.edges())
    eidx = {e: i for i, e in enumerate(edges)}
    ne = len(edges)
    states = [UNSET] * ne
    adj = t.adjacency()

    def eid(a: int, b: int) -> int:
        return eidx[(a, b) if a < b else (b, a)]

    def pin(tail: int, head: int, colour: str) -> bool:
        i = eid(tail, head)
        fwd = tail < head
        if colour == NS:
            s = NS_FWD if fwd else NS_BWD
        else:
            s = WE_FWD if fwd else WE_BWD
        if states[i] not in (UNSET, s):
            return False
        states[i] = s
        return True

    ok = pin(NORTH, EAST, NS) and pin(NORTH, WEST, NS) \
        and pin(EAST, SOUTH, NS) and pin(WEST, SOUTH, NS)
    # Cardinal-to-square edges: away from North and West, towards South
    # and East.
    for c, colour, outgoing in ((NORTH, NS, True), (SOUTH, NS, False),
                                (WEST, WE, True), (EAST, WE, False)):
        for w in rot[c][1:-1]:
            ok = ok and (pin(c, w, colour) if outgoing else pin(w, c, colour))
    # Each cardinal's inner neighbours form a chain along the boundary;
    # rotation order at North runs east to west, so the west-to-east WE
    # chain links each neighbour to its predecessor.  Mirrored elsewhere.
    for c, colour, backward in ((NORTH, WE, True), (SOUTH, WE, False),
                                (WEST, NS, False), (EAST, NS, True)):
        row = rot[c][1:-1]
        for a, b in zip(row, row[1:]):
            if b not in adj[a]:
                raise ValueError("boundary neighbours must be chained")
            ok = ok and (pin(b, a, colour) if backward else pin(a, b, colour))
        for i in range(len(row)):
            for j in range(i + 2, len(row)):
                if row[j] in adj[row[i]]:
                    return  # a chord between chain squares: nothing fits
    if not ok:
        return

    inc = []
    for v in range(t.vertex_count):
        inc.append(tuple((eid(v, w), 0 if v < w else 1) for w in rot[v]))

    def vertex_ok(v: int) -> bool:
        word = tuple(_LOCAL[states[i]][side] for i, side in inc[v])
        return _word_satisfiable(word)

    faces = t.inner_faces()
    face_edges = []
    edge_faces: list = [[] for _ in range(ne)]
    for f in faces:
        trip = []
        for p, q in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
            i = eid(p, q)
            trip.append((i, p < q))
            edge_faces[i].append(len(face_edges))
        face_edges.append(tuple(trip))

    def face_ok(fi: int) -> bool:
        a, b, c = face_edges[fi]
        key = (states[a[0]] if a[1] else _FLIP[states[a[0]]],
               states[b[0]] if b[1] else _FLIP[states[b[0]]],
               states[c[0]] if c[1] else _FLIP[states[c[0]]])
        return _FACE_OK[key]

    if not all(vertex_ok(v) for v in range(4, t.vertex_count)):
        return
    if not all(face_ok(i) for i in range(len(faces))):
        return

    def snapshot() -> TransversalStructure:
        return TransversalStructure(t, CARDINAL_LABELS, edges, tuple(states))

    if hook is not None and not hook.start(snapshot()):
        return

    # Assign leftover edges breadth-first from North for early pruning.
    pos = {NORTH: 0}
    queue = [NORTH]
    for v in queue:
        for w in rot[v]:
            if w not in pos:
                pos[w] = len(pos)
                queue.append(w)

    def edge_key(i: int) -> Tuple[int, int, int]:
        u, v = edges[i]
        a, b = sorted((pos[u], pos[v]))
        return (a, b, i)

    free = sorted((i for i in range(ne) if states[i] == UNSET), key=edge_key)
    assert all(edges[i][0] >= 4 for i in free), "free edges join squares"
    nfree = len(free)
    count = [0, 0] if stats is not None else None

    def dfs(k: int) -> Iterator[TransversalStructure]:
        if k == nfree:
            if count is not None:
                count[1] += 1
            yield snapshot()
            return
        i = free[k]
        u, v = edges[i]
        for s in (NS_FWD, NS_BWD, WE_FWD, WE_BWD):
            states[i] = s
            if count is not None:
                count[0] += 1
            if vertex_ok(u) and vertex_ok(v) \
                    and all(face_ok(f) for f in edge_faces[i]):
                if hook is None:
                    yield from dfs(k + 1)
                else:
                    tail, head = (u, v) if _TAIL_IS_U[s] else (v, u)
                    if hook.assign(i, tail, head, _COLOUR[s]):
                        yield from dfs(k + 1)
                    hook.unassign()
        states[i] = UNSET

    yield from dfs(0)
    if stats is not None:
        stats["assignments"] = stats.get("assignments", 0) + count[0]
        stats["structures"] = stats.get("structures", 0) + count[1]
