"""Integer square dissections: realization, validation and symmetry.

A Dissection records the subsquares of an exactly tiled n-by-n square by
their North-West corners, with y growing southward.  realize turns a
complete edge structure into such a dissection by solving its local length
equations exactly, scaling the rational solution to integers and checking
the geometry.  canonicalize and stabilizer handle the eight symmetries of
the square; record helpers give dissections a stable one-line JSON form.
"""

from __future__ import annotations

import json
import math
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .linsys import (INCONSISTENT, WIDTH_AUTO, LinearSystem, Underdetermined)
from .transversal import NS, EAST, NORTH, SOUTH, WEST, TransversalStructure

Square = Tuple[int, int, int]

REJECT_INCONSISTENT = "inconsistent system"
REJECT_UNDERDETERMINED = "underdetermined system"
REJECT_LENGTH = "length out of range"
REJECT_GEOMETRY = "geometry mismatch"


@dataclass(frozen=True)
class Rejection:
    """Why a complete structure failed to become a dissection."""

    reason: str
    detail: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Dissection:
    """An exact tiling of the side-by-side square by integer subsquares.

    squares holds (x, y, size) per subsquare with (x, y) the North-West
    corner; the list is kept sorted by (y, x) so equal tilings compare
    equal.  Use validate() to check the tiling axioms.
    """

    side: int
    squares: Tuple[Square, ...]

    def __post_init__(self):
        object.__setattr__(self, "squares",
                           tuple(sorted(self.squares, key=lambda q: (q[1], q[0]))))

    @property
    def order(self) -> int:
        return len(self.squares)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(q[2] for q in self.squares)

    def validate(self) -> None:
        """Raise ValueError unless this is an exact in-bounds tiling."""
        n = self.side
        if n < 1:
            raise ValueError("side must be positive")
        for x, y, s in self.squares:
            if s < 1 or x < 0 or y < 0 or x + s > n or y + s > n:
                raise ValueError(f"square {(x, y, s)} out of bounds")
        if not tiles_exactly(n, self.squares):
            raise ValueError("squares do not tile the square exactly")


def tiles_exactly(side: int, squares: Sequence[Square]) -> bool:
    """Exact-coverage check by sweeping unit rows and merging intervals."""
    if sum(s * s for _, _, s in squares) != side * side:
        return False
    for row in range(side):
        spans = sorted((x, x + s) for x, y, s in squares if y <= row < y + s)
        at = 0
        for lo, hi in spans:
            if lo != at:
                return False
            at = hi
        if at != side:
            return False
    return True


def is_prime(d: Dissection) -> bool:
    """True when the subsquare sizes have greatest common divisor 1."""
    return math.gcd(*d.sizes()) == 1


# ---------------------------------------------------------------------------
# The eight symmetries of the square, acting on (x, y, size) with the
# North-West corner convention: a transform maps the corner of the image.

def _t_e(q: Square, n: int) -> Square:
    return q


def _t_r(q: Square, n: int) -> Square:  # quarter turn
    x, y, s = q
    return (n - y - s, x, s)


def _t_r2(q: Square, n: int) -> Square:
    x, y, s = q
    return (n - x - s, n - y - s, s)


def _t_r3(q: Square, n: int) -> Square:
    x, y, s = q
    return (y, n - x - s, s)


def _t_h(q: Square, n: int) -> Square:  # mirror across the vertical axis
    x, y, s = q
    return (n - x - s, y, s)


def _t_v(q: Square, n: int) -> Square:  # mirror across the horizontal axis
    x, y, s = q
    return (x, n - y - s, s)


def _t_d(q: Square, n: int) -> Square:  # main diagonal
    x, y, s = q
    return (y, x, s)


def _t_a(q: Square, n: int) -> Square:  # anti diagonal
    x, y, s = q
    return (n - y - s, n - x - s, s)


TRANSFORMS = (("e", _t_e), ("r", _t_r), ("r2", _t_r2), ("r3", _t_r3),
              ("h", _t_h), ("v", _t_v), ("d", _t_d), ("a", _t_a))

TRIVIAL = "trivial"
DIAGONAL = "diagonal"
AXIS = "axis"
HALF_TURN = "half_turn"
BOTH_DIAGONALS = "both_diagonals"
BOTH_AXES = "both_axes"
QUARTER_TURN = "quarter_turn"
FULL = "full"

SYMMETRY_CLASSES = (TRIVIAL, DIAGONAL, AXIS, HALF_TURN,
                    BOTH_DIAGONALS, BOTH_AXES, QUARTER_TURN, FULL)

_CLASS_OF = {
    frozenset({"e"}): TRIVIAL,
    frozenset({"e", "d"}): DIAGONAL,
    frozenset({"e", "a"}): DIAGONAL,
    frozenset({"e", "h"}): AXIS,
    frozenset({"e", "v"}): AXIS,
    frozenset({"e", "r2"}): HALF_TURN,
    frozenset({"e", "r2", "d", "a"}): BOTH_DIAGONALS,
    frozenset({"e", "r2", "h", "v"}): BOTH_AXES,
    frozenset({"e", "r", "r2", "r3"}): QUARTER_TURN,
    frozenset({"e", "r", "r2", "r3", "h", "v", "d", "a"}): FULL,
}


def transformed(d: Dissection, name: str) -> Dissection:
    """Apply one named symmetry of the square."""
    fn = dict(TRANSFORMS)[name]
    return Dissection(d.side, tuple(fn(q, d.side) for q in d.squares))


def stabilizer_set(d: Dissection) -> frozenset:
    """Names of the symmetries that fix the dissection."""
    base = d.squares
    return frozenset(name for name, fn in TRANSFORMS
                     if tuple(sorted((fn(q, d.side) for q in base),
                                     key=lambda q: (q[1], q[0]))) == base)


def stabilizer(d: Dissection) -> str:
    """Classify the fixing subgroup as one of SYMMETRY_CLASSES."""
    return _CLASS_OF[stabilizer_set(d)]


def orbit_size(d: Dissection) -> int:
    """Number of distinct images under the eight symmetries."""
    return 8 // len(stabilizer_set(d))


def canonicalize(d: Dissection) -> bytes:
    """Minimal byte encoding over the eight symmetry images.

    Each image is encoded as the sorted (y, x, size) triples; equal keys
    mean equal dissections up to symmetry.
    """
    n = d.side
    best = None
    for _, fn in TRANSFORMS:
        triples = sorted((y, x, s) for x, y, s in (fn(q, n) for q in d.squares))
        enc = ("%d:" % n + ";".join("%d,%d,%d" % t for t in triples)).encode()
        if best is None or enc < best:
            best = enc
    return best


def from_canonical(key: bytes) -> Dissection:
    """Rebuild the representative dissection a canonical key encodes."""
    head, _, body = key.decode("ascii").partition(":")
    squares = tuple((x, y, s) for y, x, s in
                    (tuple(map(int, part.split(",")))
                     for part in body.split(";")))
    return Dissection(int(head), squares)


# ---------------------------------------------------------------------------
# Records: one dissection per line, the contract between the enumerator,
# the cross-checker and the report generator.

def to_record(d: Dissection) -> dict:
    return {"n": d.side, "order": d.order,
            "squares": [list(q) for q in d.squares]}


def from_record(obj: dict) -> Dissection:
    d = Dissection(int(obj["n"]),
                   tuple((int(x), int(y), int(s)) for x, y, s in obj["squares"]))
    if d.order != int(obj["order"]):
        raise ValueError("order field disagrees with square count")
    d.validate()
    return d


def write_records(path, dissections: Iterable[Dissection]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for d in dissections:
            fh.write(json.dumps(to_record(d), separators=(", ", ": ")))
            fh.write("\n")


def read_records(path) -> List[Dissection]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(from_record(json.loads(line)))
    return out


_GLYPHS = string.ascii_lowercase + string.ascii_uppercase + string.digits


def ascii_grid(d: Dissection) -> str:
    """Render the tiling as an n-by-n character grid."""
    grid = [[" "] * d.side for _ in range(d.side)]
    for i, (x, y, s) in enumerate(d.squares):
        ch = _GLYPHS[i % len(_GLYPHS)]
        for r in range(y, y + s):
            for c in range(x, x + s):
                grid[r][c] = ch
    return "\n".join("".join(row) for row in grid)


# ---------------------------------------------------------------------------
# Local equations.  Unknowns for N squares are laid out as
# x_0..x_{N-1}, y_0..y_{N-1}, L_0..L_{N-1}; square i is inner vertex i + 4.
# All coordinates are normalized to the unit square, y growing southward.

def _unknowns(order: int) -> Tuple[int, int, int]:
    return 0, order, 2 * order


def local_equations(s: TransversalStructure) -> List[Tuple[Tuple[int, ...], int]]:
    """Equations implied by the assigned edges of a structure.

    Boundary contacts fix coordinates (x = 0 against West, x + L = 1
    against East, mirrored for y); every assigned square-to-square edge
    states that the tail's far side meets the head's near side.
    """
    order = s.base.order
    xo, yo, lo = _unknowns(order)
    width = 3 * order
    eqs = []

    def eq(entries, const):
        row = [0] * width
        for idx, coeff in entries:
            row[idx] += coeff
        eqs.append((tuple(row), const))

    adj = s.base.adjacency()
    for w in sorted(adj[NORTH] - {EAST, WEST}):
        eq([(yo + w - 4, 1)], 0)
    for w in sorted(adj[SOUTH] - {EAST, WEST}):
        eq([(yo + w - 4, 1), (lo + w - 4, 1)], 1)
    for w in sorted(adj[WEST] - {NORTH, SOUTH}):
        eq([(xo + w - 4, 1)], 0)
    for w in sorted(adj[EAST] - {NORTH, SOUTH}):
        eq([(xo + w - 4, 1), (lo + w - 4, 1)], 1)

    for tail, head, colour in s.directed_edges():
        if tail < 4 or head < 4:
            continue
        i, j = tail - 4, head - 4
        off = yo if colour == NS else xo
        eq([(off + i, 1), (lo + i, 1), (off + j, -1)], 0)
    return eqs


def edge_equation(order: int, tail: int, head: int, colour: str
                  ) -> Tuple[Tuple[int, ...], int]:
    """The single equation contributed by one square-to-square edge."""
    xo, yo, lo = _unknowns(order)
    i, j = tail - 4, head - 4
    off = yo if colour == NS else xo
    row = [0] * (3 * order)
    row[off + i] = 1
    row[lo + i] += 1
    row[off + j] = -1
    return tuple(row), 0


class EquationHook:
    """Equation feedback for the structure search.

    Feeds each newly directed square-to-square edge into an exact linear
    system and vetoes assignments whose implied equation contradicts it.
    Pushes are unwound in lockstep with the search, so the system always
    mirrors the current partial structure.
    """

    def __init__(self, order: int, width_mode: str = WIDTH_AUTO):
        self.order = order
        self.system = LinearSystem(3 * order, width_mode)
        self._marks: List[int] = []

    def start(self, partial: TransversalStructure) -> bool:
        for coeffs, const in local_equations(partial):
            if self.system.add_equation(coeffs, const) == INCONSISTENT:
                return False
        return True

    def assign(self, edge_id: int, tail: int, head: int, colour: str) -> bool:
        self._marks.append(self.system.snapshot())
        coeffs, const = edge_equation(self.order, tail, head, colour)
        return self.system.add_equation(coeffs, const) != INCONSISTENT

    def unassign(self) -> None:
        self.system.rollback(self._marks.pop())


def realize(s: TransversalStructure, system: Optional[LinearSystem] = None,
            width_mode: str = WIDTH_AUTO):
    """Turn a complete valid structure into an integer Dissection.

    Solves the local equations exactly, requires every normalized length
    in (0, 1), scales by the least common multiple of the denominators and
    validates the geometry: the squares must tile exactly and the two
    squares of every edge must actually touch (a single point is enough,
    as happens across a cross).

    Args:
        s: a complete TransversalStructure.
        system: optional LinearSystem already loaded with exactly the
            local equations of s (as a search hook leaves behind); saves
            rebuilding it.

    Returns:
        A Dissection, or a Rejection naming the failure.
    """
    order = s.base.order
    if system is None:
        system = LinearSystem(3 * order, width_mode)
        for coeffs, const in local_equations(s):
            if system.add_equation(coeffs, const) == INCONSISTENT:
                return Rejection(REJECT_INCONSISTENT)
    solution = system.solve()
    if isinstance(solution, Underdetermined):
        return Rejection(REJECT_UNDERDETERMINED, tuple(solution.free_unknowns))

    values = solution.values
    xs = values[0:order]
    ys = values[order:2 * order]
    ls = values[2 * order:3 * order]
    one = Fraction(1)
    for length in ls:
        if not 0 < length < one:
            return Rejection(REJECT_LENGTH)
    for x, y, length in zip(xs, ys, ls):
        if x < 0 or y < 0 or x + length > one or y + length > one:
            return Rejection(REJECT_GEOMETRY)

    scale = 1
    for v in values:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    squares = tuple((int(x * scale), int(y * scale), int(length * scale))
                    for x, y, length in zip(xs, ys, ls))
    dissection = Dissection(scale, squares)
    if not tiles_exactly(scale, squares):
        return Rejection(REJECT_GEOMETRY)

    for tail, head, colour in s.directed_edges():
        if tail < 4 or head < 4:
            continue
        xi, yi, si = squares[tail - 4]
        xj, yj, sj = squares[head - 4]
        if colour == NS:
            assert yi + si == yj, "edge equation must hold exactly"
            if max(xi, xj) > min(xi + si, xj + sj):
                return Rejection(REJECT_GEOMETRY)
        else:
            assert xi + si == xj, "edge equation must hold exactly"
            if max(yi, yj) > min(yi + si, yj + sj):
                return Rejection(REJECT_GEOMETRY)

    assert math.gcd(*dissection.sizes()) == 1, \
        "lcm scaling must leave coprime sizes"
    return dissection


def traverse_equations(s: TransversalStructure) -> List[Tuple[Tuple[int, ...], int]]:
    """Length-sum equations of all North-South and West-East traverses.

    Every directed monochromatic path from a cardinal to its opposite
    crosses the whole square, so its member lengths sum to 1.
    """
    order = s.base.order
    _, _, lo = _unknowns(order)
    width = 3 * order
    succ_ns: dict = {}
    succ_we: dict = {}
    for tail, head, colour in s.directed_edges():
        target = succ_ns if colour == NS else succ_we
        target.setdefault(tail, []).append(head)

    def paths(source: int, sink: int, succ: dict) -> List[Tuple[int, ...]]:
        out = []
        stack = [(source, (source,))]
        while stack:
            v, path = stack.pop()
            for w in sorted(succ.get(v, ()), reverse=True):
                if w == sink:
                    out.append(path[1:])
                elif w < 4:
                    continue
                elif w in path:
                    raise ValueError("directed colour cycle in structure")
                else:
                    stack.append((w, path + (w,)))
        return out

    eqs = []
    for source, sink, succ in ((NORTH, SOUTH, succ_ns), (WEST, EAST, succ_we)):
        for path in paths(source, sink, succ):
            row = [0] * width
            for v in path:
                row[lo + v - 4] += 1
            eqs.append((tuple(row), 1))
    return eqs
