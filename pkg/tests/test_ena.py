"""Network reading of dissections: scan, potentials and verification."""

from fractions import Fraction

import pytest

from quilts.dissection import Dissection, TRANSFORMS, transformed
from quilts.ena import ENAGraph, solve_potentials, verify, vertical_scan
from quilts.exactcover import enumerate_tilings


def test_fig1_network_frozen(fig1_dissection):
    g = vertical_scan(fig1_dissection)
    assert g.side == 5
    assert g.nodes == ((0, 0, 5), (2, 3, 5), (3, 0, 3), (4, 2, 5), (5, 0, 5))
    # edge i belongs to square i in (y, x) order
    assert g.edges == ((0, 2), (0, 1), (1, 3), (2, 4), (2, 3),
                       (3, 4), (3, 4), (3, 4))
    assert g.incidence() == [
        [1, 1, 0, 0, 0, 0, 0, 0],
        [0, -1, 1, 0, 0, 0, 0, 0],
        [-1, 0, 0, 1, 1, 0, 0, 0],
        [0, 0, -1, 0, -1, 1, 1, 1],
        [0, 0, 0, -1, 0, -1, -1, -1],
    ]
    assert g.conductance() == [
        [2, -1, -1, 0, 0],
        [-1, 2, 0, -1, 0],
        [-1, 0, 3, -1, -1],
        [0, -1, -1, 5, -3],
        [0, 0, -1, -3, 4],
    ]


def test_fig1_potentials(fig1_dissection):
    g = vertical_scan(fig1_dissection)
    want = tuple(Fraction(k, 5) for k in (0, 2, 3, 4, 5))
    assert solve_potentials(g) == want


def test_fig1_verifies_in_every_orientation(fig1_dissection):
    for name, _ in TRANSFORMS:
        assert verify(transformed(fig1_dissection, name)) == (True, None)


def test_unit_grid_network():
    d = Dissection(2, ((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)))
    g = vertical_scan(d)
    assert g.nodes == ((0, 0, 2), (1, 0, 2), (2, 0, 2))
    assert g.edges == ((0, 1), (0, 1), (1, 2), (1, 2))
    assert solve_potentials(g) == (Fraction(0), Fraction(1, 2), Fraction(1))
    assert verify(d) == (True, None)


def test_interrupted_line_splits_into_two_nodes():
    d = Dissection(4, ((0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1),
                       (0, 1, 1), (1, 1, 1), (2, 1, 1), (3, 1, 1),
                       (0, 2, 1), (1, 2, 2), (3, 2, 1),
                       (0, 3, 1), (3, 3, 1)))
    g = vertical_scan(d)
    # the 2-square straddles y = 3, cutting that line in two
    assert g.nodes == ((0, 0, 4), (1, 0, 4), (2, 0, 4),
                       (3, 0, 1), (3, 3, 4), (4, 0, 4))
    assert [n for n in g.nodes if n[0] == 3] == [(3, 0, 1), (3, 3, 4)]
    assert verify(d) == (True, None)


def test_every_side_4_tiling_verifies():
    seen = 0
    for d in enumerate_tilings(4):
        assert verify(d) == (True, None)
        g = vertical_scan(d)
        inc = g.incidence()
        # every edge leaves one node and enters another
        for c in range(len(g.edges)):
            assert sum(row[c] for row in inc) == 0
        j = g.conductance()
        assert all(j[a][b] == j[b][a] for a in range(len(j))
                   for b in range(len(j)))
        assert all(sum(row) == 0 for row in j)
        seen += 1
    assert seen == 40


def test_verify_reports_invalid_geometry():
    ok, why = verify(Dissection(2, ((0, 0, 1),)))
    assert not ok and "tile" in why
    ok, why = verify(Dissection(2, ((0, 0, 3),)))
    assert not ok and "out of bounds" in why


def test_isolated_node_makes_potentials_singular():
    g = ENAGraph(2, ((0, 0, 2), (1, 0, 1), (2, 0, 2)), ((0, 2),))
    with pytest.raises(ValueError, match="singular"):
        solve_potentials(g)
