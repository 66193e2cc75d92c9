"""Exact-cover counting: board instances, symmetry quotients, windows."""

import pytest

from quilts.dissection import (Dissection, canonicalize, is_prime,
                               tiles_exactly, transformed)
from quilts.exactcover import (
    FIRST,
    MRV,
    SYMMETRY_NAMES,
    board_instance,
    count_all,
    count_fixed,
    count_prime,
    count_up_to_symmetry,
    crosscheck_table,
    enumerate_tilings,
    solve_count,
    stabilizer_census,
    symmetric_instance,
)

ALL_TILINGS = (1, 2, 6, 40, 472, 10668)
PRIME_TILINGS = (1, 1, 5, 38, 471, 10661)
CLASSES = (1, 2, 3, 13, 77)
PRIME_CLASSES = (1, 1, 2, 11, 76)


def test_fixed_orientation_counts():
    assert tuple(count_all(n) for n in range(1, 7)) == ALL_TILINGS


def test_prime_counts():
    assert tuple(count_prime(n) for n in range(1, 7)) == PRIME_TILINGS


def test_prime_count_is_a_scale_moebius_sum():
    assert count_prime(6) == count_all(6) - count_all(3) - count_all(2) \
        + count_all(1)
    assert count_prime(4) == count_all(4) - count_all(2)


def test_fixed_point_counts_match_brute_filter():
    for n in (3, 4):
        pool = list(enumerate_tilings(n))
        for g in SYMMETRY_NAMES:
            brute = sum(1 for d in pool if transformed(d, g) == d)
            assert count_fixed(n, g) == brute, (n, g)


def test_fixed_point_counts_side_3_frozen():
    got = {g: count_fixed(3, g) for g in SYMMETRY_NAMES}
    assert got == {"e": 6, "r": 2, "r2": 2, "r3": 2,
                   "h": 2, "v": 2, "d": 4, "a": 4}
    assert sum(got.values()) % 8 == 0


def test_burnside_equals_dedup():
    for n in range(1, 6):
        assert count_up_to_symmetry(n, method="burnside") == CLASSES[n - 1]
        assert count_up_to_symmetry(n, method="dedup") == CLASSES[n - 1]
        assert count_up_to_symmetry(n, prime_only=True,
                                    method="burnside") == PRIME_CLASSES[n - 1]
        assert count_up_to_symmetry(n, prime_only=True,
                                    method="dedup") == PRIME_CLASSES[n - 1]
    assert count_up_to_symmetry(5, method="auto") == 77


def test_stabilizer_census_side_5():
    census = stabilizer_census(5)
    want = {"trivial": 45, "diagonal": 19, "axis": 5, "half_turn": 2,
            "both_diagonals": 1, "both_axes": 0, "quarter_turn": 1,
            "full": 4}
    for label, value in want.items():
        assert census.get(label, 0) == value, label
    assert sum(census.values()) == 77
    # orbit sizes recover the fixed-orientation total
    weight = {"trivial": 8, "diagonal": 4, "axis": 4, "half_turn": 4,
              "both_diagonals": 2, "both_axes": 2, "quarter_turn": 2,
              "full": 1}
    assert sum(weight[k] * v for k, v in census.items()) == count_all(5)


# ---------------------------------------------------------------------------
# Instances.

def test_board_instance_shape():
    inst = board_instance(2)
    assert inst.columns == 4 and len(inst.rows) == 5
    members, cells = inst.rows[-1]
    assert members == ((0, 0, 2),) and cells == (1, 2, 3, 4)
    assert all(len(m) == 1 for m, _ in inst.rows)


def test_symmetric_instance_orbits():
    inst = symmetric_instance(3, "r")
    # 9 cells fall into the centre plus two 4-cycles
    assert inst.columns == 3
    for members, _ in inst.rows:
        cells = [(x + dx, y + dy) for x, y, k in members
                 for dx in range(k) for dy in range(k)]
        assert len(cells) == len(set(cells)), "orbit rows are disjoint"
    assert symmetric_instance(3, "d").columns == 6
    assert symmetric_instance(3, "e").symmetry == "e"
    # the centre unit cell is a singleton orbit under the half turn
    singletons = [m for m, _ in symmetric_instance(3, "r2").rows
                  if len(m) == 1]
    assert ((1, 1, 1),) in singletons


def test_column_rules_agree():
    for n in (4, 5):
        inst = board_instance(n)
        assert solve_count(inst, choose=MRV) == ALL_TILINGS[n - 1]
        assert solve_count(inst, choose=FIRST) == ALL_TILINGS[n - 1]


def test_visitor_sees_every_tiling():
    got = []
    n = 3
    assert solve_count(board_instance(n), visitor=got.append) == 6
    dissections = set()
    for squares in got:
        assert tiles_exactly(n, squares)
        dissections.add(Dissection(n, squares))
    assert dissections == set(enumerate_tilings(n))


# ---------------------------------------------------------------------------
# Windowed enumeration.

def test_order_cap_matches_filtered_enumeration():
    capped = list(enumerate_tilings(5, order_cap=8))
    full = [d for d in enumerate_tilings(5) if d.order <= 8]
    assert capped == full
    assert all(d.order <= 8 for d in capped)


def test_enumerate_tilings_side_4():
    pool = list(enumerate_tilings(4))
    assert len(pool) == count_all(4) == 40
    assert len({canonicalize(d) for d in pool}) == 13
    for d in pool:
        d.validate()


def test_crosscheck_window_cells():
    table = crosscheck_table(6, 12)
    grid = table.grid
    assert grid.get((1, 1), 0) == 1
    assert grid.get((2, 4), 0) == 1
    assert grid.get((3, 6), 0) == 1
    assert grid.get((5, 8), 0) == 5
    assert grid.get((6, 9), 0) == 11
    assert grid.get((6, 10), 0) == 0
    # side 2 admits exactly one prime tiling in the whole window
    assert [key for key in grid if key[0] == 2] == [(2, 4)]
    # order-complete queries must refuse: the window is side-complete only
    from quilts.sequences import NotDetermined

    with pytest.raises(NotDetermined):
        table.count(6, 9)
    assert table.enumerated_orders == set()


def test_crosscheck_uncapped_small_window():
    table = crosscheck_table(3, None)
    assert table.grid == {(1, 1): 1, (2, 4): 1, (3, 6): 1, (3, 9): 1}
    # orders partition the prime dedup count per side
    assert sum(c for (n, _), c in table.grid.items() if n == 3) \
        == count_up_to_symmetry(3, prime_only=True)
