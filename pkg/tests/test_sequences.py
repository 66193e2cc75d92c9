"""Count-table bookkeeping and the derived integer sequences."""

from types import SimpleNamespace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quilts.sequences import (
    BFILE,
    DELIMITED,
    CountTable,
    NotDetermined,
    build_table,
    emit,
    f_of_n,
    g_of_N,
    least_edge_at_least,
    order_sequences,
    parse_bfile,
    smaller_squares_min,
)


def _synthetic_table(order_max=8):
    """Orders 1..order_max with the small-side counts seen in practice."""
    per_side = {
        1: {1: 1}, 2: {}, 3: {}, 4: {2: 1}, 5: {},
        6: {3: 1}, 7: {4: 2}, 8: {4: 1, 5: 5},
    }
    table = CountTable()
    for order in range(1, order_max + 1):
        sides = per_side.get(order, {})
        table.add_order(order, sides, sum(sides.values()), len(sides))
    return table


# ---------------------------------------------------------------------------
# Table bookkeeping.

def test_add_order_guards():
    table = CountTable()
    table.add_order(1, {1: 1}, 1, 1)
    with pytest.raises(ValueError, match="twice"):
        table.add_order(1, {}, 0, 0)
    with pytest.raises(ValueError, match="negative"):
        table.add_order(2, {3: -1}, 0, 0)


def test_order_max_needs_contiguity():
    table = CountTable()
    for order in (1, 2, 4):
        table.add_order(order, {}, 0, 0)
    assert table.order_max() == 2
    with pytest.raises(NotDetermined):
        table.require_orders(3)
    table.require_orders(2)


def test_count_semantics():
    table = _synthetic_table()
    assert table.count(4, 7) == 2
    assert table.count(9, 7) == 0, "enumerated order, absent side: true zero"
    with pytest.raises(NotDetermined):
        table.count(4, 9)
    assert table.side_counts(8) == {4: 1, 5: 5}
    with pytest.raises(NotDetermined):
        table.side_counts(12)
    assert table.sides_seen() == [1, 2, 3, 4, 5]


def test_validate_catches_marginal_mismatch():
    table = _synthetic_table()
    table.validate()
    table.order_totals[8] += 1
    with pytest.raises(ValueError, match="marginal"):
        table.validate()
    table.order_totals[8] -= 1
    table.grid[(4, 7)] = -2
    with pytest.raises(ValueError, match="negative"):
        table.validate()


def test_build_table_injects_the_single_square():
    results = [SimpleNamespace(order=2, per_side={}, with_symmetry=0,
                               size_multiset_count=0)]
    table = build_table(results)
    assert table.count(1, 1) == 1
    assert table.order_totals[1] == 1
    bare = build_table(results, include_trivial=False)
    assert 1 not in bare.enumerated_orders


# ---------------------------------------------------------------------------
# Derived quantities and their refusals.

def test_least_order_per_side():
    table = _synthetic_table()
    assert f_of_n(table, 1) == 1
    assert f_of_n(table, 2) == 4
    assert f_of_n(table, 4) == 7
    assert f_of_n(table, 5) == 8
    with pytest.raises(NotDetermined, match="f\\(6\\) > 8"):
        f_of_n(table, 6)


def test_greatest_side_per_budget():
    table = _synthetic_table()
    assert g_of_N(table, 1) == 1
    assert g_of_N(table, 4) == 2
    assert g_of_N(table, 7) == 4
    assert g_of_N(table, 8) == 5
    with pytest.raises(NotDetermined):
        g_of_N(table, 9)
    with pytest.raises(NotDetermined):
        g_of_N(CountTable(), 0)


def test_least_side_needing_at_least():
    table = _synthetic_table()
    # first sides whose cheapest dissection needs >= N squares
    assert [least_edge_at_least(table, N) for N in range(1, 9)] \
        == [1, 2, 2, 2, 3, 3, 4, 5]
    with pytest.raises(NotDetermined):
        least_edge_at_least(table, 10)


def test_smaller_square_minimum():
    table = _synthetic_table()
    with pytest.raises(NotDetermined):
        smaller_squares_min(table, 1)
    assert smaller_squares_min(table, 2) == 4
    assert smaller_squares_min(table, 4) == 4
    assert smaller_squares_min(table, 3) == 6
    # an open divisor cannot undercut an already known minimum
    assert smaller_squares_min(table, 6) == 4
    with pytest.raises(NotDetermined):
        smaller_squares_min(table, 7)


def test_order_sequences_passthrough():
    table = _synthetic_table()
    seqs = order_sequences(table, 8)
    assert seqs["A221841"] == [1, 0, 0, 1, 0, 1, 2, 6]
    assert seqs["A221842"] == seqs["A221841"], "synthetic orbits were trivial"
    assert seqs["A232484"] == [1, 0, 0, 1, 0, 1, 1, 2]
    with pytest.raises(NotDetermined):
        order_sequences(table, 9)


# ---------------------------------------------------------------------------
# Serialization.

def test_emit_forms():
    assert emit("A000042", [1, 11, 111], BFILE) == "1 1\n2 11\n3 111\n"
    assert emit("A000042", [7], DELIMITED) == "A000042,1,7\n"
    with pytest.raises(ValueError):
        emit("A000042", [1], "xml")


def test_parse_bfile_checks_indices():
    assert parse_bfile("# comment\n1 4\n2 9\n\n") == [4, 9]
    with pytest.raises(ValueError, match="index"):
        parse_bfile("2 4\n")


@given(st.lists(st.integers(min_value=-10 ** 30, max_value=10 ** 30),
                max_size=40))
def test_bfile_roundtrip(values):
    assert parse_bfile(emit("A", values, BFILE)) == values
