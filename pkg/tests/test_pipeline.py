"""Per-order orchestration: tallies, dedup, partitioned runs, merging."""

import pytest

from quilts.dissection import canonicalize, from_canonical, is_prime
from quilts.pipeline import (OrderResult, _merge, count_table, run_order,
                             run_orders, scan_order)
from quilts.sequences import NotDetermined, f_of_n, g_of_N

TALLIES = {
    4: dict(considered=1, solved=1, structures=2, solutions=2,
            kept=1, per_side={2: 1}, with_sym=1, multisets=1),
    5: dict(considered=4, solved=0, structures=2, solutions=0,
            kept=0, per_side={}, with_sym=0, multisets=0),
    6: dict(considered=17, solved=2, structures=7, solutions=4,
            kept=1, per_side={3: 1}, with_sym=4, multisets=1),
    7: dict(considered=89, solved=5, structures=29, solutions=17,
            kept=2, per_side={4: 2}, with_sym=8, multisets=1),
    8: dict(considered=491, solved=11, structures=89, solutions=21,
            kept=6, per_side={4: 1, 5: 5}, with_sym=36, multisets=2),
}


@pytest.fixture(scope="module")
def small_orders():
    return {order: run_order(order) for order in range(4, 9)}


def test_order_tallies_frozen(small_orders):
    for order, want in TALLIES.items():
        res = small_orders[order]
        assert res.order == order
        assert res.graphs_considered == want["considered"]
        assert res.graphs_solved == want["solved"]
        assert res.structures == want["structures"]
        assert res.solutions == want["solutions"]
        assert len(res.dissections) == want["kept"]
        assert res.per_side == want["per_side"]
        assert res.with_symmetry == want["with_sym"]
        assert res.size_multiset_count == want["multisets"]
        assert res.collisions == 0
        assert res.underdetermined == 0


def test_filter_taxonomy(small_orders):
    res = small_orders[8]
    assert res.graphs_filtered == {"attached-to-opposite-cardinals": 144,
                                   "separating-triangle": 25,
                                   "corner-count": 15}
    assert set(res.rejects) <= {"length out of range", "geometry mismatch",
                                "inconsistent system",
                                "underdetermined system"}


def test_kept_dissections_are_prime_canonical_representatives(small_orders):
    for res in small_orders.values():
        keys = [canonicalize(d) for d in res.dissections]
        assert keys == sorted(keys), "kept in canonical key order"
        assert len(set(keys)) == len(keys)
        for d in res.dissections:
            d.validate()
            assert is_prime(d)
            assert d.order == res.order
            assert from_canonical(canonicalize(d)) == d, \
                "representatives are in canonical form"
            assert res.codes[canonicalize(d)], "contact graph code recorded"


def test_worker_count_does_not_change_results(small_orders):
    parallel = run_order(7, jobs=2)
    assert parallel == small_orders[7]


def test_partitions_cover_the_scan(small_orders):
    pieces = 3
    parts = [scan_order(7, partition=(i, pieces)) for i in range(pieces)]
    assert sum(p.graphs_considered for p in parts) == 89
    assert _merge(parts) == small_orders[7]


def test_merge_rejects_mixed_orders(small_orders):
    with pytest.raises(ValueError, match="different orders"):
        _merge([small_orders[4], small_orders[5]])


def test_merge_keeps_least_graph_code(small_orders):
    base = small_orders[6]
    larger = OrderResult(order=6, collisions=2,
                         codes={k: b"\xff" + c for k, c in base.codes.items()})
    smaller = OrderResult(order=6,
                          codes={k: b"\x00" for k in base.codes})
    merged = _merge([larger, base, smaller])
    assert merged.codes == {k: b"\x00" for k in base.codes}
    assert merged.collisions == 2, "per-part collision tallies add up"
    assert merged.dissections == base.dissections, \
        "representatives rebuild from keys, not from part payloads"


def test_cross_resolved_graph_pairs_share_dissections(small_orders):
    # five of the six order-8 classes contain a cross, so two contact
    # graphs realize each of them: more graphs solved than classes kept
    res = small_orders[8]
    assert res.graphs_solved == 11 and len(res.dissections) == 6
    assert res.collisions == 0, "one graph never yields two dissections"


def test_run_orders_range_and_table():
    results = run_orders(6)
    assert [r.order for r in results] == [2, 3, 4, 5, 6]
    assert all(r.solutions == 0 for r in results if r.order < 4)
    table = count_table(6)
    assert table.order_max() == 6
    assert table.count(2, 4) == 1
    assert table.order_totals == {1: 1, 2: 0, 3: 0, 4: 1, 5: 0, 6: 1}
    assert f_of_n(table, 3) == 6
    assert g_of_N(table, 6) == 3
    with pytest.raises(NotDetermined):
        f_of_n(table, 4)
