"""Tests for the degree-bound arithmetic and its brute-force verification."""

import pytest

from oneplane.bounds import (
    bound_ledger_table,
    brute_force_max_edges_nonbipartite_trianglefree,
    dominating_oneplanar_edge_bound,
    erdos_bound,
    max_degree_bound_solve,
    neighborhood_edge_lower_bound,
)


def test_erdos_bound_values():
    assert erdos_bound(5) == 5
    assert erdos_bound(11) == 26
    assert erdos_bound(1) == 1


def test_erdos_bound_rejects_nonpositive():
    with pytest.raises(ValueError):
        erdos_bound(0)


def test_erdos_bound_monotone():
    vals = [erdos_bound(n) for n in range(1, 40)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_dominating_edge_bound_values():
    assert dominating_oneplanar_edge_bound(12) == 39
    assert dominating_oneplanar_edge_bound(11) == 35
    assert dominating_oneplanar_edge_bound(3) == 3
    with pytest.raises(ValueError):
        dominating_oneplanar_edge_bound(2)


def test_neighborhood_lower_bound_values():
    assert neighborhood_edge_lower_bound(11) == 11 + 55 - 26 == 40
    assert neighborhood_edge_lower_bound(10) == 10 + 45 - 21 == 34
    assert neighborhood_edge_lower_bound(1) == 0


def test_solve_returns_ten_with_expected_rows():
    k_star, table = max_degree_bound_solve()
    assert k_star == 10
    rows = {row.k: row for row in table}
    assert rows[11].lower == 40 and rows[11].upper == 39 and not rows[11].feasible
    assert rows[10].lower == 34 and rows[10].upper == 35 and rows[10].feasible


def test_infeasibility_is_monotone_above_ten():
    table = bound_ledger_table(15)
    for row in table:
        if row.k >= 11:
            assert not row.feasible


def test_brute_force_small_classes_empty():
    assert brute_force_max_edges_nonbipartite_trianglefree(3) is None
    assert brute_force_max_edges_nonbipartite_trianglefree(4) is None


def test_brute_force_n5_is_c5():
    assert brute_force_max_edges_nonbipartite_trianglefree(5) == 5


def test_brute_force_rejects_out_of_range():
    with pytest.raises(ValueError):
        brute_force_max_edges_nonbipartite_trianglefree(8)


def test_brute_force_within_erdos_bound():
    for n in (5, 6):
        val = brute_force_max_edges_nonbipartite_trianglefree(n)
        assert val is not None and val <= erdos_bound(n)


def test_dominating_edge_bound_on_drawings():
    from oneplane.bounds import check_dominating_edge_bound
    from oneplane.drawing import build_drawing
    from oneplane.graphs import build_graph
    from tests.test_drawing import drawn_k5

    assert check_dominating_edge_bound(drawn_k5())  # 10 <= 4*5 - 9 = 11

    center, leaves = "c", [f"l{i}" for i in range(6)]
    G = build_graph([center] + leaves, [(center, l) for l in leaves])
    rot = {center: tuple(leaves)}
    rot.update({l: (center,) for l in leaves})
    star = build_drawing(G, [], rot, {})
    assert check_dominating_edge_bound(star)  # 6 <= 4*7 - 9 = 19


def test_dominating_edge_bound_requires_dominating_vertex():
    from oneplane.bounds import check_dominating_edge_bound
    from tests.test_drawing import plane_c4

    with pytest.raises(ValueError, match="dominating"):
        check_dominating_edge_bound(plane_c4())
