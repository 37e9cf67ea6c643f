"""Fuzz the boolean LR planarity port against networkx and check embeddings."""

import itertools
import random

import networkx as nx

from oneplane.drawing import build_drawing, euler_check, planarize
from oneplane.graphs import build_graph
from oneplane.planarity import is_planar, lr_planar


def test_known_small_cases():
    k5 = list(itertools.combinations(range(5), 2))
    assert not lr_planar(5, k5)
    k4 = list(itertools.combinations(range(4), 2))
    assert lr_planar(4, k4)
    k33 = [(i, 3 + j) for i in range(3) for j in range(3)]
    assert not lr_planar(6, k33)
    k6_minus_perfect_matching = [
        (i, j) for i, j in itertools.combinations(range(6), 2) if j - i != 3
    ]
    assert lr_planar(6, k6_minus_perfect_matching)  # the octahedron


def test_fuzz_against_networkx():
    rng = random.Random(20240814)
    for _ in range(3000):
        n = rng.randint(1, 12)
        maxm = n * (n - 1) // 2
        style = rng.random()
        if style < 0.4 and n >= 3:
            m = rng.randint(max(0, 3 * n - 9), min(maxm, 3 * n - 3))
        else:
            m = rng.randint(0, maxm)
        edges = rng.sample(list(itertools.combinations(range(n), 2)), m)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        want = nx.check_planarity(G, counterexample=False)[0]
        assert lr_planar(n, edges) == want, (n, sorted(edges))


def test_fuzz_planar_inputs():
    # subgraphs of planar triangulations are planar; the test must agree
    rng = random.Random(77)
    for _ in range(300):
        n = rng.randint(4, 14)
        H = nx.wheel_graph(n)
        edges = [tuple(sorted(e)) for e in H.edges()]
        drop = rng.randint(0, len(edges) // 2)
        edges = rng.sample(edges, len(edges) - drop)
        assert lr_planar(n, edges)


def test_is_planar_graph_api():
    G = build_graph(list("abcd"), list(itertools.combinations("abcd", 2)))
    ok, rot = is_planar(G)
    assert ok
    D = build_drawing(G, [], rot, {})
    assert euler_check(planarize(D))

    k5 = build_graph(list("abcde"), list(itertools.combinations("abcde", 2)))
    ok, rot = is_planar(k5)
    assert not ok and rot is None

    k33 = build_graph(
        list("abcxyz"), [(u, v) for u in "abc" for v in "xyz"]
    )
    ok, rot = is_planar(k33)
    assert not ok


def test_is_planar_embeddings_pass_euler_on_randoms():
    rng = random.Random(5150)
    for _ in range(60):
        n = rng.randint(1, 9)
        vs = [f"n{i}" for i in range(n)]
        edges = [e for e in itertools.combinations(vs, 2) if rng.random() < 0.35]
        G = build_graph(vs, edges)
        ok, rot = is_planar(G)
        if ok:
            D = build_drawing(G, [], rot, {})
            assert euler_check(planarize(D))
