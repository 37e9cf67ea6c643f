"""Integer arithmetic behind the maximum-degree bound for claw-free 1-planar graphs.

All arithmetic is exact; the closed-form cross-check uses math.isqrt, never
floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .graphs import Graph, build_graph, find_triangle, is_bipartite, max_degree


def erdos_bound(n: int) -> int:
    """Maximum size of a non-bipartite triangle-free graph of order n.

    The bound is (n-1)^2/4 + 1; edge counts are integers, so the floor form
    is the effective bound.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return (n - 1) ** 2 // 4 + 1


def dominating_oneplanar_edge_bound(n: int) -> int:
    """Edge bound 4n - 9 for an n-vertex 1-planar graph with a dominating vertex."""
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    return 4 * n - 9


def neighborhood_edge_lower_bound(k: int) -> int:
    """Minimum size of the closed neighborhood subgraph around a degree-k
    vertex in a claw-free graph: k + C(k,2) - erdos_bound(k)."""
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    return k + k * (k - 1) // 2 - erdos_bound(k)


@dataclass(frozen=True)
class BoundLedger:
    """One row of the degree feasibility table."""

    k: int
    erdos: int
    lower: int
    upper: int

    @property
    def feasible(self) -> bool:
        return self.lower <= self.upper


def bound_ledger_table(k_max: int = 15) -> list[BoundLedger]:
    """Feasibility rows for k = 1..k_max.

    lower = forced edge count of the closed neighborhood of a degree-k vertex
    (claw-freeness), upper = 4(k+1) - 9 (1-planar graph with a dominating
    vertex on k+1 vertices).  The upper value is the raw formula; for k = 1
    it falls below the n >= 3 domain of the edge bound, which only makes the
    row infeasible and never affects the solve.
    """
    rows = []
    for k in range(1, k_max + 1):
        rows.append(
            BoundLedger(
                k=k,
                erdos=erdos_bound(k),
                lower=neighborhood_edge_lower_bound(k),
                upper=4 * (k + 1) - 9,
            )
        )
    return rows


def max_degree_bound_solve() -> tuple[int, list[BoundLedger]]:
    """Largest degree k whose feasibility row closes, plus the full table.

    Asserts the answer equals 10 and equals the closed form 6 + isqrt(21);
    a mismatch would mean the arithmetic itself is broken.
    """
    table = bound_ledger_table(15)
    feasible = [row.k for row in table if row.feasible]
    k_star = max(feasible)
    closed_form = 6 + math.isqrt(21)
    if k_star != 10 or closed_form != 10:
        raise AssertionError(
            f"degree bound solve mismatch: table says {k_star}, closed form {closed_form}"
        )
    return k_star, table


# ---------------------------------------------------------------------------
# Brute-force verification of the non-bipartite triangle-free edge maximum
# ---------------------------------------------------------------------------


def brute_force_max_edges_nonbipartite_trianglefree(n: int) -> int | None:
    """Exact maximum size over non-bipartite triangle-free graphs on n
    labeled vertices, or None when the class is empty (n <= 4).

    Exhaustive over edge subsets, pruned: edges are added in fixed order,
    triangles rejected as soon as they close, and branches that cannot beat
    the current best are dropped.
    """
    if not 3 <= n <= 7:
        raise ValueError(f"order must be in 3..7, got {n}")
    verts = [f"v{i}" for i in range(n)]
    all_edges = list(itertools.combinations(verts, 2))
    m = len(all_edges)
    adj = {v: set() for v in verts}
    best: list[int | None] = [None]

    def creates_triangle(u, v):
        return bool(adj[u] & adj[v])

    def qualifies(edge_count):
        G = build_graph(verts, [e for e in chosen])
        ok, _ = is_bipartite(G)
        if ok:
            return False
        assert find_triangle(G) is None
        return True

    chosen: list[tuple[str, str]] = []

    def rec(i):
        if best[0] is not None and len(chosen) + (m - i) <= best[0]:
            return
        if i == m:
            if (best[0] is None or len(chosen) > best[0]) and qualifies(len(chosen)):
                best[0] = len(chosen)
            return
        u, v = all_edges[i]
        if not creates_triangle(u, v):
            chosen.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
            rec(i + 1)
            adj[u].remove(v)
            adj[v].remove(u)
            chosen.pop()
        rec(i + 1)

    rec(0)
    return best[0]


# ---------------------------------------------------------------------------
# Drawing-level spot check
# ---------------------------------------------------------------------------


def check_dominating_edge_bound(drawing) -> bool:
    """Edge bound e <= 4n - 9 for a valid drawing whose base graph has a
    dominating vertex.  A False return signals a corpus or validator bug."""
    base: Graph = drawing.base
    if max_degree(base) != base.n - 1:
        raise ValueError(
            f"base graph has no dominating vertex (max degree {max_degree(base)}, n {base.n})"
        )
    return base.e <= dominating_oneplanar_edge_bound(base.n)
