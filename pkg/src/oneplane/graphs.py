"""Simple undirected graphs and their purely graph-theoretic invariants.

Vertices are opaque ASCII tokens with lexicographic total order; every
"first witness" tie-break in this package uses that order.  Graph values
are immutable after construction and all operations here are pure.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

Edge = tuple[str, str]


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


def edge_key(u: str, v: str) -> Edge:
    """Canonical unordered-pair representation of an edge."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """Immutable simple graph: ordered vertex tuple plus canonical edge set.

    Construct through :func:`build_graph`, which checks the invariants
    (no self-loops, no parallel edges, endpoints known).
    """

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices: tuple[str, ...], edges: frozenset[Edge]):
        self.vertices = vertices
        self.edges = edges
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: tuple(sorted(nb)) for v, nb in adj.items()}

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: str) -> bool:
        return v in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self.edges

    def sorted_vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


@dataclass(frozen=True)
class ClawWitness:
    """An induced K_{1,3}: center adjacent to three pairwise non-adjacent leaves."""

    center: str
    leaves: tuple[str, str, str]

    def holds_in(self, G: Graph) -> bool:
        a, b, c = self.leaves
        return (
            all(G.has_edge(self.center, x) for x in self.leaves)
            and not G.has_edge(a, b)
            and not G.has_edge(a, c)
            and not G.has_edge(b, c)
        )


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build_graph(vertex_list, edge_list) -> Graph:
    """Build a simple graph, rejecting malformed input.

    Vertex order is preserved as given and used for deterministic iteration;
    witness tie-breaks use lexicographic token order instead.
    """
    vertices: list[str] = []
    seen: set[str] = set()
    for tok in vertex_list:
        if not isinstance(tok, str) or not tok:
            raise GraphError(f"vertex token must be a nonempty string: {tok!r}")
        if tok in seen:
            raise GraphError(f"duplicate vertex token: {tok!r}")
        seen.add(tok)
        vertices.append(tok)
    edges: set[Edge] = set()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise GraphError(f"self-loop at {u!r}")
        if u not in seen:
            raise GraphError(f"edge references unknown vertex: {u!r}")
        if v not in seen:
            raise GraphError(f"edge references unknown vertex: {v!r}")
        e = edge_key(u, v)
        if e in edges:
            raise GraphError(f"duplicate edge: {e[0]!r}-{e[1]!r}")
        edges.add(e)
    return Graph(tuple(vertices), frozenset(edges))


# ---------------------------------------------------------------------------
# Elementary invariants
# ---------------------------------------------------------------------------


def max_degree(G: Graph) -> int:
    """Largest vertex degree; 0 for edgeless graphs."""
    if not G.vertices:
        return 0
    return max(G.degree(v) for v in G.vertices)


def complement(G: Graph) -> Graph:
    """Same vertex set, edge iff non-edge."""
    edges = frozenset(
        edge_key(u, v)
        for u, v in itertools.combinations(G.vertices, 2)
        if not G.has_edge(u, v)
    )
    return Graph(G.vertices, edges)


def induced_subgraph(G: Graph, U) -> Graph:
    """Subgraph on U with every edge of G whose endpoints both lie in U."""
    keep = set(U)
    for v in keep:
        if not G.has_vertex(v):
            raise GraphError(f"unknown vertex in induced set: {v!r}")
    vertices = tuple(v for v in G.vertices if v in keep)
    edges = frozenset(e for e in G.edges if e[0] in keep and e[1] in keep)
    return Graph(vertices, edges)


def line_graph(G: Graph) -> Graph:
    """Vertices are edges of G, adjacent iff the edges share an endpoint.

    Edge (u, v) becomes the token "u-v" with u <= v.
    """
    names = {e: f"{e[0]}-{e[1]}" for e in G.sorted_edges()}
    vertices = tuple(names[e] for e in G.sorted_edges())
    edges = frozenset(
        edge_key(names[e1], names[e2])
        for e1, e2 in itertools.combinations(G.sorted_edges(), 2)
        if set(e1) & set(e2)
    )
    return Graph(vertices, edges)


# ---------------------------------------------------------------------------
# Induced-subgraph detectors
# ---------------------------------------------------------------------------


def find_induced_claw(G: Graph) -> ClawWitness | None:
    """First induced K_{1,3} in lexicographic order (center, sorted leaves).

    Returns None iff the graph is claw-free.
    """
    for center in sorted(G.vertices):
        nb = G.neighbors(center)
        if len(nb) < 3:
            continue
        for trio in itertools.combinations(nb, 3):
            a, b, c = trio
            if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
                return ClawWitness(center, trio)
    return None


def find_triangle(G: Graph) -> tuple[str, str, str] | None:
    """First triangle in lexicographic order, or None if triangle-free."""
    for a in sorted(G.vertices):
        nb = G.neighbors(a)
        for b, c in itertools.combinations(nb, 2):
            if b > a and c > a and G.has_edge(b, c):
                return (a, b, c)
    return None


def is_bipartite(G: Graph):
    """Decide bipartiteness with a certificate.

    Returns ``(True, coloring)`` where coloring maps vertices to 0/1, or
    ``(False, odd_cycle)`` with an odd cycle as a vertex tuple.  Edgeless
    graphs (including K_1) count as bipartite even though one side of the
    partition may be empty.
    """
    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for root in sorted(G.vertices):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return False, _odd_cycle(parent, v, w)
    return True, dict(color)


def _odd_cycle(parent, v, w) -> tuple[str, ...]:
    """Reconstruct the odd cycle through BFS-tree paths to v and w."""
    pv = _path_to_root(parent, v)
    pw = _path_to_root(parent, w)
    anc = {x: i for i, x in enumerate(pv)}
    for j, x in enumerate(pw):
        if x in anc:
            cycle = pv[: anc[x]] + [x] + pw[:j][::-1]
            assert len(cycle) % 2 == 1
            return tuple(cycle)
    raise AssertionError("BFS tree paths must meet")


def _path_to_root(parent, v) -> list[str]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


# ---------------------------------------------------------------------------
# Vertex connectivity (Menger via unit-capacity max-flow, vertex splitting)
# ---------------------------------------------------------------------------


def vertex_connectivity(G: Graph) -> int:
    """Minimum vertex-cut size; n-1 for complete graphs, 0 if disconnected.

    Computed as the minimum of max-flow values over all non-adjacent
    source-target pairs in the vertex-split digraph.
    """
    n = G.n
    if n <= 1:
        return 0
    if G.e == n * (n - 1) // 2:
        return n - 1
    order = G.sorted_vertices()
    idx = {v: i for i, v in enumerate(order)}
    adj = [[idx[w] for w in G.neighbors(v)] for v in order]
    best = n - 1
    for s, t in itertools.combinations(range(n), 2):
        if t in adj[s]:
            continue
        flow = _vertex_disjoint_paths(n, adj, s, t, best)
        if flow < best:
            best = flow
            if best == 0:
                return 0
    return best


def _vertex_disjoint_paths(n, adj, s, t, cap) -> int:
    """Max number of internally vertex-disjoint s-t paths, stopping at cap.

    Unit-capacity flow on the split graph: node v becomes v_in -> v_out;
    arcs u_out -> v_in for each edge uv.  Nodes 2v = in, 2v+1 = out.
    """
    # residual as adjacency dict: arc -> capacity
    res: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def add_arc(a, b, c):
        res[(a, b)] = c
        res[(b, a)] = res.get((b, a), 0)
        out[a].append(b)
        out[b].append(a)

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else n)
    for v in range(n):
        for w in adj[v]:
            add_arc(2 * v + 1, 2 * w, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out[a]:
                if b not in prev and res.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            res[(a, b)] -= 1
            res[(b, a)] = res.get((b, a), 0) + 1
            b = a
        flow += 1
    return flow
