"""Exact 1-planarity search for small graphs.

The search walks edges in lexicographic order; each edge is either left
uncrossed or paired with a later, not-yet-assigned, vertex-disjoint edge.
After every assignment the planarization of the decided part must stay
planar (that subdrawing exists inside any completing 1-plane drawing, so the
prune is exact), and the crossing count window derived from the planar
density bound must stay satisfiable.  A refutation is therefore a complete
proof; a witness is rebuilt into a validated drawing.

The search space splits into a fixed task list independent of the worker
count, so the oracle is deterministic under any parallelism.
"""

from __future__ import annotations

import concurrent.futures
import multiprocessing
from dataclasses import dataclass

from .drawing import OnePlaneDrawing, build_drawing
from .graphs import Graph, edge_key
from .planarity import is_planar, lr_planar, planar_rotation_system

DEFAULT_NODE_LIMIT = 5_000_000
_SPLIT_DEPTH = 2

__all__ = [
    "OracleResult",
    "OracleBudgetError",
    "find_one_planar_drawing",
    "min_crossings_one_planar",
    "is_planar",
]


@dataclass(frozen=True)
class OracleResult:
    """Outcome of a crossing search.

    status is one of "witness", "refuted", "budget-exceeded"; a witness
    carries the validated drawing and its genuine crossing count.
    """

    status: str
    drawing: OnePlaneDrawing | None = None
    crossings: int | None = None
    nodes: int = 0

    @property
    def is_witness(self) -> bool:
        return self.status == "witness"

    @property
    def is_refuted(self) -> bool:
        return self.status == "refuted"


class OracleBudgetError(RuntimeError):
    """An exact answer was required but the node budget ran out."""


class _Budget(Exception):
    pass


# ---------------------------------------------------------------------------
# Core DFS over crossing assignments (int-indexed)
# ---------------------------------------------------------------------------


class _SearchState:
    """Decided part of the drawing: partner map plus its planarization."""

    def __init__(self, n: int, edges: list[tuple[int, int]], max_crossings: int):
        self.n = n
        self.edges = edges
        self.m = len(edges)
        self.max_crossings = max_crossings
        self.need = max(0, self.m - (3 * n - 6)) if n >= 3 else 0
        self.partner: list[int | None] = [None] * self.m
        self.pedges: list[tuple[int, int]] = []
        self.pairs = 0
        self.undecided = self.m
        # union-find with rollback: additions that close no cycle keep planarity
        cap = n + self.m // 2 + 1
        self._uf = list(range(cap))
        self._size = [1] * cap
        self._trail: list[tuple[int, int]] = []

    def _find(self, x: int) -> int:
        uf = self._uf
        while uf[x] != x:
            x = uf[x]
        return x

    def _union(self, x: int, y: int) -> bool:
        rx, ry = self._find(x), self._find(y)
        if rx == ry:
            return False
        if self._size[rx] < self._size[ry]:
            rx, ry = ry, rx
        self._uf[ry] = rx
        self._size[rx] += self._size[ry]
        self._trail.append((rx, ry))
        return True

    def _rollback(self, mark: int) -> None:
        while len(self._trail) > mark:
            rx, ry = self._trail.pop()
            self._uf[ry] = ry
            self._size[rx] -= self._size[ry]

    # -- feasibility ------------------------------------------------------

    def euler_window_ok(self, extra_pairs: int, undecided_after: int) -> bool:
        future = min(undecided_after // 2, self.max_crossings - self.pairs - extra_pairs)
        return self.pairs + extra_pairs + future >= self.need

    # -- decisions (uncrossed / paired), with undo marks -------------------

    def decide_uncrossed(self, i: int):
        a, b = self.edges[i]
        self.partner[i] = -1
        self.pedges.append((a, b))
        self.undecided -= 1
        mark = len(self._trail)
        acyclic = self._union(a, b)
        return mark, acyclic

    def undo_uncrossed(self, i: int, mark: int) -> None:
        self._rollback(mark)
        self.pedges.pop()
        self.partner[i] = None
        self.undecided += 1

    def decide_pair(self, i: int, j: int):
        a, b = self.edges[i]
        c, d = self.edges[j]
        x = self.n + self.pairs
        self.partner[i] = j
        self.partner[j] = i
        self.pedges.extend(((x, a), (x, b), (x, c), (x, d)))
        self.pairs += 1
        self.undecided -= 2
        mark = len(self._trail)
        acyclic = True
        for y in (a, b, c, d):
            if not self._union(x, y):
                acyclic = False
        return mark, acyclic

    def undo_pair(self, i: int, j: int, mark: int) -> None:
        self._rollback(mark)
        del self.pedges[-4:]
        self.pairs -= 1
        self.undecided += 2
        self.partner[i] = None
        self.partner[j] = None

    def planar(self) -> bool:
        return lr_planar(self.n + self.pairs, self.pedges)

    def apply_prefix(self, prefix) -> None:
        """Replay already-validated decisions."""
        for i, j in prefix:
            if j < 0:
                self.decide_uncrossed(i)
            else:
                self.decide_pair(i, j)

    def next_undecided(self, i: int) -> int:
        while i < self.m and self.partner[i] is not None:
            i += 1
        return i

    def partner_candidates(self, i: int):
        a, b = self.edges[i]
        for j in range(i + 1, self.m):
            if self.partner[j] is not None:
                continue
            c, d = self.edges[j]
            if c == a or c == b or d == a or d == b:
                continue
            yield j


def _dfs(state: _SearchState, i: int, node_limit: int, counter: list[int]):
    """First full assignment in branch order, or None. Raises _Budget."""
    i = state.next_undecided(i)
    if i == state.m:
        return list(state.partner)
    counter[0] += 1
    if counter[0] > node_limit:
        raise _Budget
    if state.euler_window_ok(0, state.undecided - 1):
        mark, acyclic = state.decide_uncrossed(i)
        if acyclic or state.planar():
            hit = _dfs(state, i + 1, node_limit, counter)
            if hit is not None:
                return hit
        state.undo_uncrossed(i, mark)
    if state.pairs < state.max_crossings and state.euler_window_ok(1, state.undecided - 2):
        for j in state.partner_candidates(i):
            mark, acyclic = state.decide_pair(i, j)
            if acyclic or state.planar():
                hit = _dfs(state, i + 1, node_limit, counter)
                if hit is not None:
                    return hit
            state.undo_pair(i, j, mark)
    return None


# ---------------------------------------------------------------------------
# Task decomposition (fixed, worker-count independent)
# ---------------------------------------------------------------------------


def _make_tasks(n, edges, max_crossings):
    """Branch the first _SPLIT_DEPTH decision levels, with full pruning,
    into an ordered prefix list."""
    tasks: list[tuple[tuple[int, int], ...]] = []
    state = _SearchState(n, list(edges), max_crossings)

    def expand(i, depth, prefix):
        i = state.next_undecided(i)
        if i == state.m or depth == _SPLIT_DEPTH:
            tasks.append(tuple(prefix))
            return
        if state.euler_window_ok(0, state.undecided - 1):
            mark, acyclic = state.decide_uncrossed(i)
            if acyclic or state.planar():
                prefix.append((i, -1))
                expand(i + 1, depth + 1, prefix)
                prefix.pop()
            state.undo_uncrossed(i, mark)
        if state.pairs < state.max_crossings and state.euler_window_ok(1, state.undecided - 2):
            for j in state.partner_candidates(i):
                mark, acyclic = state.decide_pair(i, j)
                if acyclic or state.planar():
                    prefix.append((i, j))
                    expand(i + 1, depth + 1, prefix)
                    prefix.pop()
                state.undo_pair(i, j, mark)

    expand(0, 0, [])
    return tasks


def _run_task(args):
    n, edges, max_crossings, prefix, node_limit = args
    state = _SearchState(n, list(edges), max_crossings)
    state.apply_prefix(prefix)
    counter = [0]
    try:
        hit = _dfs(state, 0, node_limit, counter)
    except _Budget:
        return ("budget", None, counter[0])
    if hit is None:
        return ("refuted", None, counter[0])
    return ("witness", hit, counter[0])


# ---------------------------------------------------------------------------
# Witness reconstruction
# ---------------------------------------------------------------------------


def _alternates(cyc, ends1) -> bool:
    return all((cyc[i] in ends1) != (cyc[(i + 1) % 4] in ends1) for i in range(4))


def _reconstruct(G: Graph, order, edges_int, partner) -> OnePlaneDrawing:
    """Turn a complete assignment into a validated drawing.

    The planar embedding of the final planarization may leave a fake vertex
    with a non-alternating rotation; such a pair never actually crosses and
    is dissolved, keeping only genuine crossings.
    """
    n = G.n
    pairs = [(i, partner[i]) for i in range(len(partner)) if partner[i] not in (-1, None) and i < partner[i]]
    pedges = [edges_int[i] for i in range(len(partner)) if partner[i] == -1]
    for p, (i, j) in enumerate(pairs):
        x = n + p
        a, b = edges_int[i]
        c, d = edges_int[j]
        pedges.extend(((x, a), (x, b), (x, c), (x, d)))
    rot = planar_rotation_system(n + len(pairs), pedges)
    if rot is None:
        raise AssertionError("final planarization must be planar")

    def tok(v: int) -> str:
        return order[v]

    fake_far: dict[tuple[int, int], dict[int, int]] = {}
    for p, (i, j) in enumerate(pairs):
        a, b = edges_int[i]
        c, d = edges_int[j]
        fake_far[(n + p, a)] = b
        fake_far[(n + p, b)] = a
        fake_far[(n + p, c)] = d
        fake_far[(n + p, d)] = c

    rotations = {}
    for v in range(n):
        row = []
        for w in rot[v]:
            row.append(tok(w) if w < n else tok(fake_far[(w, v)]))
        rotations[tok(v)] = tuple(row)

    crossings = []
    fake_rotations = {}
    for p, (i, j) in enumerate(pairs):
        e1 = edge_key(tok(edges_int[i][0]), tok(edges_int[i][1]))
        e2 = edge_key(tok(edges_int[j][0]), tok(edges_int[j][1]))
        cyc = tuple(tok(w) for w in rot[n + p])
        if not _alternates(cyc, set(e1)):
            continue  # spurious pair: the embedding separates the two edges
        crossings.append((e1, e2))
        fake_rotations[(e1, e2)] = cyc
    return build_drawing(G, crossings, rotations, fake_rotations)


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------


def find_one_planar_drawing(
    G: Graph,
    max_crossings: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    workers: int = 1,
) -> OracleResult:
    """Search for a 1-plane drawing of G with at most max_crossings crossings.

    Refutation is exact.  node_limit bounds the nodes of each search subtree
    in the fixed task decomposition; exceeding it anywhere without an earlier
    witness yields a budget-exceeded result.  The outcome, including the
    witness drawing, does not depend on the worker count.
    """
    order = G.sorted_vertices()
    idx = {v: i for i, v in enumerate(order)}
    edges_int = [(idx[u], idx[v]) for u, v in G.sorted_edges()]
    n = G.n

    # planar fast path, identical to the all-uncrossed branch of the search
    if lr_planar(n, edges_int):
        partner = [-1] * len(edges_int)
        return OracleResult("witness", _reconstruct(G, order, edges_int, partner), 0, 0)
    if max_crossings <= 0:
        return OracleResult("refuted", nodes=0)

    tasks = _make_tasks(n, edges_int, max_crossings)
    payloads = [(n, edges_int, max_crossings, prefix, node_limit) for prefix in tasks]

    results: list[tuple[str, list | None, int]] = []
    if workers <= 1 or len(payloads) <= 1:
        budget_seen = False
        total = 0
        for payload in payloads:
            status, hit, used = _run_task(payload)
            total += used
            if status == "witness":
                return OracleResult(
                    "witness", *_witness_fields(G, order, edges_int, hit), nodes=total
                )
            budget_seen |= status == "budget"
        return OracleResult("budget-exceeded" if budget_seen else "refuted", nodes=total)

    ctx = multiprocessing.get_context("fork")
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
        futures = [pool.submit(_run_task, payload) for payload in payloads]
        budget_seen = False
        total = 0
        hit_result = None
        for k, fut in enumerate(futures):
            status, hit, used = fut.result()
            total += used
            if status == "witness":
                hit_result = hit
                for later in futures[k + 1 :]:
                    later.cancel()
                break
            budget_seen |= status == "budget"
    if hit_result is not None:
        return OracleResult(
            "witness", *_witness_fields(G, order, edges_int, hit_result), nodes=total
        )
    return OracleResult("budget-exceeded" if budget_seen else "refuted", nodes=total)


def _witness_fields(G, order, edges_int, hit):
    drawing = _reconstruct(G, order, edges_int, hit)
    return drawing, len(drawing.crossings)


def min_crossings_one_planar(
    G: Graph,
    cap: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    workers: int = 1,
) -> int | None:
    """Least crossing count <= cap admitting a drawing, or None.

    Each refusal below the answer is a complete search, so the returned
    value is exactly minimal.
    """
    for c in range(cap + 1):
        res = find_one_planar_drawing(G, c, node_limit=node_limit, workers=workers)
        if res.is_witness:
            return c
        if res.status == "budget-exceeded":
            raise OracleBudgetError(
                f"node budget exhausted at max_crossings={c}; raise node_limit for an exact answer"
            )
    return None
