"""Planarity testing: a fast boolean left-right test for the search inner
loop, plus embedding extraction through networkx for witness construction.

The boolean test is an array-based port of the left-right algorithm; the
package test suite fuzzes it against networkx.  Extracted embeddings are
re-verified downstream by the drawing validator's own face traversal, so the
two routes stay independent.
"""

from __future__ import annotations

import networkx as nx

from .graphs import Graph


def lr_planar(n: int, edges) -> bool:
    """Boolean planarity for a simple graph on vertices 0..n-1.

    edges is a sequence of int pairs.  No embedding is produced; this is the
    hot path of the crossing search.
    """
    m = len(edges)
    if m <= 8 or n <= 4:
        return True  # K5 needs 10 edges, K33 subdivisions need 9
    if m > 3 * n - 6:
        return False

    adj = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))

    height = [-1] * n
    parent_edge = [-1] * n
    src = [-1] * m
    dst = [-1] * m
    lowpt = [0] * m
    lowpt2 = [0] * m
    nesting = [0] * m

    # phase 1: DFS orientation, lowpoints, nesting order
    roots = []
    ind = [0] * n
    for s in range(n):
        if height[s] >= 0:
            continue
        height[s] = 0
        roots.append(s)
        dfs_stack = [s]
        while dfs_stack:
            v = dfs_stack.pop()
            e = parent_edge[v]
            av = adj[v]
            descend = False
            while ind[v] < len(av):
                w, eid = av[ind[v]]
                if src[eid] < 0:
                    src[eid] = v
                    dst[eid] = w
                    lowpt[eid] = height[v]
                    lowpt2[eid] = height[v]
                    if height[w] < 0:  # tree edge: descend, finish on revisit
                        parent_edge[w] = eid
                        height[w] = height[v] + 1
                        dfs_stack.append(v)
                        dfs_stack.append(w)
                        descend = True
                        break
                    lowpt[eid] = height[w]  # back edge
                elif src[eid] != v:
                    ind[v] += 1
                    continue  # edge oriented from the other side
                nesting[eid] = 2 * lowpt[eid]
                if lowpt2[eid] < height[v]:  # chordal
                    nesting[eid] += 1
                if e >= 0:
                    if lowpt[eid] < lowpt[e]:
                        lowpt2[e] = min(lowpt[e], lowpt2[eid])
                        lowpt[e] = lowpt[eid]
                    elif lowpt[eid] > lowpt[e]:
                        lowpt2[e] = min(lowpt2[e], lowpt[eid])
                    else:
                        lowpt2[e] = min(lowpt2[e], lowpt2[eid])
                ind[v] += 1
            if descend:
                continue

    ordered = [[] for _ in range(n)]
    for eid in range(m):
        ordered[src[eid]].append(eid)
    for v in range(n):
        ordered[v].sort(key=nesting.__getitem__)

    # phase 2: LR partition test with a conflict-pair stack
    NIL = -1
    S: list[list[int]] = []  # conflict pairs [ll, lh, rl, rh]
    stack_bottom = [0] * m
    lowpt_edge = [NIL] * m
    ref: dict[int, int] = {}

    def pair_lowest(p):
        ll, lh, rl, rh = p
        if ll == NIL and lh == NIL:
            return lowpt[rl]
        if rl == NIL and rh == NIL:
            return lowpt[ll]
        a = lowpt[ll]
        b = lowpt[rl]
        return a if a < b else b

    def add_constraints(ei, e):
        pll = plh = prl = prh = NIL
        while True:  # merge return edges of ei into P.right
            Q = S.pop()
            if Q[0] != NIL or Q[1] != NIL:
                Q[0], Q[1], Q[2], Q[3] = Q[2], Q[3], Q[0], Q[1]
            if Q[0] != NIL or Q[1] != NIL:
                return False
            if lowpt[Q[2]] > lowpt[e]:
                if prl == NIL and prh == NIL:
                    prh = Q[3]
                else:
                    ref[prl] = Q[3]
                prl = Q[2]
            else:
                ref[Q[2]] = lowpt_edge[e]
            if len(S) == stack_bottom[ei]:
                break
        lp = lowpt[ei]
        while S:  # merge conflicting return edges of earlier siblings into P.left
            T = S[-1]
            if not ((T[1] != NIL and lowpt[T[1]] > lp) or (T[3] != NIL and lowpt[T[3]] > lp)):
                break
            Q = S.pop()
            if Q[3] != NIL and lowpt[Q[3]] > lp:
                Q[0], Q[1], Q[2], Q[3] = Q[2], Q[3], Q[0], Q[1]
            if Q[3] != NIL and lowpt[Q[3]] > lp:
                return False
            ref[prl] = Q[3]
            if Q[2] != NIL:
                prl = Q[2]
            if pll == NIL and plh == NIL:
                plh = Q[1]
            else:
                ref[pll] = Q[1]
            pll = Q[0]
        if pll != NIL or plh != NIL or prl != NIL or prh != NIL:
            S.append([pll, plh, prl, prh])
        return True

    def remove_back_edges(e):
        u = src[e]
        hu = height[u]
        while S and pair_lowest(S[-1]) == hu:
            S.pop()
        if S:
            P = S.pop()
            ll, lh, rl, rh = P
            while lh != NIL and dst[lh] == u:
                lh = ref.get(lh, NIL)
            if lh == NIL and ll != NIL:
                ref[ll] = rl
                ll = NIL
            while rh != NIL and dst[rh] == u:
                rh = ref.get(rh, NIL)
            if rh == NIL and rl != NIL:
                ref[rl] = ll
                rl = NIL
            S.append([ll, lh, rl, rh])
        if lowpt[e] < hu and S:  # e has a return edge
            hl = S[-1][1]
            hr = S[-1][3]
            if hl != NIL and (hr == NIL or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    skip_init = [False] * m
    ind = [0] * n
    for root in roots:
        dfs_stack = [root]
        while dfs_stack:
            v = dfs_stack.pop()
            e = parent_edge[v]
            ov = ordered[v]
            skip_final = False
            while ind[v] < len(ov):
                ei = ov[ind[v]]
                if not skip_init[ei]:
                    stack_bottom[ei] = len(S)
                    if ei == parent_edge[dst[ei]]:  # tree edge
                        dfs_stack.append(v)
                        dfs_stack.append(dst[ei])
                        skip_init[ei] = True
                        skip_final = True
                        break
                    lowpt_edge[ei] = ei  # back edge
                    S.append([NIL, NIL, ei, ei])
                if lowpt[ei] < height[v]:
                    if ind[v] == 0:
                        lowpt_edge[e] = lowpt_edge[ei]
                    elif not add_constraints(ei, e):
                        return False
                ind[v] += 1
            if skip_final:
                continue
            if e != NIL:
                remove_back_edges(e)
    return True


# ---------------------------------------------------------------------------
# Embedding extraction
# ---------------------------------------------------------------------------


def planar_rotation_system(n: int, edges) -> dict[int, tuple[int, ...]] | None:
    """Rotation system of a planar embedding on int vertices, or None.

    Deterministic: the backing graph is built in sorted order.
    """
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(sorted(tuple(sorted(e)) for e in edges))
    ok, emb = nx.check_planarity(G, counterexample=False)
    if not ok:
        return None
    data = emb.get_data()
    return {v: tuple(data[v]) for v in range(n)}


def is_planar(G: Graph):
    """Planarity of a Graph with an embedding witness.

    Returns ``(True, rotations)`` with a rotation system passing the drawing
    module's Euler traversal, or ``(False, None)``.
    """
    order = G.sorted_vertices()
    idx = {v: i for i, v in enumerate(order)}
    edges = [(idx[u], idx[v]) for u, v in G.sorted_edges()]
    rot = planar_rotation_system(G.n, edges)
    if rot is None:
        return False, None
    return True, {order[i]: tuple(order[j] for j in rot[i]) for i in range(G.n)}
