"""Extremal fixture families, each bundled with a validated drawing.

The base drawings are frozen literals in :mod:`oneplane._figdata`; the two
gluing constructions (nesting copies inside the inner triangle, attaching a
pendant path) operate purely on rotation systems.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _figdata
from .drawing import OnePlaneDrawing, build_drawing
from .graphs import Graph, build_graph


@dataclass(frozen=True)
class Fixture:
    """A named graph + drawing with the structural claims it must satisfy."""

    name: str
    graph: Graph
    drawing: OnePlaneDrawing
    claims: dict

    def __repr__(self) -> str:
        return f"Fixture({self.name!r}, n={self.graph.n}, e={self.graph.e})"


def _from_data(name: str, data: dict, claims: dict) -> Fixture:
    G = build_graph(data["vertices"], data["edges"])
    D = build_drawing(G, data["crossings"], data["rotations"], data["fake_rotations"])
    return Fixture(name, G, D, claims)


# ---------------------------------------------------------------------------
# Base fixtures
# ---------------------------------------------------------------------------


def gen_h0() -> Fixture:
    """11-vertex claw-free drawing with maximum degree 10 (at u) and
    connectivity 3; the seed of the chain construction."""
    return _from_data("h0", _figdata.H0, {"delta": 10, "kappa": 3, "claw_free": True})


def gen_g1() -> Fixture:
    """11-vertex claw-free drawing whose dominating vertex u has degree 10."""
    return gen_gk(1)


def gen_fig1_left() -> Fixture:
    """10-vertex 6-connected claw-free drawing with maximum degree 8."""
    return _from_data(
        "fig1-left", _figdata.SIXCONN_LEFT, {"delta": 8, "kappa": 6, "claw_free": True}
    )


def gen_fig1_right() -> Fixture:
    """11-vertex 6-connected claw-free drawing with maximum degree 8."""
    return _from_data(
        "fig1-right", _figdata.SIXCONN_RIGHT, {"delta": 8, "kappa": 6, "claw_free": True}
    )


def gen_fig5_ii() -> Fixture:
    """9-vertex 4-connected claw-free drawing with maximum degree 8."""
    return _from_data(
        "fig5-ii", _figdata.FOURCONN_D8, {"delta": 8, "kappa": 4, "claw_free": True}
    )


def gen_k2222() -> Fixture:
    """Complete 4-partite graph with parts of size 2 (complement of a perfect
    matching on 8 vertices), 6-connected and 6-regular.

    The 6-crossing drawing was discovered once by the exhaustive oracle and
    frozen; tools/regen_fixtures.py repeats the discovery.
    """
    return _from_data("k2222", _figdata.K2222, {"delta": 6, "kappa": 6, "claw_free": True})


# ---------------------------------------------------------------------------
# Chain gluing: nest a fresh copy inside the inner triangle
# ---------------------------------------------------------------------------

_CHAIN_OUTER = ("xp", "yp", "zp")
_CHAIN_INNER = ("x", "y", "z")
# at each inner-triangle vertex, the empty rotation gap faces the other two
_CHAIN_GAPS = {"x": ("y", "z"), "y": ("z", "x"), "z": ("x", "y")}


def _cyclic_arc(rot, frm, to):
    """Entries strictly between frm and to, walking forward cyclically."""
    i = rot.index(frm)
    out = []
    j = (i + 1) % len(rot)
    while rot[j] != to:
        out.append(rot[j])
        j = (j + 1) % len(rot)
    return out


def _splice_after(rot, a, b, arc):
    """Insert arc into the gap a -> b of a cyclic order (a, b adjacent)."""
    i = rot.index(a)
    assert rot[(i + 1) % len(rot)] == b, f"gap {a}->{b} not empty in {rot}"
    head = rot[: i + 1]
    tail = rot[i + 1 :]
    return tuple(head) + tuple(arc) + tuple(tail)


def glue_h0_chain(m: int) -> Fixture:
    """Chain m copies of the base fixture by identifying each fresh copy's
    outer triangle with the previous copy's inner triangle, nesting the copy
    inside that face.  n = 11 + 8(m-1)."""
    if m < 1:
        raise ValueError(f"chain length must be >= 1, got {m}")
    data = _figdata.H0
    h0_rot = {v: tuple(r) for v, r in data["rotations"].items()}

    def copy_map(i, prev_inner):
        ren = {v: (v if i == 1 else f"{v}{i}") for v in data["vertices"]}
        if i > 1:
            for outer, inner in zip(_CHAIN_OUTER, _CHAIN_INNER):
                ren[outer] = prev_inner[inner]
        return ren

    vertices: list[str] = []
    edges: set = set()
    crossings: list = []
    rotations: dict[str, tuple[str, ...]] = {}
    fake_rotations: dict = {}

    prev_inner = {}
    for i in range(1, m + 1):
        ren = copy_map(i, prev_inner)
        for v in data["vertices"]:
            if i > 1 and v in _CHAIN_OUTER:
                continue
            vertices.append(ren[v])
        for u, v in data["edges"]:
            e = tuple(sorted((ren[u], ren[v])))
            edges.add(e)
        for (e1, e2) in data["crossings"]:
            m1 = tuple(sorted((ren[e1[0]], ren[e1[1]])))
            m2 = tuple(sorted((ren[e2[0]], ren[e2[1]])))
            pair = (m1, m2) if m1 <= m2 else (m2, m1)
            crossings.append(pair)
            cyc = data["fake_rotations"][(e1, e2)]
            fake_rotations[pair] = tuple(ren[t] for t in cyc)
        for v in data["vertices"]:
            mapped = tuple(ren[t] for t in h0_rot[v])
            if i > 1 and v in _CHAIN_OUTER:
                # splice the copy's arc into the host's empty triangle gap
                inner = _CHAIN_INNER[_CHAIN_OUTER.index(v)]
                gap_a, gap_b = _CHAIN_GAPS[inner]
                host = prev_inner[inner]
                arc = _cyclic_arc(mapped, prev_inner[gap_a], prev_inner[gap_b])
                rotations[host] = _splice_after(
                    rotations[host], prev_inner[gap_a], prev_inner[gap_b], arc
                )
            else:
                rotations[ren[v]] = mapped
        prev_inner = {v: ren[v] for v in _CHAIN_INNER}

    G = build_graph(vertices, sorted(edges))
    D = build_drawing(G, crossings, rotations, fake_rotations)
    name = "h0" if m == 1 else f"h0-chain-{m}"
    return Fixture(name, G, D, {"delta": 10, "kappa": 3, "claw_free": True})


# ---------------------------------------------------------------------------
# Pendant-path attachment
# ---------------------------------------------------------------------------


def gen_gk(k: int) -> Fixture:
    """Attach a path of k vertices to the base graph, sharing its endpoint
    with the distinguished vertex v; the path lives in a face at v.
    n = 11 + (k-1); the dominating-vertex degree stays 10."""
    if k < 1:
        raise ValueError(f"path order must be >= 1, got {k}")
    data = _figdata.G1
    vertices = list(data["vertices"])
    edges = list(data["edges"])
    rotations = {v: tuple(r) for v, r in data["rotations"].items()}
    tail = ["v"] + [f"p{i}" for i in range(1, k)]
    for i in range(1, k):
        vertices.append(tail[i])
        edges.append(tuple(sorted((tail[i - 1], tail[i]))))
    if k > 1:
        rotations["v"] = rotations["v"] + ("p1",)
        for i in range(1, k):
            nxt = (tail[i + 1],) if i + 1 < k else ()
            rotations[tail[i]] = (tail[i - 1],) + nxt
    G = build_graph(vertices, edges)
    D = build_drawing(G, data["crossings"], rotations, data["fake_rotations"])
    return Fixture(f"g{k}", G, D, {"delta": 10, "kappa": 1, "claw_free": True})


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def catalog() -> list[Fixture]:
    """Every corpus fixture in deterministic order."""
    out = [gen_h0()]
    out += [glue_h0_chain(m) for m in range(2, 5)]
    out += [gen_gk(k) for k in range(1, 6)]
    out += [gen_fig1_left(), gen_fig1_right(), gen_k2222(), gen_fig5_ii()]
    return out


def fixture_by_name(name: str) -> Fixture:
    for fx in catalog():
        if fx.name == name:
            return fx
    raise KeyError(f"unknown fixture: {name!r}")
