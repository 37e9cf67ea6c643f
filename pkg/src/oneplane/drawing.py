"""Combinatorial 1-plane drawings: crossing pairs plus rotation systems.

A drawing is stored purely combinatorially; the Jordan-curve language of
plane drawings is realized as the two sides of a cycle in the embedded
planarization.  Embeddings live on the sphere, so there is no distinguished
outer face and "interior/exterior" become "side A / side B".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import Graph, GraphError, edge_key

Edge = tuple[str, str]
CrossingPair = tuple[Edge, Edge]
# Planarization vertices: ("v", token) for true vertices, ("x", pair) for fakes.
PVert = tuple


def crossing_key(e1, e2) -> CrossingPair:
    """Canonical unordered pair of canonical edges."""
    a = edge_key(*e1)
    b = edge_key(*e2)
    return (a, b) if a <= b else (b, a)


# ---------------------------------------------------------------------------
# Raw data, violations, validation
# ---------------------------------------------------------------------------


@dataclass
class DrawingData:
    """Unvalidated drawing payload; the validator runs on this shape."""

    base: Graph
    crossings: tuple[CrossingPair, ...]
    rotations: dict[str, tuple[str, ...]]
    fake_rotations: dict[CrossingPair, tuple[str, str, str, str]]

    def copy(self) -> "DrawingData":
        return DrawingData(
            self.base,
            tuple(self.crossings),
            {v: tuple(r) for v, r in self.rotations.items()},
            {k: tuple(r) for k, r in self.fake_rotations.items()},
        )


class OnePlaneDrawing(DrawingData):
    """A drawing accepted by the validator.  Treat as immutable."""

    def crossing_of(self, u: str, v: str) -> CrossingPair | None:
        """The crossing pair containing edge uv, if any."""
        return self._by_edge.get(edge_key(u, v))

    @property
    def crossed_edges(self) -> frozenset[Edge]:
        return frozenset(self._by_edge)

    def _index(self) -> None:
        self._by_edge: dict[Edge, CrossingPair] = {}
        for pair in self.crossings:
            self._by_edge[pair[0]] = pair
            self._by_edge[pair[1]] = pair


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    message: str

    def line(self) -> str:
        loc = " ".join(_flat(self.where))
        return f"{self.kind} {loc}: {self.message}" if loc else f"{self.kind}: {self.message}"


def _flat(obj):
    if isinstance(obj, (tuple, list)):
        for x in obj:
            yield from _flat(x)
    else:
        yield str(obj)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        return [v.line() for v in self.violations]


class DrawingError(ValueError):
    """Raised when build_drawing is handed an invalid drawing."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(report.lines()))


def normalize_drawing_data(base, crossings, rotations, fake_rotations) -> DrawingData:
    """Bring raw input into canonical shape without judging validity."""
    xs = tuple(sorted(crossing_key(e1, e2) for e1, e2 in crossings))
    rot = {v: tuple(r) for v, r in rotations.items()}
    fr = {crossing_key(*k): tuple(r) for k, r in fake_rotations.items()}
    return DrawingData(base, xs, rot, fr)


def build_drawing(base, crossings, rotations, fake_rotations) -> OnePlaneDrawing:
    """Validate and freeze a drawing; raises DrawingError on any violation."""
    data = normalize_drawing_data(base, crossings, rotations, fake_rotations)
    report = validate_drawing(data)
    if not report.ok:
        raise DrawingError(report)
    d = OnePlaneDrawing(data.base, data.crossings, data.rotations, data.fake_rotations)
    d._index()
    return d


def validate_drawing(data: DrawingData) -> ValidationReport:
    """Check every drawing convention; the report lists all violations found.

    Structural checks run first; the Euler check runs only when the structure
    is sound enough to build the planarization.
    """
    out: list[Violation] = []
    base = data.base

    # crossing structure
    usage: dict[Edge, int] = {}
    for pair in data.crossings:
        e1, e2 = pair
        broken = False
        for e in pair:
            if e not in base.edges:
                out.append(Violation("unknown-edge", e, "crossing references a non-edge"))
                broken = True
        if broken:
            continue
        if e1 == e2:
            out.append(Violation("self-crossing", e1, "edge paired with itself"))
            continue
        if set(e1) & set(e2):
            out.append(
                Violation("adjacent-edge-crossing", pair, "crossing edges share an endpoint")
            )
        for e in pair:
            usage[e] = usage.get(e, 0) + 1
    for e, k in sorted(usage.items()):
        if k > 1:
            out.append(Violation("edge-crossed-twice", e, f"edge occurs in {k} crossing pairs"))

    # rotations at true vertices
    rot_ok = True
    for v in base.vertices:
        if v not in data.rotations:
            out.append(Violation("rotation-mismatch", (v,), "missing rotation"))
            rot_ok = False
    for v, rot in sorted(data.rotations.items()):
        if not base.has_vertex(v):
            out.append(Violation("rotation-mismatch", (v,), "rotation at unknown vertex"))
            rot_ok = False
            continue
        if sorted(rot) != sorted(base.neighbors(v)):
            out.append(
                Violation(
                    "rotation-mismatch",
                    (v,),
                    f"rotation entries {list(rot)} != incident edges {list(base.neighbors(v))}",
                )
            )
            rot_ok = False

    # fake rotations
    expected = set(data.crossings)
    for pair in sorted(expected - set(data.fake_rotations)):
        out.append(Violation("fake-rotation-mismatch", pair, "missing fake rotation"))
        rot_ok = False
    for pair in sorted(set(data.fake_rotations) - expected):
        out.append(Violation("fake-rotation-mismatch", pair, "fake rotation for unknown crossing"))
        rot_ok = False
    for pair in sorted(expected & set(data.fake_rotations)):
        cyc = data.fake_rotations[pair]
        e1, e2 = pair
        ends = set(e1) | set(e2)
        if len(ends) != 4 or len(cyc) != 4 or set(cyc) != ends:
            out.append(
                Violation("alternation", pair, f"fake rotation {list(cyc)} must list the four ends")
            )
            rot_ok = False
            continue
        s1 = set(e1)
        if any((cyc[i] in s1) == (cyc[(i + 1) % 4] in s1) for i in range(4)):
            out.append(
                Violation("alternation", pair, f"fake rotation {list(cyc)} does not alternate")
            )

    structural = [v for v in out if v.kind != "alternation"]
    if structural or not rot_ok:
        return ValidationReport(tuple(out))

    # Euler check on the induced planarization, per connected component
    d = OnePlaneDrawing(base, data.crossings, data.rotations, data.fake_rotations)
    d._index()
    P = _planarize_unchecked(d)
    for comp_id, (nv, ne, nf) in enumerate(_component_counts(P)):
        if nv - ne + nf != 2:
            out.append(
                Violation(
                    "euler",
                    (f"component{comp_id}",),
                    f"V-E+F = {nv}-{ne}+{nf} = {nv - ne + nf}, expected 2",
                )
            )
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# Planarization
# ---------------------------------------------------------------------------


@dataclass
class PlaneGraph:
    """Planarization: crossings replaced by degree-4 fake vertices, with the
    inherited rotation system and the face list it induces."""

    vertices: tuple[PVert, ...]
    edges: frozenset[tuple[PVert, PVert]]
    rotations: dict[PVert, tuple[PVert, ...]]
    faces: tuple[tuple[tuple[PVert, PVert], ...], ...] = field(repr=False)

    def is_fake(self, pv: PVert) -> bool:
        return pv[0] == "x"

    @property
    def true_vertices(self) -> tuple[PVert, ...]:
        return tuple(v for v in self.vertices if v[0] == "v")

    @property
    def fake_vertices(self) -> tuple[PVert, ...]:
        return tuple(v for v in self.vertices if v[0] == "x")

    def degree(self, pv: PVert) -> int:
        return len(self.rotations[pv])

    def has_edge(self, a: PVert, b: PVert) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges

    def neighbors(self, pv: PVert) -> tuple[PVert, ...]:
        return self.rotations[pv]


def true_vertex(token: str) -> PVert:
    return ("v", token)


def fake_vertex(pair: CrossingPair) -> PVert:
    return ("x", pair)


def planarize(D: OnePlaneDrawing) -> PlaneGraph:
    """Replace each crossing by a fake vertex; faces come from the rotation
    system by standard traversal."""
    return _planarize_unchecked(D)


def _planarize_unchecked(D: OnePlaneDrawing) -> PlaneGraph:
    verts: list[PVert] = [true_vertex(v) for v in D.base.vertices]
    verts += [fake_vertex(p) for p in D.crossings]
    edges: set[tuple[PVert, PVert]] = set()
    rotations: dict[PVert, tuple[PVert, ...]] = {}

    for v in D.base.vertices:
        row = []
        for u in D.rotations[v]:
            pair = D.crossing_of(v, u)
            row.append(true_vertex(u) if pair is None else fake_vertex(pair))
        rotations[true_vertex(v)] = tuple(row)
        for nb in row:
            edges.add(_pedge(true_vertex(v), nb))

    for pair in D.crossings:
        x = fake_vertex(pair)
        rotations[x] = tuple(true_vertex(t) for t in D.fake_rotations[pair])
        for nb in rotations[x]:
            edges.add(_pedge(x, nb))

    P = PlaneGraph(tuple(sorted(verts)), frozenset(edges), rotations, ())
    P.faces = _trace_faces(P)
    return P


def _pedge(a: PVert, b: PVert) -> tuple[PVert, PVert]:
    return (a, b) if a <= b else (b, a)


def _trace_faces(P: PlaneGraph):
    """Orbits of the next-half-edge map: from (u, v), continue with the
    neighbor following u in the rotation at v."""
    succ: dict[PVert, dict[PVert, PVert]] = {}
    for v, rot in P.rotations.items():
        d = len(rot)
        succ[v] = {rot[i]: rot[(i + 1) % d] for i in range(d)}
    seen: set[tuple[PVert, PVert]] = set()
    faces = []
    darts = sorted(
        itertools.chain.from_iterable(((a, b), (b, a)) for a, b in P.edges)
    )
    for start in darts:
        if start in seen:
            continue
        walk = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            u, v = cur
            cur = (v, succ[v][u])
        faces.append(tuple(walk))
    return tuple(faces)


def faces(P: PlaneGraph):
    """Face list as closed walks of directed edges."""
    return P.faces


def euler_check(P: PlaneGraph) -> bool:
    """Sphere-embedding consistency: V - E + F = 2 for every component
    (equivalently V - E + F = 1 + C with the outer face shared)."""
    return all(nv - ne + nf == 2 for nv, ne, nf in _component_counts(P))


def _component_counts(P: PlaneGraph):
    comp: dict[PVert, int] = {}
    cid = 0
    for s in P.vertices:
        if s in comp:
            continue
        stack = [s]
        comp[s] = cid
        while stack:
            v = stack.pop()
            for w in P.rotations[v]:
                if w not in comp:
                    comp[w] = cid
                    stack.append(w)
        cid += 1
    nv = [0] * cid
    ne = [0] * cid
    nf = [0] * cid
    for v in P.vertices:
        nv[comp[v]] += 1
        if not P.rotations[v]:
            nf[comp[v]] += 1  # isolated vertex: one face on its own sphere
    for a, b in P.edges:
        ne[comp[a]] += 1
    for face in P.faces:
        nf[comp[face[0][0]]] += 1
    return list(zip(nv, ne, nf))


# ---------------------------------------------------------------------------
# Cycles and separation
# ---------------------------------------------------------------------------


class SideAssignmentError(ValueError):
    """Inconsistent side classification: the input is not an embedded cycle."""


def _check_cycle(P: PlaneGraph, C) -> tuple[PVert, ...]:
    cyc = tuple(C)
    if len(cyc) < 3:
        raise ValueError("cycle must have at least 3 vertices")
    if len(set(cyc)) != len(cyc):
        raise ValueError("cycle repeats a vertex")
    for i, v in enumerate(cyc):
        if v not in P.rotations:
            raise ValueError(f"unknown planarization vertex {v}")
        if not P.has_edge(v, cyc[(i + 1) % len(cyc)]):
            raise ValueError(f"cycle vertices {v} and {cyc[(i + 1) % len(cyc)]} not adjacent")
    return cyc


def cycle_sides(P: PlaneGraph, C) -> tuple[frozenset, frozenset]:
    """Partition the vertices off a cycle into its two embedded sides.

    At each cycle vertex the rotation splits into two arcs between the cycle
    edges; one arc faces side A, the other side B, and the labels propagate
    over the components of P minus the cycle.
    """
    cyc = _check_cycle(P, C)
    k = len(cyc)
    on_cycle = set(cyc)
    seeds: dict[PVert, str] = {}
    seed_of_comp: dict[PVert, str] = {}
    for i, v in enumerate(cyc):
        prev = cyc[(i - 1) % k]
        nxt = cyc[(i + 1) % k]
        rot = P.rotations[v]
        d = len(rot)
        pos = {nb: j for j, nb in enumerate(rot)}
        j = (pos[nxt] + 1) % d
        side = "A"
        while rot[j] != nxt:
            if rot[j] == prev:
                side = "B"
            elif rot[j] not in on_cycle:
                w = rot[j]
                if seeds.get(w, side) != side:
                    raise SideAssignmentError(f"vertex {w} seeded on both sides")
                seeds[w] = side
            j = (j + 1) % d
    side_sets = {"A": set(), "B": set()}
    visited: set[PVert] = set()
    for s in sorted(seeds):
        if s in visited:
            continue
        label = seeds[s]
        comp = [s]
        visited.add(s)
        qi = 0
        while qi < len(comp):
            v = comp[qi]
            qi += 1
            if seeds.get(v, label) != label:
                raise SideAssignmentError(f"component of {s} touches both sides")
            for w in P.rotations[v]:
                if w not in on_cycle and w not in visited:
                    visited.add(w)
                    comp.append(w)
        side_sets[label].update(comp)
    leftovers = set(P.vertices) - on_cycle - visited
    if leftovers:
        # disconnected planarization: whole components see neither side
        raise SideAssignmentError(f"vertices not attached to the cycle: {sorted(leftovers)}")
    return frozenset(side_sets["A"]), frozenset(side_sets["B"])


def is_separating_cycle(P: PlaneGraph, C) -> bool:
    """True iff both sides of the cycle contain vertices."""
    a, b = cycle_sides(P, C)
    return bool(a) and bool(b)


def enumerate_fake_3cycles(P: PlaneGraph):
    """All 3-cycles with exactly one fake vertex, in deterministic order."""
    out = []
    for x in P.fake_vertices:
        nb = sorted(P.rotations[x])
        for a, b in itertools.combinations(nb, 2):
            if a[0] == "v" and b[0] == "v" and P.has_edge(a, b):
                out.append((a, b, x))
    return sorted(out)


def enumerate_type_I_4cycles(P: PlaneGraph, D: OnePlaneDrawing):
    """4-cycles x-y-c-z-x with exactly one fake vertex c in configuration (a):
    the two crossed edges at c continue to true vertices off the cycle.

    Configuration (b), where the two cycle half-edges at c belong to one
    crossed edge, is excluded.  Returned cycles are (x, y, c, z) with y < z.
    """
    out = []
    for c in P.fake_vertices:
        e1, e2 = c[1]
        end_edge = {}
        for tok in e1:
            end_edge[true_vertex(tok)] = e1
        for tok in e2:
            end_edge[true_vertex(tok)] = e2
        nb = sorted(P.rotations[c])
        for y, z in itertools.combinations(nb, 2):
            common = [
                x
                for x in P.rotations[y]
                if x[0] == "v" and x != z and P.has_edge(x, z)
            ]
            for x in sorted(common):
                ey, ez = end_edge[y], end_edge[z]
                if ey == ez:
                    continue  # configuration (b)
                far_y = true_vertex(ey[0] if true_vertex(ey[1]) == y else ey[1])
                far_z = true_vertex(ez[0] if true_vertex(ez[1]) == z else ez[1])
                if far_y in (x, y, z) or far_z in (x, y, z):
                    continue
                out.append((x, y, c, z))
    return sorted(out)


# ---------------------------------------------------------------------------
# Restriction and rotations
# ---------------------------------------------------------------------------


def restrict_drawing(D: OnePlaneDrawing, U) -> OnePlaneDrawing:
    """Sub-drawing induced by a vertex set: a crossing survives only when all
    four endpoints survive; rotations are filtered in place."""
    keep = set(U)
    for v in keep:
        if not D.base.has_vertex(v):
            raise GraphError(f"unknown vertex in restriction: {v!r}")
    vertices = tuple(v for v in D.base.vertices if v in keep)
    edges = [e for e in D.base.sorted_edges() if e[0] in keep and e[1] in keep]
    base = Graph(vertices, frozenset(edges))
    crossings = [
        pair
        for pair in D.crossings
        if all(t in keep for e in pair for t in e)
    ]
    rotations = {
        v: tuple(u for u in D.rotations[v] if u in keep) for v in vertices
    }
    fake_rotations = {pair: D.fake_rotations[pair] for pair in crossings}
    return build_drawing(base, crossings, rotations, fake_rotations)


def rotation(D: OnePlaneDrawing, v: str) -> tuple[str, ...]:
    """Cyclic neighbor order at a true vertex, crossed edges named by their
    far endpoints."""
    if v not in D.rotations:
        raise GraphError(f"unknown vertex: {v!r}")
    return D.rotations[v]
