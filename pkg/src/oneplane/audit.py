"""Executable structural checks on graphs and drawings.

Each audit returns a report of named checks; a check whose hypothesis fails
is reported as not applicable, never as passed.  A failed theorem check on a
valid drawing means either a bug or a mathematical counterexample, so the
CLI escalates it with a distinguished exit code.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .drawing import (
    DrawingData,
    OnePlaneDrawing,
    enumerate_fake_3cycles,
    enumerate_type_I_4cycles,
    is_separating_cycle,
    normalize_drawing_data,
    planarize,
    validate_drawing,
)
from .graphs import Graph, edge_key, find_induced_claw, max_degree, vertex_connectivity


@dataclass(frozen=True)
class AuditCheck:
    name: str
    applicable: bool
    passed: bool | None
    witness: tuple | None = None

    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.passed else "FAIL"

    def line(self) -> str:
        tail = ""
        if self.witness is not None:
            tail = " " + " ".join(str(w) for w in self.witness)
        return f"{self.name} {self.status()}{tail}"


@dataclass(frozen=True)
class AuditReport:
    checks: tuple[AuditCheck, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failures(self) -> tuple[AuditCheck, ...]:
        return tuple(c for c in self.checks if c.applicable and not c.passed)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _check(name, applicable, passed=None, witness=None) -> AuditCheck:
    if not applicable:
        return AuditCheck(name, False, None, None)
    return AuditCheck(name, True, passed, witness if not passed else None)


# ---------------------------------------------------------------------------
# Theorem-level audits
# ---------------------------------------------------------------------------


def audit_theorems(G: Graph, D: OnePlaneDrawing | None = None) -> AuditReport:
    """Degree and connectivity bounds for claw-free graphs with a 1-plane
    drawing, plus the forced-claw consequence at connectivity 7."""
    if D is not None and D.base != G:
        raise ValueError("drawing base differs from audited graph")
    claw = find_induced_claw(G)
    claw_free = claw is None
    delta = max_degree(G)
    kappa = vertex_connectivity(G)
    has_drawing = D is not None
    deg_witness = tuple(v for v in G.sorted_vertices() if G.degree(v) == delta)[:1]
    checks = (
        _check("clawfree-delta-le-10", claw_free and has_drawing, delta <= 10,
               ("delta", delta) + deg_witness),
        _check("clawfree-6conn-delta-le-8", claw_free and kappa >= 6 and has_drawing,
               delta <= 8, ("delta", delta) + deg_witness),
        _check("clawfree-kappa-le-6", claw_free and has_drawing, kappa <= 6,
               ("kappa", kappa)),
        _check("7conn-forces-claw", kappa >= 7 and has_drawing, claw is not None,
               ("kappa", kappa)),
    )
    return AuditReport(checks)


# ---------------------------------------------------------------------------
# Cycle audits
# ---------------------------------------------------------------------------


def _resolve_kappa(D: OnePlaneDrawing, assumed_kappa: int, trust: bool) -> None:
    if assumed_kappa < 0:
        raise ValueError("assumed connectivity must be nonnegative")
    if trust:
        return
    true_kappa = vertex_connectivity(D.base)
    if assumed_kappa > true_kappa:
        raise ValueError(
            f"assumed connectivity {assumed_kappa} exceeds true connectivity {true_kappa}"
        )


def audit_cycle_separation(
    D: OnePlaneDrawing, assumed_kappa: int, *, trust_assumed_kappa: bool = False
) -> AuditReport:
    """Non-separation of special planarization cycles at each connectivity
    threshold: fake 3-cycles (>= 4), type-I 4-cycles (>= 6), all 3-cycles (= 7).

    trust_assumed_kappa skips the connectivity pre-check; it exists for
    negative tests that exercise the detectors on below-threshold drawings.
    """
    _resolve_kappa(D, assumed_kappa, trust_assumed_kappa)
    P = planarize(D)
    checks = []

    if assumed_kappa >= 4:
        bad = [c for c in enumerate_fake_3cycles(P) if is_separating_cycle(P, c)]
        checks.append(_check("fake-3cycles-nonseparating", True, not bad,
                             tuple(bad[:1])))
    else:
        checks.append(_check("fake-3cycles-nonseparating", False))

    if assumed_kappa >= 6:
        bad = [c for c in enumerate_type_I_4cycles(P, D) if is_separating_cycle(P, c)]
        checks.append(_check("type-I-4cycles-nonseparating", True, not bad,
                             tuple(bad[:1])))
    else:
        checks.append(_check("type-I-4cycles-nonseparating", False))

    if assumed_kappa == 7:
        bad = [c for c in _all_3cycles(P) if is_separating_cycle(P, c)]
        checks.append(_check("all-3cycles-nonseparating", True, not bad,
                             tuple(bad[:1])))
    else:
        checks.append(_check("all-3cycles-nonseparating", False))

    return AuditReport(tuple(checks))


def _all_3cycles(P):
    out = []
    for a, b, c in itertools.combinations(sorted(P.vertices), 3):
        if P.has_edge(a, b) and P.has_edge(b, c) and P.has_edge(a, c):
            out.append((a, b, c))
    return out


# ---------------------------------------------------------------------------
# Rotation-local audits
# ---------------------------------------------------------------------------


def _arc_configurations(D: OnePlaneDrawing, u: str):
    """Configurations (x, y, S): edges ux, uy and the set S of edges strictly
    between them in the rotation at u, one arc per ordered pair, |S| >= 2."""
    rot = D.rotations[u]
    d = len(rot)
    if d < 4:
        return
    for i in range(d):
        for step in range(3, d):
            j = (i + step) % d
            x, y = rot[i], rot[j]
            between = [rot[(i + t) % d] for t in range(1, step)]
            if len(between) >= 2 and D.base.has_edge(x, y):
                yield x, y, between


def audit_rotation_constraints(
    D: OnePlaneDrawing, assumed_kappa: int, *, trust_assumed_kappa: bool = False
) -> AuditReport:
    """Local non-crossing constraints around each vertex.

    With edges ux, uy and at least two edges between them in the rotation at
    u, and xy an edge: at connectivity >= 4 the edge xy must not cross any of
    the in-between edges; at >= 6 it must not cross any edge incident with an
    in-between neighbor.  Both rotation arcs are checked for every such pair;
    the side condition of the underlying argument is not re-derived here, so
    this is the conservative reading.  At connectivity exactly 7, adjacency
    gaps at degree-k vertices (k >= 7) are forbidden at cyclic distance 3
    through k-3, and distance-2 neighbors must cross the enclosed spoke.
    """
    _resolve_kappa(D, assumed_kappa, trust_assumed_kappa)
    checks = []

    if assumed_kappa >= 4:
        bad = []
        for u in D.base.sorted_vertices():
            for x, y, between in _arc_configurations(D, u):
                pair = D.crossing_of(x, y)
                if pair is None:
                    continue
                other = pair[0] if pair[1] == edge_key(x, y) else pair[1]
                for s in between:
                    if other == edge_key(u, s):
                        bad.append((u, x, y, s))
        checks.append(_check("arc-chord-avoids-enclosed-spokes", True, not bad,
                             tuple(bad[:1])))
    else:
        checks.append(_check("arc-chord-avoids-enclosed-spokes", False))

    if assumed_kappa >= 6:
        bad = []
        for u in D.base.sorted_vertices():
            for x, y, between in _arc_configurations(D, u):
                pair = D.crossing_of(x, y)
                if pair is None:
                    continue
                other = pair[0] if pair[1] == edge_key(x, y) else pair[1]
                hit = set(other) & set(between)
                if hit:
                    bad.append((u, x, y, sorted(hit)[0], other))
        checks.append(_check("arc-chord-avoids-enclosed-neighborhoods", True, not bad,
                             tuple(bad[:1])))
    else:
        checks.append(_check("arc-chord-avoids-enclosed-neighborhoods", False))

    if assumed_kappa == 7:
        bad_far = []
        bad_near = []
        for u in D.base.sorted_vertices():
            rot = D.rotations[u]
            k = len(rot)
            if k < 7:
                continue
            for i, j in itertools.combinations(range(k), 2):
                if 3 <= j - i <= k - 3 and D.base.has_edge(rot[i], rot[j]):
                    bad_far.append((u, rot[i], rot[j]))
            for i in range(k):
                a, mid, b = rot[i], rot[(i + 1) % k], rot[(i + 2) % k]
                if D.base.has_edge(a, b):
                    pair = D.crossing_of(a, b)
                    if pair is None or edge_key(u, mid) not in pair:
                        bad_near.append((u, a, b))
        checks.append(_check("7conn-no-far-rotation-chords", True, not bad_far,
                             tuple(bad_far[:1])))
        checks.append(_check("7conn-distance2-chords-cross-spoke", True, not bad_near,
                             tuple(bad_near[:1])))
    else:
        checks.append(_check("7conn-no-far-rotation-chords", False))
        checks.append(_check("7conn-distance2-chords-cross-spoke", False))

    return AuditReport(tuple(checks))


# ---------------------------------------------------------------------------
# Mutation operators (negative-test generator)
# ---------------------------------------------------------------------------

MUTATION_OPERATORS = (
    "break-alternation",
    "cross-adjacent",
    "cross-twice",
    "drop-rotation",
    "duplicate-rotation",
    "permute-rotation",
)


def mutate(D: OnePlaneDrawing, operator: str, seed: int) -> DrawingData:
    """Deterministically damaged copy of a valid drawing; the validator must
    flag it.  The result is raw data, never a validated drawing."""
    rng = random.Random(seed)
    data = normalize_drawing_data(D.base, D.crossings, D.rotations, D.fake_rotations)

    if operator == "break-alternation":
        if not data.crossings:
            raise ValueError("drawing has no crossing to mutate")
        pair = rng.choice(sorted(data.crossings))
        e1, e2 = pair
        data.fake_rotations[pair] = (e1[0], e1[1], e2[0], e2[1])
        return data

    if operator == "cross-adjacent":
        edges = D.base.sorted_edges()
        for e1, e2 in itertools.combinations(edges, 2):
            if set(e1) & set(e2):
                data.crossings = data.crossings + ((e1, e2),)
                data.fake_rotations[(e1, e2)] = (e1[0], e2[0], e1[1], e2[1])
                return data
        raise ValueError("no adjacent edge pair available")

    if operator == "cross-twice":
        edges = D.base.sorted_edges()
        disjoint = [
            (e1, e2)
            for e1, e2 in itertools.combinations(edges, 2)
            if not set(e1) & set(e2)
        ]
        if not disjoint:
            raise ValueError("no disjoint edge pair available")
        e1, e2 = rng.choice(disjoint)
        extra = ((e1, e2), (e1, e2))
        data.crossings = data.crossings + extra
        data.fake_rotations[(e1, e2)] = (e1[0], e2[0], e1[1], e2[1])
        return data

    if operator == "drop-rotation":
        v = rng.choice([v for v in D.base.sorted_vertices() if D.base.degree(v) >= 1])
        rot = data.rotations[v]
        k = rng.randrange(len(rot))
        data.rotations[v] = rot[:k] + rot[k + 1 :]
        return data

    if operator == "duplicate-rotation":
        v = rng.choice([v for v in D.base.sorted_vertices() if D.base.degree(v) >= 1])
        rot = data.rotations[v]
        k = rng.randrange(len(rot))
        data.rotations[v] = rot + (rot[k],)
        return data

    if operator == "permute-rotation":
        candidates = [v for v in D.base.sorted_vertices() if D.base.degree(v) >= 3]
        rng.shuffle(candidates)
        for v in candidates:
            original = data.rotations[v]
            for _ in range(200):
                perm = list(original)
                rng.shuffle(perm)
                if tuple(perm) == original:
                    continue
                data.rotations[v] = tuple(perm)
                report = validate_drawing(data)
                if any(viol.kind == "euler" for viol in report.violations):
                    return data
            data.rotations[v] = original
        raise ValueError("could not find a rotation permutation breaking the embedding")

    raise ValueError(f"unknown mutation operator: {operator!r}")
