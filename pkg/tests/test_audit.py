"""Tests for the structural audits and mutation operators."""

import itertools

import pytest

from oneplane.audit import (
    MUTATION_OPERATORS,
    audit_cycle_separation,
    audit_rotation_constraints,
    audit_theorems,
    mutate,
)
from oneplane.drawing import build_drawing, validate_drawing
from oneplane.generators import (
    catalog,
    gen_fig1_left,
    gen_fig5_ii,
    gen_h0,
)
from oneplane.graphs import build_graph


def drawn_k5():
    G = build_graph(list("abcde"), list(itertools.combinations("abcde", 2)))
    rotations = {
        "a": ("e", "b", "d", "c"),
        "b": ("c", "d", "a", "e"),
        "c": ("a", "d", "b", "e"),
        "d": ("c", "a", "e", "b"),
        "e": ("c", "b", "d", "a"),
    }
    return build_drawing(G, [(("a", "b"), ("d", "e"))], rotations,
                         {(("a", "b"), ("d", "e")): ("a", "e", "b", "d")})


def k5_with_inner_witness():
    """K5 drawing plus a vertex w drawn inside the region bounded by the fake
    3-cycle a-d-crossing: that cycle separates w from the rest."""
    G = build_graph(
        list("abcdew"),
        list(itertools.combinations("abcde", 2)) + [("a", "w"), ("d", "w")],
    )
    rotations = {
        "a": ("e", "b", "w", "d", "c"),
        "b": ("c", "d", "a", "e"),
        "c": ("a", "d", "b", "e"),
        "d": ("c", "a", "w", "e", "b"),
        "e": ("c", "b", "d", "a"),
        "w": ("a", "d"),
    }
    return build_drawing(G, [(("a", "b"), ("d", "e"))], rotations,
                         {(("a", "b"), ("d", "e")): ("a", "e", "b", "d")})


def crossed_spoke_fixture():
    """Vertex u with rotation [x, s1, s2, y], edge xy crossing the enclosed
    spoke u-s1: the arc between ux and uy holds two edges, so the chord
    violates the local non-crossing constraints."""
    G = build_graph(
        ["u", "x", "y", "s1", "s2"],
        [("u", "x"), ("u", "s1"), ("u", "s2"), ("u", "y"), ("x", "y")],
    )
    rotations = {
        "u": ("x", "s1", "s2", "y"),
        "x": ("u", "y"),
        "y": ("u", "x"),
        "s1": ("u",),
        "s2": ("u",),
    }
    crossings = [(("s1", "u"), ("x", "y"))]
    fake_rotations = {(("s1", "u"), ("x", "y")): ("u", "x", "s1", "y")}
    return build_drawing(G, crossings, rotations, fake_rotations)


# ---------------------------------------------------------------------------
# Theorem audit
# ---------------------------------------------------------------------------


def test_theorems_pass_on_every_fixture():
    for fx in catalog():
        report = audit_theorems(fx.graph, fx.drawing)
        assert report.ok, (fx.name, [c.line() for c in report.failures])


def test_theorems_not_applicable_without_drawing():
    fx = gen_h0()
    report = audit_theorems(fx.graph, None)
    assert all(not c.applicable for c in report.checks)


def test_theorems_on_star_are_inapplicable():
    G = build_graph(list("cxyz"), [("c", "x"), ("c", "y"), ("c", "z")])
    rot = {"c": ("x", "y", "z"), "x": ("c",), "y": ("c",), "z": ("c",)}
    D = build_drawing(G, [], rot, {})
    report = audit_theorems(G, D)
    by_name = {c.name: c for c in report.checks}
    assert not by_name["clawfree-delta-le-10"].applicable  # has a claw
    assert not by_name["clawfree-6conn-delta-le-8"].applicable
    assert not by_name["clawfree-kappa-le-6"].applicable
    assert not by_name["7conn-forces-claw"].applicable  # kappa = 1


def test_theorems_applicability_never_reports_pass():
    fx = gen_h0()
    report = audit_theorems(fx.graph, None)
    for c in report.checks:
        assert c.passed is None


def test_theorem_t2_applicable_on_six_connected():
    fx = gen_fig1_left()
    report = audit_theorems(fx.graph, fx.drawing)
    by_name = {c.name: c for c in report.checks}
    assert by_name["clawfree-6conn-delta-le-8"].applicable
    assert by_name["clawfree-6conn-delta-le-8"].passed


def test_theorems_reject_mismatched_drawing():
    fx = gen_h0()
    other = gen_fig5_ii()
    with pytest.raises(ValueError):
        audit_theorems(fx.graph, other.drawing)


# ---------------------------------------------------------------------------
# Cycle-separation audits
# ---------------------------------------------------------------------------


def test_cycle_separation_passes_on_fixture_corpus():
    for fx in catalog():
        from oneplane.graphs import vertex_connectivity

        ak = min(vertex_connectivity(fx.graph), 6)
        report = audit_cycle_separation(fx.drawing, ak)
        assert report.ok, fx.name


def test_cycle_separation_vacuous_without_crossings():
    G = build_graph(list("abc"), [("a", "b"), ("b", "c"), ("a", "c")])
    rot = {"a": ("b", "c"), "b": ("c", "a"), "c": ("a", "b")}
    D = build_drawing(G, [], rot, {})
    report = audit_cycle_separation(D, 2, trust_assumed_kappa=True)
    by_name = {c.name: c for c in report.checks}
    assert not by_name["fake-3cycles-nonseparating"].applicable


def test_cycle_separation_rejects_inflated_kappa():
    fx = gen_h0()  # true connectivity 3
    with pytest.raises(ValueError, match="exceeds true connectivity"):
        audit_cycle_separation(fx.drawing, 4)


def test_cycle_separation_detects_separating_fake_3cycle():
    D = k5_with_inner_witness()
    report = audit_cycle_separation(D, 4, trust_assumed_kappa=True)
    by_name = {c.name: c for c in report.checks}
    chk = by_name["fake-3cycles-nonseparating"]
    assert chk.applicable and not chk.passed
    (cycle,) = chk.witness
    assert {pv[1] for pv in cycle if pv[0] == "v"} == {"a", "d"}


# ---------------------------------------------------------------------------
# Rotation-constraint audits
# ---------------------------------------------------------------------------


def test_rotation_constraints_pass_on_fixture_corpus():
    from oneplane.graphs import vertex_connectivity

    for fx in catalog():
        ak = min(vertex_connectivity(fx.graph), 6)
        report = audit_rotation_constraints(fx.drawing, ak)
        assert report.ok, fx.name


def test_rotation_constraints_vacuous_on_plane_drawing():
    fx = gen_h0()
    from oneplane.drawing import restrict_drawing

    D = restrict_drawing(fx.drawing, ["x", "y", "z", "s"])  # uncrossed piece
    assert D.crossings == ()
    report = audit_rotation_constraints(D, 4, trust_assumed_kappa=True)
    for c in report.checks:
        if c.applicable:
            assert c.passed


def test_rotation_constraints_detect_crossed_enclosed_spoke():
    D = crossed_spoke_fixture()
    report = audit_rotation_constraints(D, 4, trust_assumed_kappa=True)
    by_name = {c.name: c for c in report.checks}
    chk = by_name["arc-chord-avoids-enclosed-spokes"]
    assert chk.applicable and not chk.passed
    u, x, y, s = chk.witness[0]
    assert u == "u" and {x, y} == {"x", "y"} and s == "s1"


def test_rotation_constraints_detect_crossed_enclosed_neighborhood():
    D = crossed_spoke_fixture()
    report = audit_rotation_constraints(D, 6, trust_assumed_kappa=True)
    by_name = {c.name: c for c in report.checks}
    chk = by_name["arc-chord-avoids-enclosed-neighborhoods"]
    assert chk.applicable and not chk.passed


def test_degree7_clauses_require_degree_seven():
    D = drawn_k5()
    report = audit_rotation_constraints(D, 7, trust_assumed_kappa=True)
    by_name = {c.name: c for c in report.checks}
    # all vertices have degree 4 < 7: the checks hold vacuously
    assert by_name["7conn-no-far-rotation-chords"].passed
    assert by_name["7conn-distance2-chords-cross-spoke"].passed


def test_degree7_far_chord_flagged_on_wheel():
    # hub h with 7 spokes and the full rim: rim chords at distance 1 only,
    # so clauses hold; adding a far chord v0-v3 breaks clause (i)
    vs = ["h"] + [f"v{i}" for i in range(7)]
    rim = [(f"v{i}", f"v{(i + 1) % 7}") for i in range(7)]
    spokes = [("h", f"v{i}") for i in range(7)]
    G = build_graph(vs, spokes + rim + [("v0", "v3")])
    rot = {"h": tuple(f"v{i}" for i in range(7))}
    for i in range(7):
        entries = [f"v{(i - 1) % 7}", f"v{(i + 1) % 7}", "h"]
        if i == 0:
            entries = ["v6", "v3", "v1", "h"]  # chord drawn outside the rim
        if i == 3:
            entries = ["v2", "v0", "v4", "h"]
        rot[f"v{i}"] = tuple(entries)
    D = build_drawing(G, [], rot, {})
    report = audit_rotation_constraints(D, 7, trust_assumed_kappa=True)
    by_name = {c.name: c for c in report.checks}
    chk = by_name["7conn-no-far-rotation-chords"]
    assert chk.applicable and not chk.passed
    assert chk.witness[0] == ("h", "v0", "v3")


# ---------------------------------------------------------------------------
# Mutation operators
# ---------------------------------------------------------------------------


EXPECTED_VIOLATION = {
    "break-alternation": "alternation",
    "cross-adjacent": "adjacent-edge-crossing",
    "cross-twice": "edge-crossed-twice",
    "drop-rotation": "rotation-mismatch",
    "duplicate-rotation": "rotation-mismatch",
    "permute-rotation": "euler",
}


@pytest.mark.parametrize("operator", MUTATION_OPERATORS)
def test_each_mutation_is_detected(operator):
    for fixture in (drawn_k5, gen_h0):
        D = fixture() if fixture is drawn_k5 else fixture().drawing
        raw = mutate(D, operator, seed=1)
        report = validate_drawing(raw)
        kinds = [v.kind for v in report.violations]
        assert kinds, operator
        assert EXPECTED_VIOLATION[operator] in kinds


def test_break_alternation_is_exactly_one_alternation_violation():
    raw = mutate(drawn_k5(), "break-alternation", seed=1)
    report = validate_drawing(raw)
    kinds = [v.kind for v in report.violations]
    assert kinds.count("alternation") == 1


def test_mutations_are_deterministic():
    a = mutate(gen_h0().drawing, "drop-rotation", seed=7)
    b = mutate(gen_h0().drawing, "drop-rotation", seed=7)
    assert a.rotations == b.rotations


def test_unknown_operator_rejected():
    with pytest.raises(ValueError, match="unknown mutation operator"):
        mutate(drawn_k5(), "scramble", seed=0)


def test_unmutated_data_stays_valid():
    D = gen_h0().drawing
    raw = mutate(D, "drop-rotation", seed=3)
    # the original drawing is untouched by mutation
    assert validate_drawing(D).ok
    assert not validate_drawing(raw).ok
