"""Line-oriented text format for graphs and drawings, with byte-stable
canonical serialization.

Grammar (UTF-8, ``#`` starts a comment, tokens whitespace-separated)::

    graph <name>
    v <token>
    e <tok> <tok>
    x <a> <b> <c> <d>              # edge ab crosses edge cd
    rot <v> : <tok> <tok> ...      # ccw neighbor order; crossed edges named
                                   # by their far endpoint
    xrot <a> <b> <c> <d> : <p> <q> <r> <s>
    end

Canonical form: vertices sorted, edges sorted with the smaller endpoint
first, crossings sorted, cyclic orders rotated to start at their smallest
token.  serialize(parse(text)) is byte-identical to the canonical form.
"""

from __future__ import annotations

from .drawing import (
    DrawingData,
    DrawingError,
    OnePlaneDrawing,
    build_drawing,
    crossing_key,
    normalize_drawing_data,
)
from .graphs import Graph, GraphError, build_graph, edge_key


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class _RawFile:
    def __init__(self):
        self.name = None
        self.vertices: list[str] = []
        self.edges: list[tuple[str, str]] = []
        self.crossings: list[tuple] = []
        self.rotations: dict[str, tuple[str, ...]] = {}
        self.fake_rotations: dict = {}
        self.has_drawing_block = False
        self.lines: dict = {}  # locator -> line number


def _parse(text: str) -> _RawFile:
    raw = _RawFile()
    vset: set[str] = set()
    eset: set = set()
    seen_end = False
    for lineno, full in enumerate(text.splitlines(), start=1):
        line = full.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kind = toks[0]
        if seen_end:
            raise ParseError(lineno, "content after end")
        if raw.name is None:
            if kind != "graph" or len(toks) != 2:
                raise ParseError(lineno, "expected header: graph <name>")
            raw.name = toks[1]
            continue
        if kind == "v":
            if len(toks) != 2:
                raise ParseError(lineno, "expected: v <token>")
            if toks[1] in vset:
                raise ParseError(lineno, f"duplicate vertex {toks[1]!r}")
            vset.add(toks[1])
            raw.vertices.append(toks[1])
        elif kind == "e":
            if len(toks) != 3:
                raise ParseError(lineno, "expected: e <tok> <tok>")
            u, v = toks[1], toks[2]
            if u == v:
                raise ParseError(lineno, f"self-loop at {u!r}")
            for t in (u, v):
                if t not in vset:
                    raise ParseError(lineno, f"unknown vertex {t!r}")
            e = edge_key(u, v)
            if e in eset:
                raise ParseError(lineno, f"duplicate edge {u!r}-{v!r}")
            eset.add(e)
            raw.edges.append(e)
        elif kind == "x":
            if len(toks) != 5:
                raise ParseError(lineno, "expected: x <a> <b> <c> <d>")
            a, b, c, d = toks[1:5]
            for t in (a, b, c, d):
                if t not in vset:
                    raise ParseError(lineno, f"unknown vertex {t!r}")
            e1, e2 = edge_key(a, b), edge_key(c, d)
            for e in (e1, e2):
                if e not in eset:
                    raise ParseError(lineno, f"crossing references non-edge {e[0]!r}-{e[1]!r}")
            if e1 == e2:
                raise ParseError(lineno, "edge cannot cross itself")
            if set(e1) & set(e2):
                raise ParseError(lineno, "crossing edges share an endpoint")
            pair = crossing_key(e1, e2)
            if pair in raw.lines:
                raise ParseError(lineno, "duplicate crossing")
            for e in (e1, e2):
                if any(e in p for p in raw.crossings):
                    raise ParseError(lineno, f"edge {e[0]!r}-{e[1]!r} crossed twice")
            raw.crossings.append(pair)
            raw.lines[pair] = lineno
            raw.has_drawing_block = True
        elif kind == "rot":
            if len(toks) < 3 or toks[2] != ":":
                raise ParseError(lineno, "expected: rot <v> : <tok> ...")
            v = toks[1]
            if v not in vset:
                raise ParseError(lineno, f"unknown vertex {v!r}")
            if v in raw.rotations:
                raise ParseError(lineno, f"duplicate rotation for {v!r}")
            entries = toks[3:]
            for t in entries:
                if t not in vset:
                    raise ParseError(lineno, f"unknown vertex {t!r}")
            raw.rotations[v] = tuple(entries)
            raw.lines[("rot", v)] = lineno
            raw.has_drawing_block = True
        elif kind == "xrot":
            if len(toks) != 10 or toks[5] != ":":
                raise ParseError(lineno, "expected: xrot <a> <b> <c> <d> : <p> <q> <r> <s>")
            a, b, c, d = toks[1:5]
            pair = crossing_key(edge_key(a, b), edge_key(c, d))
            cyc = tuple(toks[6:10])
            if pair in raw.fake_rotations:
                raise ParseError(lineno, "duplicate xrot")
            raw.fake_rotations[pair] = cyc
            raw.lines[("xrot", pair)] = lineno
            raw.has_drawing_block = True
        elif kind == "end":
            if len(toks) != 1:
                raise ParseError(lineno, "expected bare: end")
            seen_end = True
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    if raw.name is None:
        raise ParseError(1, "empty file: expected header: graph <name>")
    if not seen_end:
        raise ParseError(len(text.splitlines()) + 1, "missing end")
    return raw


def parse_graph_file(text: str) -> Graph:
    """Graph part of a file (drawing directives, if present, are ignored)."""
    raw = _parse(text)
    try:
        return build_graph(raw.vertices, raw.edges)
    except GraphError as ex:  # unreachable: _parse pre-checks these
        raise ParseError(1, str(ex))


def parse_drawing_data(text: str) -> tuple[str, DrawingData]:
    """Name and raw drawing payload; structural errors carry line numbers.

    A drawing needs a rotation line for every vertex and an xrot line for
    every crossing; convention-level violations are left to the validator.
    """
    raw = _parse(text)
    G = build_graph(raw.vertices, raw.edges)
    for v in raw.vertices:
        if v not in raw.rotations:
            raise ParseError(
                len(text.splitlines()) + 1, f"missing rotation for vertex {v!r}"
            )
    for pair in raw.crossings:
        if pair not in raw.fake_rotations:
            raise ParseError(raw.lines[pair], "crossing has no xrot line")
    for pair in raw.fake_rotations:
        if pair not in raw.crossings:
            raise ParseError(raw.lines[("xrot", pair)], "xrot without matching x line")
    return raw.name, normalize_drawing_data(G, raw.crossings, raw.rotations, raw.fake_rotations)


def parse_drawing_file(text: str) -> OnePlaneDrawing:
    """Parse and fully validate a drawing file."""
    name, data = parse_drawing_data(text)
    try:
        return build_drawing(data.base, data.crossings, data.rotations, data.fake_rotations)
    except DrawingError as ex:
        first = ex.report.violations[0]
        raise ParseError(0, f"invalid drawing: {first.line()}")


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _rotate_to_min(cyc: tuple[str, ...]) -> tuple[str, ...]:
    if not cyc:
        return cyc
    k = cyc.index(min(cyc))
    return cyc[k:] + cyc[:k]


def serialize_graph(G: Graph, name: str = "g") -> str:
    lines = [f"graph {name}"]
    lines += [f"v {v}" for v in G.sorted_vertices()]
    lines += [f"e {u} {v}" for u, v in G.sorted_edges()]
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_drawing(D: OnePlaneDrawing, name: str = "g") -> str:
    lines = [f"graph {name}"]
    lines += [f"v {v}" for v in D.base.sorted_vertices()]
    lines += [f"e {u} {v}" for u, v in D.base.sorted_edges()]
    for (e1, e2) in sorted(D.crossings):
        lines.append(f"x {e1[0]} {e1[1]} {e2[0]} {e2[1]}")
    for v in D.base.sorted_vertices():
        ring = " ".join(_rotate_to_min(D.rotations[v]))
        lines.append(f"rot {v} :{' ' + ring if ring else ''}")
    for pair in sorted(D.crossings):
        e1, e2 = pair
        ring = " ".join(_rotate_to_min(D.fake_rotations[pair]))
        lines.append(f"xrot {e1[0]} {e1[1]} {e2[0]} {e2[1]} : {ring}")
    lines.append("end")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def export_dot(D: OnePlaneDrawing, name: str = "g") -> str:
    """Planarization as DOT: crossings become diamond nodes, crossed edges
    are split through them.  Layout is left to the DOT renderer."""
    safe = name.replace('"', "")
    out = [f'graph "{safe}" {{']
    for v in D.base.sorted_vertices():
        out.append(f'  "{v}";')
    fake_names = {}
    for k, pair in enumerate(sorted(D.crossings)):
        fake_names[pair] = f"x{k}"
        (a, b), (c, d) = pair
        out.append(f'  "x{k}" [shape=diamond, label="{a}{b}*{c}{d}"];')
    crossed = {e: pair for pair in D.crossings for e in pair}
    for u, v in D.base.sorted_edges():
        pair = crossed.get((u, v))
        if pair is None:
            out.append(f'  "{u}" -- "{v}";')
        else:
            xk = fake_names[pair]
            out.append(f'  "{u}" -- "{xk}";')
            out.append(f'  "{xk}" -- "{v}";')
    out.append("}")
    return "\n".join(out) + "\n"
