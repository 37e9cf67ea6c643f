"""Frozen drawing data for the fixture corpus.

Each record holds a graph (vertices, edges), its crossing pairs, the
counterclockwise rotation at every vertex (crossed edges named by their far
endpoints), and the cyclic edge-end order at every crossing.  The data is
literal so that fixture construction is instant and bit-stable; the
regeneration script under tools/ rebuilds it from scratch.
"""

H0 = {
    "vertices": ["s", "sp", "t", "tp", "u", "x", "xp", "y", "yp", "z", "zp"],
    "edges": [
        ("s", "sp"), ("s", "t"), ("s", "u"), ("s", "x"), ("s", "y"), ("s", "z"),
        ("sp", "tp"), ("sp", "u"), ("sp", "xp"), ("sp", "yp"), ("sp", "zp"), ("t", "tp"),
        ("t", "u"), ("t", "x"), ("t", "y"), ("t", "z"), ("tp", "u"), ("tp", "xp"),
        ("tp", "yp"), ("tp", "zp"), ("u", "x"), ("u", "xp"), ("u", "y"), ("u", "yp"),
        ("u", "z"), ("u", "zp"), ("x", "y"), ("x", "z"), ("xp", "yp"), ("xp", "zp"),
        ("y", "z"), ("yp", "zp"),
    ],
    "crossings": [
        (("s", "x"), ("u", "y")),
        (("s", "z"), ("t", "y")),
        (("sp", "xp"), ("u", "yp")),
        (("sp", "zp"), ("tp", "yp")),
        (("t", "x"), ("u", "z")),
        (("tp", "xp"), ("u", "zp")),
    ],
    "rotations": {
        "s": ("sp", "t", "z", "y", "x", "u"),
        "sp": ("yp", "zp", "tp", "s", "u", "xp"),
        "t": ("tp", "u", "x", "z", "y", "s"),
        "tp": ("yp", "zp", "xp", "u", "t", "sp"),
        "u": ("yp", "sp", "s", "y", "x", "z", "t", "tp", "zp", "xp"),
        "x": ("s", "y", "z", "t", "u"),
        "xp": ("yp", "sp", "u", "tp", "zp"),
        "y": ("s", "t", "z", "x", "u"),
        "yp": ("zp", "tp", "sp", "u", "xp"),
        "z": ("s", "t", "u", "x", "y"),
        "zp": ("xp", "u", "tp", "sp", "yp"),
    },
    "fake_rotations": {
        ((("s", "x")), (("u", "y"))): ("s", "y", "x", "u"),
        ((("s", "z")), (("t", "y"))): ("s", "t", "z", "y"),
        ((("sp", "xp")), (("u", "yp"))): ("yp", "sp", "u", "xp"),
        ((("sp", "zp")), (("tp", "yp"))): ("yp", "zp", "tp", "sp"),
        ((("t", "x")), (("u", "z"))): ("z", "t", "u", "x"),
        ((("tp", "xp")), (("u", "zp"))): ("tp", "zp", "xp", "u"),
    },
}

G1 = {
    "vertices": ["a", "b", "c", "d", "e", "f", "g", "h", "i", "u", "v"],
    "edges": [
        ("a", "d"), ("a", "e"), ("a", "f"), ("a", "u"), ("a", "v"), ("b", "c"),
        ("b", "g"), ("b", "h"), ("b", "i"), ("b", "u"), ("c", "g"), ("c", "h"),
        ("c", "i"), ("c", "u"), ("d", "e"), ("d", "f"), ("d", "u"), ("d", "v"),
        ("e", "f"), ("e", "u"), ("e", "v"), ("f", "u"), ("f", "v"), ("g", "h"),
        ("g", "i"), ("g", "u"), ("h", "i"), ("h", "u"), ("i", "u"), ("u", "v"),
    ],
    "crossings": [
        (("a", "e"), ("d", "v")),
        (("a", "f"), ("d", "u")),
        (("b", "h"), ("g", "u")),
        (("b", "i"), ("c", "g")),
        (("c", "h"), ("i", "u")),
        (("e", "u"), ("f", "v")),
    ],
    "rotations": {
        "a": ("v", "e", "d", "f", "u"),
        "b": ("u", "h", "g", "i", "c"),
        "c": ("b", "g", "i", "h", "u"),
        "d": ("v", "e", "f", "u", "a"),
        "e": ("v", "u", "f", "d", "a"),
        "f": ("v", "u", "a", "d", "e"),
        "g": ("u", "h", "i", "c", "b"),
        "h": ("u", "c", "i", "g", "b"),
        "i": ("u", "c", "b", "g", "h"),
        "u": ("c", "i", "h", "g", "b", "a", "d", "f", "e", "v"),
        "v": ("u", "f", "e", "d", "a"),
    },
    "fake_rotations": {
        ((("a", "e")), (("d", "v"))): ("v", "e", "d", "a"),
        ((("a", "f")), (("d", "u"))): ("f", "u", "a", "d"),
        ((("b", "h")), (("g", "u"))): ("u", "h", "g", "b"),
        ((("b", "i")), (("c", "g"))): ("i", "c", "b", "g"),
        ((("c", "h")), (("i", "u"))): ("u", "c", "i", "h"),
        ((("e", "u")), (("f", "v"))): ("v", "u", "f", "e"),
    },
}

SIXCONN_LEFT = {
    "vertices": ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"],
    "edges": [
        ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"),
        ("a", "h"), ("a", "i"), ("b", "c"), ("b", "d"), ("b", "e"), ("b", "f"),
        ("b", "j"), ("c", "d"), ("c", "g"), ("c", "i"), ("c", "j"), ("d", "f"),
        ("d", "i"), ("d", "j"), ("e", "f"), ("e", "g"), ("e", "h"), ("e", "j"),
        ("f", "h"), ("f", "j"), ("g", "h"), ("g", "i"), ("g", "j"), ("h", "i"),
        ("h", "j"), ("i", "j"),
    ],
    "crossings": [
        (("a", "d"), ("b", "c")),
        (("a", "f"), ("b", "e")),
        (("a", "h"), ("e", "g")),
        (("a", "i"), ("c", "g")),
        (("b", "j"), ("d", "f")),
        (("c", "j"), ("d", "i")),
        (("e", "j"), ("f", "h")),
        (("g", "j"), ("h", "i")),
    ],
    "rotations": {
        "a": ("c", "i", "g", "h", "e", "f", "b", "d"),
        "b": ("e", "f", "j", "d", "c", "a"),
        "c": ("d", "j", "i", "g", "a", "b"),
        "d": ("a", "b", "f", "j", "i", "c"),
        "e": ("g", "h", "j", "f", "b", "a"),
        "f": ("h", "j", "d", "b", "a", "e"),
        "g": ("c", "i", "j", "h", "e", "a"),
        "h": ("i", "j", "f", "e", "a", "g"),
        "i": ("c", "d", "j", "h", "g", "a"),
        "j": ("c", "d", "b", "f", "e", "h", "g", "i"),
    },
    "fake_rotations": {
        ((("a", "d")), (("b", "c"))): ("a", "b", "d", "c"),
        ((("a", "f")), (("b", "e"))): ("e", "f", "b", "a"),
        ((("a", "h")), (("e", "g"))): ("g", "h", "e", "a"),
        ((("a", "i")), (("c", "g"))): ("c", "i", "g", "a"),
        ((("b", "j")), (("d", "f"))): ("j", "d", "b", "f"),
        ((("c", "j")), (("d", "i"))): ("c", "d", "j", "i"),
        ((("e", "j")), (("f", "h"))): ("h", "j", "f", "e"),
        ((("g", "j")), (("h", "i"))): ("i", "j", "h", "g"),
    },
}

SIXCONN_RIGHT = {
    "vertices": ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"],
    "edges": [
        ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"),
        ("a", "h"), ("a", "i"), ("b", "c"), ("b", "d"), ("b", "e"), ("b", "f"),
        ("b", "j"), ("c", "d"), ("c", "g"), ("c", "i"), ("c", "j"), ("d", "f"),
        ("d", "i"), ("d", "j"), ("e", "f"), ("e", "g"), ("e", "h"), ("e", "k"),
        ("f", "h"), ("f", "i"), ("f", "j"), ("f", "k"), ("g", "h"), ("g", "i"),
        ("g", "k"), ("h", "i"), ("h", "k"), ("i", "j"), ("i", "k"), ("j", "k"),
    ],
    "crossings": [
        (("a", "d"), ("b", "c")),
        (("a", "f"), ("b", "e")),
        (("a", "h"), ("e", "g")),
        (("a", "i"), ("c", "g")),
        (("b", "j"), ("d", "f")),
        (("c", "j"), ("d", "i")),
        (("e", "k"), ("f", "h")),
        (("f", "i"), ("j", "k")),
        (("g", "k"), ("h", "i")),
    ],
    "rotations": {
        "a": ("c", "i", "g", "h", "e", "f", "b", "d"),
        "b": ("e", "f", "j", "d", "c", "a"),
        "c": ("d", "j", "i", "g", "a", "b"),
        "d": ("a", "b", "f", "j", "i", "c"),
        "e": ("g", "h", "k", "f", "b", "a"),
        "f": ("h", "k", "i", "j", "d", "b", "a", "e"),
        "g": ("c", "i", "k", "h", "e", "a"),
        "h": ("g", "i", "k", "f", "e", "a"),
        "i": ("c", "d", "j", "f", "k", "h", "g", "a"),
        "j": ("c", "d", "b", "f", "k", "i"),
        "k": ("i", "j", "f", "e", "h", "g"),
    },
    "fake_rotations": {
        ((("a", "d")), (("b", "c"))): ("a", "b", "d", "c"),
        ((("a", "f")), (("b", "e"))): ("e", "f", "b", "a"),
        ((("a", "h")), (("e", "g"))): ("g", "h", "e", "a"),
        ((("a", "i")), (("c", "g"))): ("c", "i", "g", "a"),
        ((("b", "j")), (("d", "f"))): ("j", "d", "b", "f"),
        ((("c", "j")), (("d", "i"))): ("c", "d", "j", "i"),
        ((("e", "k")), (("f", "h"))): ("h", "k", "f", "e"),
        ((("f", "i")), (("j", "k"))): ("i", "j", "f", "k"),
        ((("g", "k")), (("h", "i"))): ("i", "k", "h", "g"),
    },
}

FOURCONN_D8 = {
    "vertices": ["a", "b", "c", "d", "e", "f", "g", "h", "i"],
    "edges": [
        ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"),
        ("b", "c"), ("b", "d"), ("b", "e"), ("b", "f"), ("c", "d"), ("c", "e"),
        ("d", "e"), ("d", "f"), ("d", "g"), ("d", "h"), ("d", "i"), ("e", "f"),
        ("e", "g"), ("e", "h"), ("f", "g"), ("f", "h"), ("f", "i"), ("g", "h"),
        ("g", "i"), ("h", "i"),
    ],
    "crossings": [
        (("a", "d"), ("b", "f")),
        (("a", "g"), ("e", "f")),
        (("b", "e"), ("c", "d")),
        (("d", "g"), ("e", "h")),
        (("d", "i"), ("f", "h")),
    ],
    "rotations": {
        "a": ("b", "d", "f", "g", "e", "c"),
        "b": ("c", "e", "d", "f", "a"),
        "c": ("a", "e", "d", "b"),
        "d": ("b", "c", "e", "g", "h", "i", "f", "a"),
        "e": ("b", "c", "a", "f", "g", "h", "d"),
        "f": ("b", "d", "h", "i", "g", "e", "a"),
        "g": ("d", "e", "a", "f", "i", "h"),
        "h": ("d", "e", "g", "i", "f"),
        "i": ("d", "h", "g", "f"),
    },
    "fake_rotations": {
        ((("a", "d")), (("b", "f"))): ("b", "d", "f", "a"),
        ((("a", "g")), (("e", "f"))): ("g", "e", "a", "f"),
        ((("b", "e")), (("c", "d"))): ("b", "c", "e", "d"),
        ((("d", "g")), (("e", "h"))): ("d", "e", "g", "h"),
        ((("d", "i")), (("f", "h"))): ("d", "h", "i", "f"),
    },
}

K2222 = {
    "vertices": ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"],
    "edges": [
        ("a1", "b1"), ("a1", "b2"), ("a1", "c1"), ("a1", "c2"), ("a1", "d1"), ("a1", "d2"),
        ("a2", "b1"), ("a2", "b2"), ("a2", "c1"), ("a2", "c2"), ("a2", "d1"), ("a2", "d2"),
        ("b1", "c1"), ("b1", "c2"), ("b1", "d1"), ("b1", "d2"), ("b2", "c1"), ("b2", "c2"),
        ("b2", "d1"), ("b2", "d2"), ("c1", "d1"), ("c1", "d2"), ("c2", "d1"), ("c2", "d2"),
    ],
    "crossings": [
        (("a1", "b2"), ("c1", "d1")),
        (("a1", "c2"), ("b1", "d1")),
        (("a1", "d2"), ("b1", "c1")),
        (("a2", "b1"), ("c2", "d2")),
        (("a2", "c1"), ("b2", "d2")),
        (("a2", "d1"), ("b2", "c2")),
    ],
    "rotations": {
        "a1": ("b1", "c2", "d1", "b2", "c1", "d2"),
        "a2": ("c2", "b1", "d2", "c1", "b2", "d1"),
        "b1": ("a1", "c1", "d2", "a2", "c2", "d1"),
        "b2": ("a2", "d2", "c1", "a1", "d1", "c2"),
        "c1": ("b2", "a2", "d2", "b1", "a1", "d1"),
        "c2": ("b1", "d2", "a2", "b2", "d1", "a1"),
        "d1": ("c1", "a1", "b1", "c2", "a2", "b2"),
        "d2": ("c1", "b2", "a2", "c2", "b1", "a1"),
    },
    "fake_rotations": {
        (("a1", "b2"), ("c1", "d1")): ("c1", "a1", "d1", "b2"),
        (("a1", "c2"), ("b1", "d1")): ("d1", "a1", "b1", "c2"),
        (("a1", "d2"), ("b1", "c1")): ("d2", "b1", "a1", "c1"),
        (("a2", "b1"), ("c2", "d2")): ("d2", "a2", "c2", "b1"),
        (("a2", "c1"), ("b2", "d2")): ("d2", "c1", "b2", "a2"),
        (("a2", "d1"), ("b2", "c2")): ("d1", "c2", "a2", "b2"),
    },
}
