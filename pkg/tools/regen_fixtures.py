#!/usr/bin/env python3
"""Regenerate the shipped fixture corpus.

Writes every catalog fixture to src/oneplane/fixtures/<name>.opg in canonical
form.  With --rediscover-k2222 it also reruns the exhaustive oracle on the
complete 4-partite graph K_{2,2,2,2} (several minutes; the frozen literal in
_figdata.py must match the rediscovered drawing byte for byte).
"""

import argparse
import itertools
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from oneplane.fileformat import serialize_drawing  # noqa: E402
from oneplane.generators import catalog, gen_k2222  # noqa: E402
from oneplane.graphs import build_graph  # noqa: E402
from oneplane.oracle import find_one_planar_drawing  # noqa: E402


def write_corpus(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for fx in catalog():
        path = outdir / f"{fx.name}.opg"
        path.write_text(serialize_drawing(fx.drawing, fx.name), encoding="utf-8")
        print(f"wrote {path}")


def rediscover_k2222(workers: int) -> None:
    vs = [p + i for p in "abcd" for i in "12"]
    edges = [(u, v) for u, v in itertools.combinations(vs, 2) if u[0] != v[0]]
    G = build_graph(vs, edges)
    print("searching for a 6-crossing drawing of K_{2,2,2,2} ...")
    res = find_one_planar_drawing(G, 6, node_limit=50_000_000, workers=workers)
    assert res.is_witness, res.status
    got = serialize_drawing(res.drawing, "k2222")
    frozen = serialize_drawing(gen_k2222().drawing, "k2222")
    if got == frozen:
        print("rediscovered drawing matches the frozen literal")
    else:
        print("MISMATCH: update K2222 in src/oneplane/_figdata.py to:")
        sys.stdout.write(got)
        sys.exit(1)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default=str(ROOT / "src" / "oneplane" / "fixtures"))
    ap.add_argument("--rediscover-k2222", action="store_true")
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()
    write_corpus(Path(args.out_dir))
    if args.rediscover_k2222:
        rediscover_k2222(args.workers)


if __name__ == "__main__":
    main()
