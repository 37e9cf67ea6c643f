"""Matplotlib rendering of drawings and the bound ledger.

Figures are regeneration aids: positions come from a straight-line planar
layout of the planarization, so every crossing is the marked fake point of
its two edges.  Files only; no interactive backends.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .drawing import OnePlaneDrawing, planarize


def _planar_positions(D: OnePlaneDrawing):
    P = planarize(D)
    names = {}
    for v in P.vertices:
        if v[0] == "v":
            names[v] = v[1]
    for k, x in enumerate(sorted(P.fake_vertices)):
        names[x] = f"[x{k}]"
    emb = nx.PlanarEmbedding()
    emb.set_data({names[v]: [names[w] for w in P.rotations[v]] for v in P.vertices})
    pos = nx.combinatorial_embedding_to_pos(emb, fully_triangulate=False)
    return P, names, pos


def render_drawing(D: OnePlaneDrawing, path: str, title: str | None = None) -> None:
    """Draw the planarization with fake vertices marked as crossing points."""
    fig, ax = plt.subplots(figsize=(6, 6))
    if D.base.n == 0:
        ax.set_axis_off()
        fig.savefig(path, dpi=150)
        plt.close(fig)
        return
    P, names, pos = _planar_positions(D)
    for a, b in sorted(P.edges):
        xa, ya = pos[names[a]]
        xb, yb = pos[names[b]]
        crossed = P.is_fake(a) or P.is_fake(b)
        ax.plot(
            [xa, xb],
            [ya, yb],
            color="tab:blue" if crossed else "black",
            lw=1.2,
            zorder=1,
        )
    for v in P.vertices:
        x, y = pos[names[v]]
        if P.is_fake(v):
            ax.plot([x], [y], marker="x", color="tab:red", ms=7, zorder=2)
        else:
            ax.plot([x], [y], marker="o", color="white", mec="black", ms=12, zorder=2)
            ax.annotate(
                names[v], (x, y), ha="center", va="center", fontsize=7, zorder=3
            )
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_bounds(table, path: str) -> None:
    """Feasibility chart of the degree ledger: forced neighborhood edges
    against the dominating-vertex capacity."""
    ks = [row.k for row in table]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ks, [row.lower for row in table], "o-", label="forced edges (lower)")
    ax.plot(ks, [row.upper for row in table], "s--", label="capacity 4(k+1)-9 (upper)")
    for row in table:
        if not row.feasible:
            ax.axvspan(row.k - 0.5, row.k + 0.5, color="tab:red", alpha=0.08)
    ax.set_xlabel("degree k under test")
    ax.set_ylabel("edges in the closed neighborhood")
    ax.set_xticks(ks)
    ax.legend()
    ax.set_title("degree feasibility ledger (infeasible k shaded)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
