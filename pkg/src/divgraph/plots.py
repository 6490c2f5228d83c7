"""Figure rendering for sweep reports and single graphs.

Figures are written straight to files (Agg backend, no display); the sweep
path drops them next to the CSV so a report directory is self-contained.
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .formulas import ParameterReport
from .graph import DivisorGraph


def render_sweep_figures(reports: list[ParameterReport], outdir: str) -> list[str]:
    """Render the standard sweep figures into ``outdir``; returns the paths."""
    os.makedirs(outdir, exist_ok=True)
    if not reports:
        return []
    ns = [r.n for r in reports]
    paths = []

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(ns, [r.clique_number for r in reports], ".", ms=4, label="clique / chromatic")
    ax.plot(ns, [r.delta for r in reports], ".", ms=4, label="max degree / chromatic index")
    ax.plot(ns, [r.domination_number for r in reports], ".", ms=4, label="domination")
    ax.set_xlabel("n")
    ax.set_ylabel("parameter value")
    ax.set_title("Divisor graph parameters")
    ax.legend(loc="upper left", fontsize=8)
    path = os.path.join(outdir, "parameters.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(ns, [r.independence_number for r in reports], ".", ms=4, label="independence / edge cover")
    ax.plot(ns, [r.matching_number for r in reports], ".", ms=4, label="matching / vertex cover")
    ax.plot(ns, [r.pi_n for r in reports], ",", alpha=0.5, label="proper divisor count")
    ax.set_xlabel("n")
    ax.set_ylabel("size")
    ax.set_title("Halved-vertex-count parameters")
    ax.legend(loc="upper left", fontsize=8)
    path = os.path.join(outdir, "partition.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    return paths


def draw_graph(g: DivisorGraph, path: str) -> str:
    """Draw the divisor graph on a circular layout and save it to ``path``."""
    m = len(g.vertices)
    pos = {}
    for i, v in enumerate(g.vertices):
        angle = 2 * math.pi * i / max(m, 1)
        pos[v] = (math.cos(angle), math.sin(angle))
    fig, ax = plt.subplots(figsize=(6, 6))
    for u, v in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], "-", color="0.6", lw=1, zorder=1)
    xs = [pos[v][0] for v in g.vertices]
    ys = [pos[v][1] for v in g.vertices]
    ax.scatter(xs, ys, s=300, color="#4878cf", zorder=2)
    for v in g.vertices:
        ax.annotate(
            str(v), pos[v], ha="center", va="center", color="white", fontsize=8, zorder=3
        )
    ax.set_title(f"Divisor graph of {g.n}")
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
