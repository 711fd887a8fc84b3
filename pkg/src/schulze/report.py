"""Figure and delimited-file rendering for election reports.

Produces a drawing of the majority graph (positive arcs only, the usual
presentation; the underlying data always keeps every arc), a rendered
strength table, and tab-separated files with the full matrices.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .election import WeightedMajorityGraph
from .engine import StrengthMatrix


def write_wmg_tsv(graph: WeightedMajorityGraph, path: Path) -> None:
    names = graph.registry.names
    rows = ["\t".join(("",) + names)]
    for x, name in enumerate(names):
        rows.append("\t".join([name] + [str(v) for v in graph.w[x]]))
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_strengths_tsv(
    strengths: StrengthMatrix, names: tuple[str, ...], path: Path
) -> None:
    rows = ["\t".join(("",) + names)]
    for x, name in enumerate(names):
        cells = [name] + [
            "" if x == y else str(strengths.s[x][y]) for y in range(strengths.m)
        ]
        rows.append("\t".join(cells))
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def render_wmg_figure(graph: WeightedMajorityGraph, path: Path) -> None:
    """Circular drawing; only arcs of positive weight are shown."""
    m = graph.m
    names = graph.registry.names
    fig, ax = plt.subplots(figsize=(5, 5))
    angles = [math.pi / 2 - 2 * math.pi * i / m for i in range(m)]
    xy = [(math.cos(a), math.sin(a)) for a in angles]
    for (px, py), name in zip(xy, names):
        ax.add_patch(plt.Circle((px, py), 0.09, color="#dddddd", zorder=2))
        ax.text(px, py, name, ha="center", va="center", zorder=3)
    for x in range(m):
        for y in range(m):
            if graph.w[x][y] <= 0:
                continue
            arrow = FancyArrowPatch(
                xy[x],
                xy[y],
                connectionstyle="arc3,rad=0.12",
                arrowstyle="-|>",
                mutation_scale=14,
                shrinkA=14,
                shrinkB=14,
                color="#444444",
                zorder=1,
            )
            ax.add_patch(arrow)
            mx = (xy[x][0] + xy[y][0]) / 2
            my = (xy[x][1] + xy[y][1]) / 2
            # Nudge the label toward the arc's bulge.
            nx, ny = xy[y][1] - xy[x][1], xy[x][0] - xy[y][0]
            norm = math.hypot(nx, ny) or 1.0
            ax.text(
                mx - 0.18 * nx / norm,
                my - 0.18 * ny / norm,
                str(graph.w[x][y]),
                ha="center",
                va="center",
                fontsize=9,
                color="#222222",
            )
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_strength_figure(
    strengths: StrengthMatrix, names: tuple[str, ...], path: Path
) -> None:
    m = strengths.m
    cells = [
        ["·" if x == y else str(strengths.s[x][y]) for y in range(m)]
        for x in range(m)
    ]
    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * m, 0.8 + 0.4 * m))
    ax.axis("off")
    table = ax.table(
        cellText=cells,
        rowLabels=list(names),
        colLabels=list(names),
        loc="center",
        cellLoc="center",
    )
    table.scale(1, 1.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def write_report(
    graph: WeightedMajorityGraph,
    strengths: StrengthMatrix,
    outdir: Path,
) -> list[Path]:
    """Render figures and delimited matrices into `outdir`; returns paths."""
    outdir.mkdir(parents=True, exist_ok=True)
    names = graph.registry.names
    written = []
    for name, writer in (
        ("wmg.png", lambda p: render_wmg_figure(graph, p)),
        ("strengths.png", lambda p: render_strength_figure(strengths, names, p)),
        ("wmg.tsv", lambda p: write_wmg_tsv(graph, p)),
        ("strengths.tsv", lambda p: write_strengths_tsv(strengths, names, p)),
    ):
        target = outdir / name
        writer(target)
        written.append(target)
    return written
