"""Path-strength computation and winner determination.

The strength of a path is the minimum arc weight along it; s[x][y] is the
maximum strength over all x-to-y paths in the complete majority digraph
(zero and negative arcs included).  A candidate wins when no rival has a
strictly stronger path against it than it has back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .election import WeightedMajorityGraph
from .errors import InternalInvariantError

Strength = int | None  # None marks the undefined diagonal


@dataclass(frozen=True)
class StrengthMatrix:
    """All-pairs widest-path strengths; the diagonal is undefined (None)."""

    s: tuple[tuple[Strength, ...], ...]

    @property
    def m(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class WinningSet:
    """Non-dominated candidates plus the full dominance relation."""

    winners: tuple[int, ...]
    dominance: tuple[tuple[bool, ...], ...]


def strength_matrix(graph: WeightedMajorityGraph) -> StrengthMatrix:
    """Max-min dynamic program over the complete digraph (cubic time)."""
    m = graph.m
    s = [list(row) for row in graph.w]
    for k in range(m):
        sk = s[k]
        for i in range(m):
            if i == k:
                continue
            si = s[i]
            via = si[k]
            for j in range(m):
                if j == i or j == k:
                    continue
                cand = sk[j]
                if via < cand:
                    cand = via
                if cand > si[j]:
                    si[j] = cand
    for i in range(m):
        s[i][i] = None
    return StrengthMatrix(tuple(tuple(row) for row in s))


def dominance_matrix(strengths: StrengthMatrix) -> tuple[tuple[bool, ...], ...]:
    m = strengths.m
    s = strengths.s
    return tuple(
        tuple(x != y and s[x][y] > s[y][x] for y in range(m)) for x in range(m)
    )


def winning_set(
    graph: WeightedMajorityGraph, strengths: StrengthMatrix | None = None
) -> WinningSet:
    """Candidates not dominated by anyone.  Never empty on a valid WMG."""
    if strengths is None:
        strengths = strength_matrix(graph)
    dom = dominance_matrix(strengths)
    m = graph.m
    winners = tuple(x for x in range(m) if not any(dom[y][x] for y in range(m)))
    if not winners:
        raise InternalInvariantError("empty winning set on a valid WMG")
    return WinningSet(winners, dom)


def format_strength_table(
    strengths: StrengthMatrix, names: tuple[str, ...]
) -> str:
    """Aligned text table of strengths: rows = source, columns = target."""
    m = strengths.m
    cells = [[""] + list(names)]
    for x in range(m):
        row = [names[x]]
        for y in range(m):
            row.append("·" if x == y else str(strengths.s[x][y]))
        cells.append(row)
    widths = [max(len(r[j]) for r in cells) for j in range(m + 1)]
    return "\n".join(
        "  ".join(cell.rjust(widths[j]) for j, cell in enumerate(row)).rstrip()
        for row in cells
    )
