"""Vote homogenization and weighted coalitional manipulation.

Built on two constructions over the majority graph of a full profile:

* a critical out-branching rooted at the preferred candidate c, whose
  unique root-to-x tree path is a strongest c-to-x path for every x;
* an ordering with c on top, obtained by traversing that tree, along which
  the strengths toward c never increase and every tree path is monotone.

Replacing any subprofile with copies of that ordering keeps c in the
winning set, so manipulators never need more than one common vote.  For a
bounded number of candidates this reduces weighted manipulation to
enumerating the possible common votes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .election import (
    Ballot,
    Profile,
    WeightedMajorityGraph,
    build_wmg,
    check_candidate_id,
)
from .engine import StrengthMatrix, strength_matrix, winning_set
from .errors import CapacityError, InternalInvariantError, ValidationError

WCM_DEFAULT_MAX_CANDIDATES = 8


@dataclass(frozen=True)
class OutBranching:
    """Spanning arborescence: parent[x] is None exactly at the root."""

    root: int
    parent: tuple[int | None, ...]

    def path_from_root(self, target: int) -> tuple[int, ...]:
        path = [target]
        while path[-1] != self.root:
            up = self.parent[path[-1]]
            if up is None:
                raise InternalInvariantError("broken parent chain")
            path.append(up)
        path.reverse()
        return tuple(path)


@dataclass(frozen=True)
class ManipulationOrder:
    """A strict total order with the preferred candidate on top."""

    order: tuple[int, ...]

    @property
    def top(self) -> int:
        return self.order[0]

    def ballots(self, count: int, weight: int = 1) -> tuple[Ballot, ...]:
        return tuple(Ballot(self.order, weight) for _ in range(count))


@dataclass(frozen=True)
class WcmOutcome:
    found: bool
    order: ManipulationOrder | None = None
    ballots: tuple[Ballot, ...] = ()


def critical_out_branching(
    graph: WeightedMajorityGraph, c: int
) -> OutBranching:
    """Grow a tree from c, always taking a maximum-weight frontier arc.

    The resulting root-to-x tree paths are strongest c-to-x paths.  Ties
    are broken toward the smallest (source id, target id) pair.
    """
    m = graph.m
    check_candidate_id(m, c)
    w = graph.w
    parent: list[int | None] = [None] * m
    frontier = [c]
    outside = [x for x in range(m) if x != c]
    for _ in range(m - 1):
        best_weight = None
        best_arc = None
        for a in frontier:
            row = w[a]
            for b in outside:
                if best_weight is None or row[b] > best_weight:
                    best_weight = row[b]
                    best_arc = (a, b)
                elif row[b] == best_weight and (a, b) < best_arc:
                    best_arc = (a, b)
        a, b = best_arc
        parent[b] = a
        frontier.append(b)
        outside.remove(b)
        frontier.sort()
    return OutBranching(c, tuple(parent))


def homogenizing_order(
    graph: WeightedMajorityGraph,
    c: int,
    branching: OutBranching,
    strengths: StrengthMatrix,
) -> ManipulationOrder:
    """Traverse the out-branching by nonincreasing strength toward c.

    Requires c to be a winner of `graph`.  Repeatedly picks an unplaced
    vertex with maximum s[x][c] (smallest id on ties) and appends the
    unplaced suffix of its tree path.
    """
    m = graph.m
    check_candidate_id(m, c)
    if branching.root != c:
        raise ValidationError(
            f"out-branching is rooted at {branching.root}, not at {c}"
        )
    if c not in winning_set(graph, strengths).winners:
        raise ValidationError(
            f"candidate {c} is not a winner; ordering is only defined for winners"
        )
    s = strengths.s
    order = [c]
    remaining = set(range(m)) - {c}
    while remaining:
        best = max(s[x][c] for x in remaining)
        target = min(x for x in remaining if s[x][c] == best)
        for v in branching.path_from_root(target):
            if v in remaining:
                order.append(v)
                remaining.remove(v)
    return ManipulationOrder(tuple(order))


def homogenize(
    profile: Profile, subprofile_indices: Iterable[int], c: int
) -> Profile:
    """Replace the selected ballots' orders with the homogenizing order.

    Weights are preserved.  c must be a winner of `profile`; it then stays
    a winner of the result.
    """
    indices = set(subprofile_indices)
    for i in indices:
        if not 0 <= i < len(profile.ballots):
            raise ValidationError(f"ballot index {i} out of range")
    graph = build_wmg(profile)
    strengths = strength_matrix(graph)
    branching = critical_out_branching(graph, c)
    lam = homogenizing_order(graph, c, branching, strengths)
    ballots = tuple(
        Ballot(lam.order, b.weight) if i in indices else b
        for i, b in enumerate(profile.ballots)
    )
    return Profile(profile.registry, ballots)


def solve_wcm_bounded(
    p_nm: Profile,
    manip_weights: Sequence[int],
    c: int,
    max_m: int = WCM_DEFAULT_MAX_CANDIDATES,
) -> WcmOutcome:
    """Weighted coalitional manipulation for few candidates.

    Enumerates common votes with c on top (identical votes suffice: any
    successful manipulation can be homogenized, and the homogenizing order
    starts with c) and returns the lexicographically first success, or an
    unsuccessful outcome meaning no manipulation of any shape exists.
    """
    m = p_nm.m
    check_candidate_id(m, c)
    for weight in manip_weights:
        if weight < 1:
            raise ValidationError(f"manipulator weight must be positive, got {weight}")
    if m > max_m:
        raise CapacityError(
            f"{m} candidates exceed the enumeration cap of {max_m}"
        )

    base = build_wmg(p_nm)
    if not manip_weights:
        if c in winning_set(base).winners:
            return WcmOutcome(True, _canonical_order(m, c), ())
        return WcmOutcome(False)

    total = sum(manip_weights)
    others = [x for x in range(m) if x != c]
    for tail in itertools.permutations(others):
        order = (c, *tail)
        shifted = _shift_wmg(base, order, total)
        if c in winning_set(shifted).winners:
            lam = ManipulationOrder(order)
            ballots = tuple(Ballot(order, weight) for weight in manip_weights)
            return WcmOutcome(True, lam, ballots)
    return WcmOutcome(False)


def _canonical_order(m: int, c: int) -> ManipulationOrder:
    return ManipulationOrder((c, *(x for x in range(m) if x != c)))


def _shift_wmg(
    base: WeightedMajorityGraph, order: tuple[int, ...], weight: int
) -> WeightedMajorityGraph:
    """WMG after adding one ballot `order` of the given total weight."""
    m = base.m
    w = [list(row) for row in base.w]
    for i in range(m):
        x = order[i]
        for j in range(i + 1, m):
            y = order[j]
            w[x][y] += weight
            w[y][x] -= weight
    return WeightedMajorityGraph(base.registry, tuple(tuple(row) for row in w))
