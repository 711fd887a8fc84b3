"""Exact polynomial unweighted coalitional manipulation.

Two stages decide whether k identical manipulator votes can make c a
co-winner.  Preprocessing tightens per-candidate upper bounds U(x, c) on
the post-manipulation strength from x to c with three reduction rules; a
bound dropping below the guaranteed lower strength proves impossibility.
Otherwise a greedy traversal turns the bounds into a concrete vote whose
k copies provably work.

The unique-winner variant reduces to the co-winner one with one fewer
manipulator: the last vote is rebuilt from the resolvability rules, which
promote any co-winner to the unique winner.
"""

from __future__ import annotations

from dataclasses import dataclass

from .election import (
    Ballot,
    Profile,
    WeightedMajorityGraph,
    build_wmg,
    check_candidate_id,
)
from .engine import StrengthMatrix, strength_matrix, winning_set
from .errors import InternalInvariantError, ValidationError
from .homogenize import ManipulationOrder, critical_out_branching


@dataclass(frozen=True)
class RuleFiring:
    """One bound update: `pass=<k> rule=<1|2|3> target=<x> old=<o> new=<n>`."""

    pass_index: int
    rule: int
    target: int
    old: int
    new: int

    def render(self, names: tuple[str, ...] | None = None) -> str:
        target = names[self.target] if names is not None else str(self.target)
        return (
            f"pass={self.pass_index} rule={self.rule} target={target}"
            f" old={self.old} new={self.new}"
        )


@dataclass(frozen=True)
class BoundTable:
    """Fixpoint of the preprocessing rules (or the state at failure).

    u[x] bounds the reachable strength from x to c, uc[x] the one from c
    to x; w_hi/w_lo bound the reachable arc weights (w +/- |M|).
    """

    c: int
    m_count: int
    u: dict[int, int]
    uc: dict[int, int]
    w_hi: tuple[tuple[int, ...], ...]
    w_lo: tuple[tuple[int, ...], ...]
    failed: bool
    trace: tuple[RuleFiring, ...]


@dataclass(frozen=True)
class UcmOutcome:
    """Decision plus, when found, the manipulators' ballots."""

    found: bool
    order: ManipulationOrder | None = None
    ballots: tuple[Ballot, ...] = ()
    trace: tuple[RuleFiring, ...] = ()


def preprocessing_bounds(
    graph: WeightedMajorityGraph,
    strengths: StrengthMatrix,
    c: int,
    m_count: int,
) -> BoundTable:
    """Run the three reduction rules to a fixpoint.

    One pass sweeps Rule 1, Rule 2, then Rule 3; the failure test runs
    after every pass.  A failed table means no votes for the manipulators
    can make c a co-winner.
    """
    m = graph.m
    check_candidate_id(m, c)
    if m_count < 0:
        raise ValidationError(f"manipulator count must be >= 0, got {m_count}")
    s = strengths.s
    w_hi = tuple(
        tuple(graph.w[x][y] + m_count for y in range(m)) for x in range(m)
    )
    w_lo = tuple(
        tuple(graph.w[x][y] - m_count for y in range(m)) for x in range(m)
    )
    others = [x for x in range(m) if x != c]
    u = {x: s[x][c] + m_count for x in others}
    uc = {x: s[c][x] + m_count for x in others}
    trace: list[RuleFiring] = []

    failed = False
    changed = True
    pass_index = 0
    while changed and not failed:
        pass_index += 1
        changed = False

        # Rule 1: a stronger path from x to c than back would dethrone c.
        for x in others:
            if uc[x] < u[x]:
                trace.append(RuleFiring(pass_index, 1, x, u[x], uc[x]))
                u[x] = uc[x]
                changed = True

        # Rule 2: c must reach x at strength U(x,c) for c to defend; prune
        # vertices with lower bounds and arcs too weak even after help.
        for x in others:
            t = u[x]
            if not _reaches(w_hi, u, c, x, t):
                trace.append(RuleFiring(pass_index, 2, x, t, t - 2))
                u[x] = t - 2
                changed = True

        # Rule 3: a heavy unavoidable arc (x, y) caps U(y,c) by U(x,c).
        for x in others:
            ux = u[x]
            row_lo = w_lo[x]
            for y in others:
                if y != x and ux < row_lo[y] and u[y] > ux:
                    trace.append(RuleFiring(pass_index, 3, y, u[y], ux))
                    u[y] = ux
                    changed = True

        for x in others:
            if u[x] < s[x][c] - m_count:
                failed = True
                break

    return BoundTable(
        c=c,
        m_count=m_count,
        u=dict(u),
        uc=dict(uc),
        w_hi=w_hi,
        w_lo=w_lo,
        failed=failed,
        trace=tuple(trace),
    )


def _reaches(
    w_hi: tuple[tuple[int, ...], ...],
    u: dict[int, int],
    c: int,
    x: int,
    t: int,
) -> bool:
    """Is x reachable from c using vertices with u >= t and arcs w_hi >= t?

    c is always kept (its bound is not a removal criterion), and so is x.
    """
    m = len(w_hi)
    kept = [y == c or u[y] >= t for y in range(m)]
    seen = [False] * m
    seen[c] = True
    stack = [c]
    while stack:
        f = stack.pop()
        row = w_hi[f]
        for g in range(m):
            if not seen[g] and kept[g] and row[g] >= t:
                if g == x:
                    return True
                seen[g] = True
                stack.append(g)
    return x == c


def construct_manipulation_order(
    graph: WeightedMajorityGraph,
    strengths: StrengthMatrix,
    c: int,
    bounds: BoundTable,
) -> ManipulationOrder:
    """Greedy traversal by nonincreasing U(., c) over admissible arcs.

    Appends, among unplaced candidates of maximal bound D, one reachable
    from the placed set through an arc with w_hi >= D (smallest target id,
    then smallest source id).  Guaranteed to succeed on a non-failed
    fixpoint.
    """
    if bounds.failed:
        raise ValidationError("bounds table records a failure; no order exists")
    m = graph.m
    check_candidate_id(m, c)
    w_hi = bounds.w_hi
    u = bounds.u
    placed = [c]
    outside = sorted(x for x in range(m) if x != c)
    order = [c]
    while outside:
        best = max(u[y] for y in outside)
        chosen = None
        for y in outside:
            if u[y] != best:
                continue
            for x in placed:
                if w_hi[x][y] >= best:
                    chosen = y
                    break
            if chosen is not None:
                break
        if chosen is None:
            raise InternalInvariantError(
                "no admissible arc into the remaining candidates; "
                "the bounds table is not a valid fixpoint"
            )
        order.append(chosen)
        outside.remove(chosen)
        placed.append(chosen)
        placed.sort()
    return ManipulationOrder(tuple(order))


def solve_ucm_cowinner(p_nm: Profile, c: int, m_count: int) -> UcmOutcome:
    """Decide co-winner manipulation and construct a witness vote.

    Exact for any number of manipulators.  Every found outcome is
    re-verified through the winner computation before being returned.
    """
    graph = build_wmg(p_nm)
    strengths = strength_matrix(graph)
    bounds = preprocessing_bounds(graph, strengths, c, m_count)
    if bounds.failed:
        return UcmOutcome(False, trace=bounds.trace)
    lam = construct_manipulation_order(graph, strengths, c, bounds)
    ballots = lam.ballots(m_count)
    manipulated = p_nm.extend(ballots)
    if c not in winning_set(build_wmg(manipulated)).winners:
        raise InternalInvariantError(
            "constructed vote failed verification as a co-winner manipulation"
        )
    return UcmOutcome(True, lam, ballots, bounds.trace)


def solve_ucm_unique(p_nm: Profile, c: int, m_count: int) -> UcmOutcome:
    """Decide unique-winner manipulation via the co-winner solver.

    Solves with one manipulator fewer; on success the spare vote is built
    from the resolvability rules, which turn the co-winner c into the
    unique winner.
    """
    if m_count < 1:
        raise ValidationError(
            "unique-winner manipulation needs at least one manipulator"
        )
    co = solve_ucm_cowinner(p_nm, c, m_count - 1)
    if not co.found:
        return UcmOutcome(False, trace=co.trace)
    staged = p_nm.extend(co.ballots)
    extra = resolvability_vote(staged, c)
    ballots = co.ballots + (extra,)
    final = winning_set(build_wmg(p_nm.extend(ballots)))
    if final.winners != (c,):
        raise InternalInvariantError(
            "resolvability vote failed to make the candidate the unique winner"
        )
    return UcmOutcome(True, co.order, ballots, co.trace)


def resolvability_constraints(
    profile: Profile, c: int
) -> frozenset[tuple[int, int]]:
    """Precedence pairs (u, v) = "u above v" for the resolvability vote.

    Rule pairs: the predecessor of x on a strongest c-to-x path precedes
    x (one strongest path per target, from the critical out-branching);
    and x precedes y whenever s[x][c] > s[y][c] for x, y != c.  The set is
    acyclic whenever c is a co-winner.
    """
    graph = build_wmg(profile)
    strengths = strength_matrix(graph)
    check_candidate_id(graph.m, c)
    if c not in winning_set(graph, strengths).winners:
        raise ValidationError(
            f"candidate {c} is not a co-winner; resolvability needs a co-winner"
        )
    branching = critical_out_branching(graph, c)
    edges: set[tuple[int, int]] = set()
    for x in range(graph.m):
        if x != c:
            edges.add((branching.parent[x], x))
    s = strengths.s
    for x in range(graph.m):
        if x == c:
            continue
        for y in range(graph.m):
            if y != c and y != x and s[x][c] > s[y][c]:
                edges.add((x, y))
    return frozenset(edges)


def resolvability_vote(profile: Profile, c: int) -> Ballot:
    """A single weight-1 vote after which c is the unique winner."""
    m = profile.m
    edges = resolvability_constraints(profile, c)
    succ: dict[int, list[int]] = {x: [] for x in range(m)}
    indegree = [0] * m
    for a, b in edges:
        succ[a].append(b)
        indegree[b] += 1
    order: list[int] = []
    ready = sorted(x for x in range(m) if indegree[x] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        inserted = False
        for nxt in succ[v]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                ready.append(nxt)
                inserted = True
        if inserted:
            ready.sort()
    if len(order) != m:
        raise InternalInvariantError(
            "cyclic resolvability constraints for a co-winner"
        )
    return Ballot(tuple(order))


def check_single_vote_necessary(profile: Profile, c: int) -> bool:
    """Necessary (not sufficient) condition for a one-vote manipulation.

    True iff s[x][c] <= s[c][x] + 2 for every rival x.  Instances passing
    this check can still be impossible; the co-winner solver with one
    manipulator gives the definitive answer.
    """
    graph = build_wmg(profile)
    check_candidate_id(graph.m, c)
    s = strength_matrix(graph).s
    return all(
        s[x][c] <= s[c][x] + 2 for x in range(graph.m) if x != c
    )
