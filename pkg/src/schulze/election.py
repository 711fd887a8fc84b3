"""Candidates, ballots, profiles, and weighted majority graphs.

A profile is a multiset of weighted strict total orders over a fixed
candidate registry.  Its weighted majority graph (WMG) records, for every
ordered pair of candidates, the net margin of voters preferring one over
the other.  The reverse construction (a profile realizing a given WMG) is
also provided.

All values are immutable; every operation is a pure function, so shared
instances are safe to use from multiple threads.  Weights and margins are
plain Python integers and never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ValidationError

# Characters that would collide with the election file syntax.
_FORBIDDEN_NAME_CHARS = ">,:#"


@dataclass(frozen=True)
class CandidateRegistry:
    """Ordered set of candidate names; ids are positions 0..m-1."""

    names: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValidationError("registry needs at least one candidate")
        for name in names:
            if not name:
                raise ValidationError("empty candidate name")
            if any(ch.isspace() for ch in name) or any(
                ch in _FORBIDDEN_NAME_CHARS for ch in name
            ):
                raise ValidationError(f"invalid candidate name {name!r}")
        if len(set(names)) != len(names):
            raise ValidationError("duplicate candidate names")
        object.__setattr__(self, "index", {n: i for i, n in enumerate(names)})

    @property
    def m(self) -> int:
        return len(self.names)

    def id_of(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise ValidationError(f"unknown candidate {name!r}") from None


@dataclass(frozen=True)
class Ballot:
    """A strict total order (most-preferred first) cast with integer weight."""

    order: tuple[int, ...]
    weight: int = 1

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if self.weight < 1:
            raise ValidationError(f"ballot weight must be positive, got {self.weight}")


@dataclass(frozen=True)
class Profile:
    """A sequence of ballots over one registry."""

    registry: CandidateRegistry
    ballots: tuple[Ballot, ...]

    def __post_init__(self):
        object.__setattr__(self, "ballots", tuple(self.ballots))
        m = self.registry.m
        full = frozenset(range(m))
        for i, ballot in enumerate(self.ballots):
            if len(ballot.order) != m or frozenset(ballot.order) != full:
                raise ValidationError(
                    f"ballot {i} is not a permutation of the {m} candidates"
                )

    @property
    def m(self) -> int:
        return self.registry.m

    @property
    def total_weight(self) -> int:
        return sum(b.weight for b in self.ballots)

    def extend(self, extra: Iterable[Ballot]) -> "Profile":
        return Profile(self.registry, self.ballots + tuple(extra))


@dataclass(frozen=True)
class PairwiseMatrix:
    """n[x][y] = total weight of ballots ranking x above y."""

    n: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.n)


@dataclass(frozen=True)
class WeightedMajorityGraph:
    """Complete digraph with skew-symmetric margins w[x][y] = -w[y][x].

    Zero and negative arcs are kept: paths may use them.  All off-diagonal
    entries share the parity of the originating profile's total weight.
    """

    registry: CandidateRegistry
    w: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        w = tuple(tuple(row) for row in self.w)
        object.__setattr__(self, "w", w)
        m = self.registry.m
        if len(w) != m or any(len(row) != m for row in w):
            raise ValidationError(f"weight matrix must be {m}x{m}")
        parities = set()
        for x in range(m):
            if w[x][x] != 0:
                raise ValidationError("nonzero diagonal in weight matrix")
            for y in range(x + 1, m):
                if w[x][y] != -w[y][x]:
                    raise ValidationError(
                        f"broken skew-symmetry at pair ({x},{y})"
                    )
                parities.add(w[x][y] & 1)
        if len(parities) > 1:
            raise ValidationError("mixed arc-weight parity")

    @property
    def m(self) -> int:
        return self.registry.m

    @property
    def parity(self) -> int:
        """Common parity of the off-diagonal entries (0 when m < 2)."""
        if self.m < 2:
            return 0
        return self.w[0][1] & 1


def check_candidate_id(m: int, c: int) -> None:
    if not 0 <= c < m:
        raise ValidationError(f"candidate id {c} out of range for m={m}")


def pairwise_tally(profile: Profile) -> PairwiseMatrix:
    """Count, for each ordered pair, the ballot weight preferring x over y."""
    m = profile.m
    n = [[0] * m for _ in range(m)]
    for ballot in profile.ballots:
        weight = ballot.weight
        order = ballot.order
        for i in range(m):
            row = n[order[i]]
            for j in range(i + 1, m):
                row[order[j]] += weight
    return PairwiseMatrix(tuple(tuple(row) for row in n))


def build_wmg(profile: Profile) -> WeightedMajorityGraph:
    """Weighted majority graph of a profile: w[x][y] = n[x][y] - n[y][x]."""
    n = pairwise_tally(profile).n
    m = profile.m
    w = tuple(
        tuple(n[x][y] - n[y][x] for y in range(m)) for x in range(m)
    )
    return WeightedMajorityGraph(profile.registry, w)


def mcgarvey_profile(graph: WeightedMajorityGraph) -> Profile:
    """Construct a profile whose WMG equals `graph` exactly.

    For odd parity one base ballot in registry order is emitted first and
    its contribution subtracted; the even residual is then realized pair by
    pair with canceling ballot pairs, each shifting a single margin by +2.
    """
    m = graph.m
    residual = [list(row) for row in graph.w]
    ballots: list[Ballot] = []

    if graph.parity:
        base = tuple(range(m))
        ballots.append(Ballot(base))
        for x in range(m):
            for y in range(x + 1, m):
                residual[x][y] -= 1
                residual[y][x] += 1

    for x in range(m):
        for y in range(x + 1, m):
            k = residual[x][y]
            if k == 0:
                continue
            hi, lo = (x, y) if k > 0 else (y, x)
            others = [z for z in range(m) if z != hi and z != lo]
            forward = (hi, lo, *others)
            backward = (*reversed(others), hi, lo)
            for _ in range(abs(k) // 2):
                ballots.append(Ballot(forward))
                ballots.append(Ballot(backward))

    return Profile(graph.registry, tuple(ballots))
