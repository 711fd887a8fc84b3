"""Brute-force references certifying the polynomial algorithms.

Everything here recomputes results straight from the definitions: path
strengths by enumerating all simple paths, winners by the non-domination
definition over those strengths, margins by per-ballot position
comparison.  None of the production code paths are reused, so agreement
between the two sides is meaningful evidence.

All enumerations carry hard capacity bounds and refuse larger inputs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .election import (
    Ballot,
    CandidateRegistry,
    Profile,
    WeightedMajorityGraph,
    check_candidate_id,
)
from .engine import StrengthMatrix
from .errors import CapacityError, ValidationError

BRUTE_MAX_CANDIDATES = 7
BRUTE_INDEPENDENT_MAX_COMBINATIONS = 10**6


@dataclass(frozen=True)
class BruteOutcome:
    """Exhaustive-search verdict; votes holds the first witness found."""

    found: bool
    votes: tuple[tuple[int, ...], ...] = ()


@lru_cache(maxsize=None)
def _simple_paths(m: int) -> dict[tuple[int, int], tuple[tuple[int, ...], ...]]:
    """Every simple path (length >= 1) per ordered pair in a complete digraph."""
    paths: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            rest = [z for z in range(m) if z != x and z != y]
            found = []
            for r in range(len(rest) + 1):
                for mid in itertools.permutations(rest, r):
                    found.append((x, *mid, y))
            paths[(x, y)] = tuple(found)
    return paths


def brute_strengths(graph: WeightedMajorityGraph) -> StrengthMatrix:
    """Maximize the minimum arc weight over all simple paths, per pair."""
    m = graph.m
    if m > BRUTE_MAX_CANDIDATES:
        raise CapacityError(
            f"simple-path enumeration capped at m={BRUTE_MAX_CANDIDATES}, got {m}"
        )
    w = graph.w
    s: list[list[int | None]] = [[None] * m for _ in range(m)]
    for (x, y), paths in _simple_paths(m).items():
        s[x][y] = max(
            min(w[p[i]][p[i + 1]] for i in range(len(p) - 1)) for p in paths
        )
    return StrengthMatrix(tuple(tuple(row) for row in s))


def _margins(profile: Profile) -> list[list[int]]:
    """Net pairwise margins recomputed from ballot positions."""
    m = profile.m
    w = [[0] * m for _ in range(m)]
    for ballot in profile.ballots:
        pos = [0] * m
        for rank, cand in enumerate(ballot.order):
            pos[cand] = rank
        for x in range(m):
            for y in range(x + 1, m):
                if pos[x] < pos[y]:
                    w[x][y] += ballot.weight
                    w[y][x] -= ballot.weight
                else:
                    w[x][y] -= ballot.weight
                    w[y][x] += ballot.weight
    return w


def _winners_by_definition(
    w: list[list[int]], registry: CandidateRegistry
) -> tuple[int, ...]:
    graph = WeightedMajorityGraph(registry, tuple(tuple(row) for row in w))
    s = brute_strengths(graph).s
    m = len(w)
    return tuple(
        x
        for x in range(m)
        if not any(y != x and s[y][x] > s[x][y] for y in range(m))
    )


def _order_margins(order: tuple[int, ...], m: int) -> list[list[int]]:
    delta = [[0] * m for _ in range(m)]
    for i in range(m):
        x = order[i]
        for j in range(i + 1, m):
            delta[x][order[j]] = 1
            delta[order[j]][x] = -1
    return delta


def brute_ucm(
    p_nm: Profile,
    c: int,
    m_count: int,
    mode: str = "co-winner",
    search: str = "identical",
) -> BruteOutcome:
    """Exhaustive unweighted manipulation search.

    `identical` tries every common vote (all m! orders); `independent`
    tries every combination of per-manipulator votes.  Returns the
    lexicographically first witness.
    """
    m = p_nm.m
    check_candidate_id(m, c)
    if mode not in ("co-winner", "unique"):
        raise ValidationError(f"unknown mode {mode!r}")
    if search not in ("identical", "independent"):
        raise ValidationError(f"unknown search {search!r}")
    if m_count < 0:
        raise ValidationError(f"manipulator count must be >= 0, got {m_count}")
    if m > BRUTE_MAX_CANDIDATES:
        raise CapacityError(
            f"brute-force search capped at m={BRUTE_MAX_CANDIDATES}, got {m}"
        )

    base = _margins(p_nm)
    if m_count == 0:
        if _accepts(base, p_nm.registry, c, mode):
            return BruteOutcome(True, ())
        return BruteOutcome(False)

    orders = list(itertools.permutations(range(m)))
    deltas = {order: _order_margins(order, m) for order in orders}

    if search == "identical":
        for order in orders:
            if _accepts(_added(base, [deltas[order]] * m_count), p_nm.registry, c, mode):
                return BruteOutcome(True, (order,) * m_count)
        return BruteOutcome(False)

    combos = len(orders) ** m_count
    if combos > BRUTE_INDEPENDENT_MAX_COMBINATIONS:
        raise CapacityError(
            f"{combos} vote combinations exceed the cap of "
            f"{BRUTE_INDEPENDENT_MAX_COMBINATIONS}"
        )
    for votes in itertools.product(orders, repeat=m_count):
        if _accepts(_added(base, [deltas[v] for v in votes]), p_nm.registry, c, mode):
            return BruteOutcome(True, votes)
    return BruteOutcome(False)


def brute_wcm(
    p_nm: Profile, weights: tuple[int, ...] | list[int], c: int
) -> BruteOutcome:
    """Exhaustive weighted manipulation over identical common votes."""
    m = p_nm.m
    check_candidate_id(m, c)
    for weight in weights:
        if weight < 1:
            raise ValidationError(f"manipulator weight must be positive, got {weight}")
    if m > BRUTE_MAX_CANDIDATES:
        raise CapacityError(
            f"brute-force search capped at m={BRUTE_MAX_CANDIDATES}, got {m}"
        )
    base = _margins(p_nm)
    if not weights:
        if _accepts(base, p_nm.registry, c, "co-winner"):
            return BruteOutcome(True, ())
        return BruteOutcome(False)
    total = sum(weights)
    for order in itertools.permutations(range(m)):
        delta = _order_margins(order, m)
        shifted = [
            [base[x][y] + total * delta[x][y] for y in range(m)] for x in range(m)
        ]
        if _accepts(shifted, p_nm.registry, c, "co-winner"):
            return BruteOutcome(True, (order,) * len(weights))
    return BruteOutcome(False)


def _added(
    base: list[list[int]], deltas: list[list[list[int]]]
) -> list[list[int]]:
    m = len(base)
    out = [row[:] for row in base]
    for delta in deltas:
        for x in range(m):
            row = out[x]
            drow = delta[x]
            for y in range(m):
                row[y] += drow[y]
    return out


def _accepts(
    w: list[list[int]], registry: CandidateRegistry, c: int, mode: str
) -> bool:
    winners = _winners_by_definition(w, registry)
    if mode == "co-winner":
        return c in winners
    return winners == (c,)


_NAME_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def default_registry(m: int) -> CandidateRegistry:
    """Single letters a.. for small m, x0.. beyond the alphabet."""
    if m <= len(_NAME_ALPHABET):
        return CandidateRegistry(tuple(_NAME_ALPHABET[:m]))
    return CandidateRegistry(tuple(f"x{i}" for i in range(m)))


@dataclass(frozen=True)
class InstanceGenerator:
    """Deterministic stream of random elections.

    The same seed and parameters always produce the same stream,
    regardless of how often or from where it is consumed.
    """

    seed: int
    m_range: tuple[int, int] = (2, 6)
    n_range: tuple[int, int] = (0, 9)
    weight_range: tuple[int, int] = (1, 9)
    culture: str = "impartial"

    def profiles(self, count: int):
        """Yield `count` random profiles (impartial culture, weight-1 votes)."""
        rng = random.Random(self.seed)
        for _ in range(count):
            m = rng.randint(*self.m_range)
            n = rng.randint(*self.n_range)
            yield self.random_profile(rng, m, n)

    def wmgs(self, count: int, parity: int | None = None):
        """Yield `count` random skew-symmetric uniform-parity graphs.

        With `parity` unset each instance draws its own parity.
        """
        rng = random.Random(self.seed)
        for _ in range(count):
            m = rng.randint(*self.m_range)
            yield self.random_wmg(rng, m, parity)

    @staticmethod
    def random_profile(rng: random.Random, m: int, n: int) -> Profile:
        registry = default_registry(m)
        ballots = []
        for _ in range(n):
            order = list(range(m))
            rng.shuffle(order)
            ballots.append(Ballot(tuple(order)))
        return Profile(registry, tuple(ballots))

    def random_wmg(
        self, rng: random.Random, m: int, parity: int | None = None
    ) -> WeightedMajorityGraph:
        registry = default_registry(m)
        cap = rng.randint(*self.weight_range)
        if parity is None:
            parity = rng.randint(0, 1) if cap >= 1 else 0
        values = [v for v in range(-cap, cap + 1) if v & 1 == parity]
        if not values:
            raise ValidationError(
                f"no weights of parity {parity} within magnitude {cap}"
            )
        w = [[0] * m for _ in range(m)]
        for x in range(m):
            for y in range(x + 1, m):
                v = rng.choice(values)
                w[x][y] = v
                w[y][x] = -v
        return WeightedMajorityGraph(registry, tuple(tuple(row) for row in w))
