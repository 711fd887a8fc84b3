"""Acceptance gate: one seeded, timed check per criterion.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
pass/fail lines.  Every criterion is exact (zero tolerance) and carries a
wall-clock budget.
"""

import random
import time

import pytest

from schulze import (
    CapacityError,
    InstanceGenerator,
    brute_strengths,
    brute_ucm,
    build_wmg,
    check_single_vote_necessary,
    critical_out_branching,
    homogenize,
    homogenizing_order,
    mcgarvey_profile,
    parse_election,
    serialize_election,
    solve_ucm_cowinner,
    solve_ucm_unique,
    strength_matrix,
    winning_set,
)
from schulze.ucm import resolvability_constraints, resolvability_vote

from helpers import DATA_DIR, has_cycle


def report(number: int, failures: list, detail: str, elapsed: float) -> None:
    verdict = "PASS" if not failures else "FAIL"
    print(f"criterion {number:2d} {verdict} — {detail} ({elapsed:.2f}s)")
    assert not failures, f"criterion {number}: {failures[:5]}"


def test_criterion_1_strength_oracle_equivalence():
    budget = 30.0
    gen = InstanceGenerator(seed=101, m_range=(2, 6), weight_range=(1, 9))
    failures = []
    start = time.perf_counter()
    for i, g in enumerate(gen.wmgs(2000)):
        if strength_matrix(g).s != brute_strengths(g).s:
            failures.append(i)
    elapsed = time.perf_counter() - start
    report(1, failures, "strength matrix = brute force on 2000 WMGs", elapsed)
    assert elapsed < budget


def test_criterion_2_winning_set_nonempty_and_condorcet():
    budget = 10.0
    gen = InstanceGenerator(seed=102, m_range=(1, 6), n_range=(0, 9))
    failures = []
    condorcet = 0
    start = time.perf_counter()
    for i, p in enumerate(gen.profiles(2000)):
        g = build_wmg(p)
        ws = winning_set(g)
        if not ws.winners:
            failures.append((i, "empty"))
        for x in range(p.m):
            if all(g.w[x][y] > 0 for y in range(p.m) if y != x):
                condorcet += 1
                if ws.winners != (x,):
                    failures.append((i, "condorcet"))
    elapsed = time.perf_counter() - start
    report(
        2,
        failures,
        f"2000 profiles nonempty, {condorcet} Condorcet winners consistent",
        elapsed,
    )
    assert condorcet > 100
    assert elapsed < budget


@pytest.fixture(scope="module")
def homogeneity_trials():
    """1000 seeded trials shared by criteria 3 and 4."""
    gen = InstanceGenerator(seed=103, m_range=(1, 5), n_range=(0, 8))
    rng = random.Random(103)
    homogeneity_failures = []
    structure_failures = []
    start = time.perf_counter()
    for i, p in enumerate(gen.profiles(1000)):
        g = build_wmg(p)
        s = strength_matrix(g)
        ws = winning_set(g, s)
        c = rng.choice(ws.winners)
        branching = critical_out_branching(g, c)
        lam = homogenizing_order(g, c, branching, s)

        # every tree path must be a critical path
        for x in range(p.m):
            if x == c:
                continue
            path = branching.path_from_root(x)
            strength = min(
                g.w[path[j]][path[j + 1]] for j in range(len(path) - 1)
            )
            if strength != s.s[c][x]:
                structure_failures.append((i, "tree path not critical", x))
        # tree paths must visit candidates in increasing order position
        pos = {v: j for j, v in enumerate(lam.order)}
        for x in range(p.m):
            if x == c:
                continue
            path = branching.path_from_root(x)
            if any(
                pos[path[j]] >= pos[path[j + 1]]
                for j in range(len(path) - 1)
            ):
                structure_failures.append((i, "tree path not monotone", x))
        # strengths toward c must be nonincreasing along the order
        toward_c = [s.s[x][c] for x in lam.order[1:]]
        if any(
            toward_c[j] < toward_c[j + 1] for j in range(len(toward_c) - 1)
        ):
            structure_failures.append((i, "strengths increase"))

        # replacing a random subprofile must keep c a winner
        indices = [
            j for j in range(len(p.ballots)) if rng.random() < 0.5
        ]
        rewritten = homogenize(p, indices, c)
        if c not in winning_set(build_wmg(rewritten)).winners:
            homogeneity_failures.append((i, c, indices))
    elapsed = time.perf_counter() - start
    return homogeneity_failures, structure_failures, elapsed


def test_criterion_3_homogeneity_preserves_winner(homogeneity_trials):
    homogeneity_failures, _, elapsed = homogeneity_trials
    report(3, homogeneity_failures, "1000 homogenize trials keep c a winner", elapsed)
    assert elapsed < 30.0


def test_criterion_4_tree_and_ordering_structure(homogeneity_trials):
    _, structure_failures, elapsed = homogeneity_trials
    report(
        4,
        structure_failures,
        "critical tree paths + both ordering properties on the same trials",
        elapsed,
    )


@pytest.fixture(scope="module")
def ucm_instances():
    """3000 seeded (profile, c, |M|) instances shared by criteria 5 and 6."""
    gen = InstanceGenerator(seed=105, m_range=(2, 4), n_range=(0, 5))
    rng = random.Random(105)
    instances = []
    for p in gen.profiles(3000):
        instances.append((p, rng.randrange(p.m), rng.choice([1, 2, 3])))
    return instances


def test_criterion_5_ucm_exactness(ucm_instances):
    budget = 60.0
    failures = []
    independent_checked = 0
    start = time.perf_counter()
    for i, (p, c, k) in enumerate(ucm_instances):
        mine = solve_ucm_cowinner(p, c, k)
        ref = brute_ucm(p, c, k)
        if mine.found != ref.found:
            failures.append((i, "decision"))
            continue
        if mine.found:
            final = build_wmg(p.extend(mine.ballots))
            if c not in winning_set(final).winners:
                failures.append((i, "witness"))
        if p.m <= 3 and k <= 2:
            independent_checked += 1
            free = brute_ucm(p, c, k, search="independent")
            if free.found != mine.found:
                failures.append((i, "independent"))
    elapsed = time.perf_counter() - start
    report(
        5,
        failures,
        f"3000 instances exact vs identical oracle "
        f"({independent_checked} also vs independent)",
        elapsed,
    )
    assert elapsed < budget


def test_criterion_6_unique_cowinner_bridge(ucm_instances):
    failures = []
    start = time.perf_counter()
    for i, (p, c, k) in enumerate(ucm_instances):
        unique = solve_ucm_unique(p, c, k)
        co_short = solve_ucm_cowinner(p, c, k - 1)
        if unique.found != co_short.found:
            failures.append((i, "bridge"))
            continue
        if unique.found:
            final = winning_set(build_wmg(p.extend(unique.ballots)))
            if final.winners != (c,):
                failures.append((i, "not unique"))
    elapsed = time.perf_counter() - start
    report(
        6,
        failures,
        "unique(|M|) <=> co-winner(|M|-1) and unique witnesses verified",
        elapsed,
    )


def test_criterion_7_resolvability():
    budget = 20.0
    gen = InstanceGenerator(seed=107, m_range=(1, 6), n_range=(0, 9))
    rng = random.Random(107)
    failures = []
    start = time.perf_counter()
    for i, p in enumerate(gen.profiles(1000)):
        c = rng.choice(winning_set(build_wmg(p)).winners)
        constraints = resolvability_constraints(p, c)
        if has_cycle(p.m, constraints):
            failures.append((i, "cycle"))
            continue
        vote = resolvability_vote(p, c)
        if winning_set(build_wmg(p.extend((vote,)))).winners != (c,):
            failures.append((i, "not unique"))
    elapsed = time.perf_counter() - start
    report(7, failures, "1000 co-winners promoted to unique winners", elapsed)
    assert elapsed < budget


def test_criterion_8_necessary_condition_gap():
    gen = InstanceGenerator(seed=8008, m_range=(4, 5), weight_range=(1, 5))
    failures = []
    start = time.perf_counter()
    mined = None
    for g in gen.wmgs(500):
        p = mcgarvey_profile(g)
        winners = winning_set(g).winners
        for c in range(g.m):
            if c in winners:
                continue
            if not check_single_vote_necessary(p, c):
                continue
            if not solve_ucm_cowinner(p, c, 1).found:
                mined = (g, c)
                break
        if mined:
            break
    if mined is None:
        failures.append("random search found no gap instance")

    fixture = parse_election((DATA_DIR / "necessary_gap.txt").read_text())
    fc = fixture.registry.id_of("b")
    fp = mcgarvey_profile(fixture)
    if fc in winning_set(fixture).winners:
        failures.append("fixture candidate is already a winner")
    if not check_single_vote_necessary(fp, fc):
        failures.append("fixture fails the necessary condition")
    if solve_ucm_cowinner(fp, fc, 1).found:
        failures.append("fixture is manipulable after all")
    if mined is not None and serialize_election(mined[0]) != serialize_election(
        fixture
    ):
        failures.append("mined instance no longer matches the frozen fixture")
    elapsed = time.perf_counter() - start
    report(
        8,
        failures,
        "necessary-but-insufficient instance mined and frozen as fixture",
        elapsed,
    )


def test_criterion_9_mcgarvey_round_trip():
    budget = 10.0
    gen = InstanceGenerator(seed=109, m_range=(1, 6), weight_range=(1, 11))
    failures = []
    start = time.perf_counter()
    for i, g in enumerate(gen.wmgs(1000)):
        if build_wmg(mcgarvey_profile(g)).w != g.w:
            failures.append(i)
    elapsed = time.perf_counter() - start
    report(9, failures, "1000 WMGs realized and rebuilt exactly", elapsed)
    assert elapsed < budget


def test_criterion_10_polynomial_smoke():
    budget = 5.0
    gen = InstanceGenerator(seed=110, m_range=(50, 50), n_range=(201, 201))
    p = next(iter(gen.profiles(1)))
    failures = []
    verdicts = []
    start = time.perf_counter()
    # Candidate 0 is manipulable at this seed, candidate 7 is not; the
    # budget covers both solves.
    for c in (0, 7):
        outcome = solve_ucm_cowinner(p, c, 10)
        verdicts.append("found" if outcome.found else "impossible")
        if outcome.found:
            final = build_wmg(p.extend(outcome.ballots))
            if c not in winning_set(final).winners:
                failures.append(f"witness for {c} failed verification")
    elapsed = time.perf_counter() - start
    if elapsed >= budget:
        failures.append(f"solver took {elapsed:.2f}s")
    if verdicts != ["found", "impossible"]:
        failures.append(f"unexpected verdicts {verdicts}")
    with pytest.raises(CapacityError):
        brute_ucm(p, 0, 10)
    report(
        10,
        failures,
        f"m=50, n=201, |M|=10 solved twice ({'/'.join(verdicts)}); "
        "oracle capacity-rejected",
        elapsed,
    )
