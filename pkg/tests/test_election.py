"""Registry/ballot/profile validation, tallies, WMG, and McGarvey."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schulze import (
    Ballot,
    CandidateRegistry,
    InstanceGenerator,
    Profile,
    ValidationError,
    WeightedMajorityGraph,
    build_wmg,
    default_registry,
    mcgarvey_profile,
    pairwise_tally,
)

from helpers import profile, registry


class TestRegistry:
    def test_ids_follow_registry_order(self):
        reg = registry("z", "a", "m")
        assert reg.index == {"z": 0, "a": 1, "m": 2}
        assert reg.m == 3

    @pytest.mark.parametrize(
        "names",
        [("a", "a"), ("",), ("a b",), ("a>b",), ("a,b",), ("a:b",), ("a#b",), ()],
    )
    def test_rejects_bad_names(self, names):
        with pytest.raises(ValidationError):
            CandidateRegistry(tuple(names))

    def test_unknown_candidate(self):
        with pytest.raises(ValidationError, match="unknown"):
            registry("a", "b").id_of("q")


class TestProfileValidation:
    def test_non_permutation_names_ballot_index(self):
        reg = registry("a", "b", "c")
        with pytest.raises(ValidationError, match="ballot 1"):
            Profile(reg, (Ballot((0, 1, 2)), Ballot((0, 0, 1))))

    def test_short_ballot_rejected(self):
        reg = registry("a", "b", "c")
        with pytest.raises(ValidationError, match="ballot 0"):
            Profile(reg, (Ballot((0, 1)),))

    def test_non_positive_weight_rejected(self):
        with pytest.raises(ValidationError, match="weight"):
            Ballot((0, 1), 0)


class TestPairwiseTally:
    def test_empty_profile_all_zero(self):
        p = Profile(registry("a", "b", "c"), ())
        assert pairwise_tally(p).n == ((0, 0, 0), (0, 0, 0), (0, 0, 0))

    def test_hand_counted_example(self):
        reg = registry("a", "b", "c")
        p = profile(reg, "a>b>c", "c>b>a", weights=[2, 1])
        n = pairwise_tally(p).n
        a, b, c = 0, 1, 2
        assert n[a][b] == 2 and n[b][a] == 1
        assert n[a][c] == 2 and n[c][a] == 1
        assert n[b][c] == 2 and n[c][b] == 1

    def test_single_voter_two_candidates(self):
        p = profile(registry("a", "b"), "a>b")
        assert pairwise_tally(p).n == ((0, 1), (0, 0))

    def test_row_column_sum_law(self):
        gen = InstanceGenerator(seed=11, m_range=(2, 6), n_range=(0, 9))
        for p in gen.profiles(150):
            n = pairwise_tally(p).n
            total = p.total_weight
            for x in range(p.m):
                for y in range(p.m):
                    if x != y:
                        assert n[x][y] + n[y][x] == total
                    else:
                        assert n[x][y] == 0


@st.composite
def random_profiles(draw):
    m = draw(st.integers(1, 5))
    orders = draw(
        st.lists(st.permutations(list(range(m))), min_size=0, max_size=8)
    )
    weights = draw(
        st.lists(st.integers(1, 5), min_size=len(orders), max_size=len(orders))
    )
    reg = default_registry(m)
    return Profile(
        reg, tuple(Ballot(tuple(o), w) for o, w in zip(orders, weights))
    )


class TestBuildWmg:
    def test_margins_from_tally(self):
        reg = registry("a", "b", "c")
        p = profile(reg, "a>b>c", "c>b>a", weights=[2, 1])
        w = build_wmg(p).w
        assert w[0][1] == 1 and w[1][2] == 1 and w[0][2] == 1
        assert w[1][0] == -1 and w[2][1] == -1 and w[2][0] == -1

    def test_reversal_cancellation(self):
        reg = registry("a", "b", "c")
        p = profile(reg, "a>b>c", "c>b>a")
        assert build_wmg(p).w == ((0, 0, 0), (0, 0, 0), (0, 0, 0))

    def test_three_cycle(self):
        reg = registry("a", "b", "c")
        p = profile(reg, "a>b>c", "b>c>a", "c>a>b")
        w = build_wmg(p).w
        assert w[0][1] == 1 and w[1][2] == 1 and w[2][0] == 1

    @given(random_profiles())
    @settings(max_examples=60, deadline=None)
    def test_skew_symmetry_and_uniform_parity(self, p):
        g = build_wmg(p)
        parity = p.total_weight & 1
        for x in range(p.m):
            assert g.w[x][x] == 0
            for y in range(p.m):
                assert g.w[x][y] == -g.w[y][x]
                if x != y:
                    assert g.w[x][y] & 1 == parity


class TestWmgValidation:
    def test_rejects_broken_skew_symmetry(self):
        reg = registry("a", "b")
        with pytest.raises(ValidationError, match="skew"):
            WeightedMajorityGraph(reg, ((0, 1), (1, 0)))

    def test_rejects_mixed_parity(self):
        reg = registry("a", "b", "c")
        with pytest.raises(ValidationError, match="parity"):
            WeightedMajorityGraph(
                reg, ((0, 1, 2), (-1, 0, 0), (-2, 0, 0))
            )

    def test_rejects_nonzero_diagonal(self):
        reg = registry("a", "b")
        with pytest.raises(ValidationError, match="diagonal"):
            WeightedMajorityGraph(reg, ((1, 0), (0, 0)))


class TestMcGarvey:
    def test_zero_graph_gives_empty_profile(self):
        reg = registry("a", "b", "c")
        g = WeightedMajorityGraph(reg, ((0, 0, 0), (0, 0, 0), (0, 0, 0)))
        p = mcgarvey_profile(g)
        assert p.ballots == ()
        assert build_wmg(p).w == g.w

    def test_single_even_pair(self):
        reg = registry("a", "b", "c")
        g = WeightedMajorityGraph(reg, ((0, 2, 0), (-2, 0, 0), (0, 0, 0)))
        p = mcgarvey_profile(g)
        orders = [b.order for b in p.ballots]
        assert orders == [(0, 1, 2), (2, 0, 1)]  # a>b>c and c>a>b
        assert build_wmg(p).w == g.w

    def test_odd_weight_two_candidates(self):
        reg = registry("a", "b")
        g = WeightedMajorityGraph(reg, ((0, 3), (-3, 0)))
        p = mcgarvey_profile(g)
        assert len(p.ballots) == 3  # base vote plus one canceling pair
        assert build_wmg(p).w == g.w

    def test_round_trip_random(self):
        gen = InstanceGenerator(seed=97, m_range=(1, 6), weight_range=(1, 11))
        for g in gen.wmgs(200):
            assert build_wmg(mcgarvey_profile(g)).w == g.w


class TestHugeWeights:
    def test_margins_beyond_int64_are_exact(self):
        # total weight exceeds 2**62; margins must not wrap
        reg = registry("a", "b")
        big = 2**61
        p = profile(reg, "a>b", "b>a", weights=[big + 1, big])
        assert p.total_weight == 2 * big + 1
        g = build_wmg(p)
        assert g.w == ((0, 1), (-1, 0))
        n = pairwise_tally(p).n
        assert n[0][1] == big + 1 and n[1][0] == big
