import itertools
from fractions import Fraction

import pytest

from toursid.constructions import (
    d_family,
    directed_cycle,
    directed_path,
    impartial_four_tree,
    star,
    transitive_tournament,
)
from toursid.counting import (
    BudgetExceededError,
    PinnedPattern,
    count_homomorphisms,
    count_labeled,
    count_labeled_pinned,
    density,
    is_impartial_upto,
    oracle_count,
)
from toursid.digraph import Digraph, Tournament, fill_to_tournament, transitive_host
from toursid.hosts import all_oriented_graphs, tournament_representatives

TT3 = transitive_host(3)
TT4 = transitive_host(4)


class TestHomomorphisms:
    def test_edge_in_transitive_triangle(self):
        e = Digraph(2, [(0, 1)])
        assert count_homomorphisms(e, TT3) == 3
        assert density(e, TT3) == Fraction(1, 3)

    def test_cycle_in_transitive_host(self):
        c3 = directed_cycle(3)
        for n in (3, 4, 5, 6):
            assert count_homomorphisms(c3, transitive_host(n)) == 0

    def test_two_edge_path(self):
        # frozen from the full 4^3 map enumeration
        p2 = directed_path(2)
        assert count_homomorphisms(p2, TT4) == 4
        assert oracle_count(p2, TT4, "homs") == 4

    def test_empty_pattern(self):
        assert count_homomorphisms(Digraph(0), TT3) == 1

    def test_isolated_vertices_multiply(self):
        d = Digraph(3, [(0, 1)])  # one isolated vertex
        assert count_homomorphisms(d, TT4) == 6 * 4

    def test_limit_saturates(self):
        e = Digraph(2, [(0, 1)])
        assert count_homomorphisms(e, TT4, limit=2) == 2
        assert count_homomorphisms(directed_cycle(3), TT4, limit=2) == 0


class TestLabeled:
    def test_edge_count_is_pair_count(self):
        e = Digraph(2, [(0, 1)])
        res = count_labeled(e, TT4)
        assert res.value == 6
        assert res.bound == Fraction(16, 2)
        assert res.ratio == Fraction(3, 4)

    def test_rigid_identity(self):
        assert count_labeled(transitive_tournament(3), TT3).value == 1

    def test_two_layer_fan(self):
        # frozen from the injective 4-tuple enumeration
        res = count_labeled(d_family(2), TT4)
        assert res.value == 2
        assert oracle_count(d_family(2), TT4, "labeled") == 2

    def test_isolated_vertices_fall_factorially(self):
        d = Digraph(4, [(0, 1)])  # two isolated vertices
        assert count_labeled(d, TT4).value == 6 * 2 * 1


class TestPinned:
    def test_balanced_star_at_middle(self):
        p = PinnedPattern(star(1, 1), (0,))
        res = count_labeled_pinned(p, TT3, {0: 1})  # middle vertex of the chain
        assert res.value == 1
        assert res.bound == Fraction(9, 4)

    def test_balanced_star_at_source(self):
        p = PinnedPattern(star(1, 1), (0,))
        assert count_labeled_pinned(p, TT3, {0: 0}).value == 0

    def test_empty_pin_reduces_to_labeled(self):
        for d in (star(1, 1), d_family(2)):
            p = PinnedPattern(d, ())
            pinned = count_labeled_pinned(p, TT4, {})
            plain = count_labeled(d, TT4)
            assert pinned.value == plain.value
            assert pinned.bound == plain.bound

    def test_pinned_must_be_independent(self):
        with pytest.raises(ValueError, match="independent"):
            PinnedPattern(directed_path(1), (0, 1))

    def test_anchor_must_be_injective(self):
        p = PinnedPattern(d_family(2), (1, 2))
        with pytest.raises(ValueError, match="injective"):
            count_labeled_pinned(p, TT4, {1: 0, 2: 0})

    def test_anchor_range_checked(self):
        p = PinnedPattern(star(1, 1), (0,))
        with pytest.raises(ValueError, match="range"):
            count_labeled_pinned(p, TT3, {0: 7})

    def test_partition_identity(self):
        # each labeled copy restricts to exactly one anchor map
        cases = [
            (star(1, 1), (0,)),
            (d_family(2), (1, 2)),
            (impartial_four_tree(), (0, 3)),
        ]
        for d, pinned in cases:
            p = PinnedPattern(d, pinned)
            for t in tournament_representatives(5):
                total = sum(
                    count_labeled_pinned(p, t, dict(zip(pinned, images))).value
                    for images in itertools.permutations(range(t.n), len(pinned))
                )
                assert total == count_labeled(d, t).value


class TestDensity:
    def test_edge(self):
        assert density(Digraph(2, [(0, 1)]), TT3) == Fraction(1, 3)

    def test_cycle_zero(self):
        assert density(directed_cycle(3), transitive_host(5)) == 0

    def test_blowup_host_beats_uniform_floor(self):
        tt7 = transitive_tournament(7)
        host = fill_to_tournament(tt7.blowup(2))
        assert density(tt7, host) >= Fraction(1, 7**7)


class TestOracleAgreement:
    def test_kernel_matches_oracle_on_representatives(self, small_catalog):
        hosts = [t for n in range(1, 6) for t in tournament_representatives(n)]
        for d in small_catalog:
            for t in hosts:
                assert oracle_count(d, t, "homs") == count_homomorphisms(d, t)
                assert oracle_count(d, t, "labeled") == count_labeled(d, t).value

    def test_kernel_matches_oracle_on_random_instances(self):
        from hypothesis import given, settings
        from hypothesis import strategies as st

        from toursid.hosts import uniform_tournament
        from test_digraph import random_digraph

        @given(st.integers(0, 2**32), st.integers(1, 4), st.integers(1, 5))
        @settings(max_examples=120, deadline=None)
        def fuzz(seed, k, n):
            d = random_digraph(seed, k)
            t = uniform_tournament(n, seed + 1)
            assert oracle_count(d, t, "homs") == count_homomorphisms(d, t)
            assert oracle_count(d, t, "labeled") == count_labeled(d, t).value

        fuzz()

    def test_oracle_mode_validated(self):
        with pytest.raises(ValueError):
            oracle_count(Digraph(1), TT3, "nope")


class TestEdgeCases:
    def test_pattern_larger_than_host(self):
        assert count_labeled(transitive_tournament(4), TT3).value == 0

    def test_pattern_equal_to_host(self):
        assert count_labeled(directed_cycle(3), TT3).value == 0
        c3_host = Tournament(3, [(0, 1), (1, 2), (2, 0)])
        assert count_labeled(directed_cycle(3), c3_host).value == 3

    def test_empty_host(self):
        t0 = Tournament(0)
        assert count_labeled(Digraph(0), t0).value == 1
        assert count_labeled(Digraph(1), t0).value == 0
        assert count_homomorphisms(Digraph(0), t0) == 1


class TestInvariants:
    def test_hom_labeled_sandwich(self, small_catalog):
        # non-injective maps are at most C(v,2) n^(v-1)
        for d in small_catalog:
            for n in (3, 4, 5):
                for t in tournament_representatives(n):
                    h = count_homomorphisms(d, t)
                    nl = count_labeled(d, t).value
                    gap = h - nl
                    assert 0 <= gap <= d.n * (d.n - 1) // 2 * n ** max(d.n - 1, 0)

    def test_reversal_duality(self):
        # all 27 + 729 oriented patterns on 3 and 4 vertices; class
        # representatives stand in for every host by relabeling invariance
        hosts = [t for n in range(1, 6) for t in tournament_representatives(n)]
        for size in (3, 4):
            for d in all_oriented_graphs(size):
                for t in hosts:
                    assert density(d, t) == density(d.reverse(), t.reverse())

    def test_orientation_partition(self, hosts_upto_5):
        orientations = [
            Digraph(3, [(0, 1), (1, 2)]),
            Digraph(3, [(0, 1), (2, 1)]),
            Digraph(3, [(1, 0), (1, 2)]),
            Digraph(3, [(1, 0), (2, 1)]),
        ]
        for t in hosts_upto_5:
            n = t.n
            total = sum(count_labeled(o, t).value for o in orientations)
            assert total == n * (n - 1) * (n - 2)


class TestImpartiality:
    def test_four_vertex_tree(self):
        ok, witness = is_impartial_upto(impartial_four_tree(), 6)
        assert ok and witness is None

    def test_single_edge(self):
        ok, _ = is_impartial_upto(Digraph(2, [(0, 1)]), 6)
        assert ok

    def test_two_edge_path_fails_at_three(self):
        ok, witness = is_impartial_upto(directed_path(2), 3)
        assert not ok
        counts = sorted(count_labeled(directed_path(2), t).value for t in witness)
        assert counts == [1, 3]

    def test_guard(self):
        with pytest.raises(ValueError):
            is_impartial_upto(Digraph(1), 8)


class TestBudget:
    def test_kernel_budget(self):
        with pytest.raises(BudgetExceededError):
            count_homomorphisms(directed_path(3), transitive_host(6), budget=5)

    def test_oracle_budget(self):
        with pytest.raises(BudgetExceededError):
            oracle_count(directed_path(3), transitive_host(6), "homs", budget=5)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("TOURSID_BUDGET", "5")
        with pytest.raises(BudgetExceededError):
            count_homomorphisms(directed_path(3), transitive_host(6))
