import json
from fractions import Fraction

import pytest

from toursid.constructions import (
    d_family,
    directed_cycle,
    directed_path,
    impartial_four_tree,
    star,
    subset_bipartite,
    transitive_tournament,
)
from toursid.counting import PinnedPattern, count_labeled, count_labeled_pinned, oracle_count
from toursid.digraph import Digraph, Tournament, transitive_host
from toursid.formats import trn_loads
from toursid.hosts import uniform_tournament
from toursid.properties import (
    PropertyReport,
    check_anti_exhaustive,
    check_anti_on_family,
    check_strong_anti,
    classify_star,
    falsify_by_blowup,
    forcing_probe,
    impartiality_report,
    interpolate_to_density,
    quasirandom_epsilon,
    sampled_density,
    sidorenko_scan_exhaustive,
    star_expected_density,
    star_two_block_profile,
    two_block_tournament,
)
from toursid.rng import blend


def poly_derivative_at_zero(f, degree):
    """Exact derivative at 0 of a polynomial given as a callable, via Newton
    divided differences on the integer points 0..degree."""
    xs = list(range(degree + 1))
    table = [Fraction(f(x)) for x in xs]
    coeffs = [table[0]]
    for level in range(1, degree + 1):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        coeffs.append(table[0])
    # Newton form: sum_j c_j prod_{i<j} (x - i); derivative at 0
    deriv = Fraction(0)
    for j in range(1, degree + 1):
        prod_rule = Fraction(0)
        for skip in range(j):
            term = Fraction(1)
            for i in range(j):
                if i != skip:
                    term *= Fraction(0 - i)
            prod_rule += term
        deriv += coeffs[j] * prod_rule
    return deriv


class TestAntiExhaustive:
    def test_two_edge_path_holds(self):
        report = check_anti_exhaustive(directed_path(2), 5)
        assert report.verdict == "holds-upto"
        assert report.extremal_ratio <= 1

    def test_single_edge_ratio_curve(self):
        report = check_anti_exhaustive(Digraph(2, [(0, 1)]), 5)
        for row in report.curve:
            n = row["n"]
            expected = Fraction(n - 1, n) if n > 1 else Fraction(0)
            assert Fraction(int(row["max_ratio"]["num"]), int(row["max_ratio"]["den"])) == expected

    def test_dedup_matches_raw(self):
        for d in (directed_path(2), directed_cycle(3), star(2, 0)):
            raw = check_anti_exhaustive(d, 5, dedup=False)
            classes = check_anti_exhaustive(d, 5, dedup=True)
            assert raw.extremal_ratio == classes.extremal_ratio
            assert raw.verdict == classes.verdict

    def test_jobs_match_sequential(self):
        d = directed_path(2)
        seq = check_anti_exhaustive(d, 5, jobs=1)
        par = check_anti_exhaustive(d, 5, jobs=2)
        assert seq.to_json() == par.to_json()

    def test_guard(self):
        with pytest.raises(ValueError):
            check_anti_exhaustive(Digraph(1), 8)


class TestFamilyScan:
    def test_out_star_first_violation_at_twelve(self):
        report = check_anti_on_family(star(2, 0), "transitive", range(4, 15))
        assert report.verdict == "violated"
        first = next(row for row in report.curve if row["violated"])
        assert first["n"] == 12
        witness = trn_loads(report.witness_trn)
        assert witness.n == 12
        # independent routes: the closed form and the unpruned oracle
        assert count_labeled(star(2, 0), witness).value == 12 * 11 * 10 // 3
        assert oracle_count(star(2, 0), witness, "labeled") == 12 * 11 * 10 // 3
        assert 12 * 11 * 10 // 3 > 12**3 // 4

    def test_transitive_counts_below_twelve_hold(self):
        report = check_anti_on_family(star(2, 0), "transitive", range(4, 12))
        assert report.verdict == "holds-upto"

    def test_blowup_family_violates_for_dense_pattern(self):
        tt7 = transitive_tournament(7)
        report = check_anti_on_family(tt7, "blowup", [2])
        assert report.verdict == "violated"
        assert trn_loads(report.witness_trn).n == 14

    def test_balanced_star_on_transitive_holds(self):
        report = check_anti_on_family(star(1, 1), "transitive", range(2, 31))
        assert report.verdict == "holds-upto"

    def test_two_block_sampled_violation(self):
        report = check_anti_on_family(
            star(1, 3),
            "two-block",
            [120],
            c=Fraction(1, 10),
            seed=7,
            samples=100_000,
        )
        assert report.verdict == "violated"
        assert report.regime["kind"] == "sampled-family"

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            check_anti_on_family(Digraph(1), "nope", [3])


class TestBlowupFalsifier:
    def test_dense_pattern_has_falsifier(self):
        res = falsify_by_blowup(transitive_tournament(7))
        assert res is not None
        host, dens = res
        assert host.n == 14
        assert dens >= Fraction(1, 7**7)
        assert dens > Fraction(1, 2**21)

    def test_sparse_patterns_do_not(self):
        assert falsify_by_blowup(directed_path(2)) is None
        assert falsify_by_blowup(subset_bipartite(2)[0]) is None

    def test_floor_holds_under_arbitrary_fills(self):
        # the block embeddings survive no matter how the blowup is completed
        from toursid.counting import density
        from toursid.digraph import fill_to_tournament

        tt5 = transitive_tournament(5)
        floor = Fraction(1, 5**5)
        blown = tt5.blowup(2)
        assert density(tt5, fill_to_tournament(blown, "lex")) >= floor
        for seed in (1, 2, 3):
            host = fill_to_tournament(blown, "seeded", seed=seed)
            assert density(tt5, host) >= floor


class TestStrongAnti:
    def test_balanced_star_center_pin(self):
        p = PinnedPattern(star(1, 1), (0,))
        report = check_strong_anti(p, 5)
        assert report.verdict == "holds-upto"

    def test_equality_case_on_rotational_host(self, rotational_5):
        p = PinnedPattern(star(1, 1), (0,))
        for u in range(5):
            res = count_labeled_pinned(p, rotational_5, {0: u})
            assert res.value == 4  # in-degree times out-degree, both 2

    def test_empty_pin_matches_plain_check(self):
        d = directed_cycle(3)
        pinned = check_strong_anti(PinnedPattern(d, ()), 5)
        plain = check_anti_exhaustive(d, 5)
        assert pinned.verdict == plain.verdict
        assert pinned.extremal_ratio == plain.extremal_ratio

    def test_guard(self):
        with pytest.raises(ValueError):
            check_strong_anti(PinnedPattern(Digraph(1), ()), 7)


class TestStarClassifier:
    @pytest.mark.parametrize(
        "d_out,d_in,label",
        [
            (3, 0, "sidorenko"),
            (0, 4, "sidorenko"),
            (2, 2, "anti-sidorenko"),
            (3, 4, "anti-sidorenko"),
            (3, 1, "neither"),
            (1, 3, "neither"),
            (1, 0, "both"),
            (0, 1, "both"),
        ],
    )
    def test_labels(self, d_out, d_in, label):
        assert classify_star(d_out, d_in).label == label

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            classify_star(0, 0)


class TestTwoBlock:
    def test_deterministic(self):
        a = two_block_tournament(30, Fraction(1, 3), seed=5)
        b = two_block_tournament(30, Fraction(1, 3), seed=5)
        assert a == b
        assert a != two_block_tournament(30, Fraction(1, 3), seed=6)

    def test_block_edges_forced(self):
        t = two_block_tournament(10, Fraction(1, 2), seed=1)
        for i in range(5):
            for j in range(5, 10):
                assert t.has_edge(i, j)

    def test_fraction_bounds(self):
        with pytest.raises(ValueError):
            two_block_tournament(5, Fraction(3, 2), seed=0)


class TestStarProfile:
    def test_endpoints_are_one(self):
        for d_out in (1, 2, 3):
            for d_in in (1, 2, 3):
                assert star_two_block_profile(0, d_out, d_in) == 1
                assert star_two_block_profile(1, d_out, d_in) == 1

    def test_derivative_at_zero(self):
        for d_out in (1, 2, 3):
            for d_in in (1, 2, 3):
                degree = 1 + d_out + d_in
                deriv = poly_derivative_at_zero(
                    lambda c: star_two_block_profile(Fraction(c), d_out, d_in), degree
                )
                assert deriv == d_in - d_out - 1

    def test_expected_density_scaling(self):
        c = Fraction(1, 4)
        assert star_expected_density(c, 1, 3) == star_two_block_profile(c, 1, 3) / 16

    def test_monte_carlo_agreement_on_grid(self):
        for d_out in (1, 2, 3):
            for d_in in (1, 2, 3):
                for c in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
                    seed = blend(99, d_out, d_in, c.numerator, c.denominator)
                    host = two_block_tournament(768, c, seed)
                    est = sampled_density(star(d_out, d_in), host, 12_000, blend(seed, 1))
                    expect = float(star_expected_density(c, d_out, d_in))
                    assert abs(float(est.estimate) - expect) <= 3 * est.stderr


class TestQuasirandomEpsilon:
    def test_transitive_ten(self):
        assert quasirandom_epsilon(transitive_host(10)) == Fraction(1, 4)

    def test_single_vertex(self):
        assert quasirandom_epsilon(Tournament(1)) == 0

    def test_invariance_under_reversal_and_relabeling(self):
        perm = tuple((i * 5 + 3) % 12 for i in range(12))
        for seed in range(5):
            t = uniform_tournament(12, seed)
            eps = quasirandom_epsilon(t)
            assert quasirandom_epsilon(t.reverse()) == eps
            assert quasirandom_epsilon(t.relabel(perm)) == eps

    def test_sampled_is_a_lower_bound(self):
        t = uniform_tournament(14, 9)
        exact = quasirandom_epsilon(t)
        sampled = quasirandom_epsilon(t, "sampled", samples=300, seed=4)
        assert sampled <= exact

    def test_sampled_estimate_on_large_uniform_host(self):
        t = uniform_tournament(200, 17)
        est = quasirandom_epsilon(t, "sampled", samples=500, seed=8)
        assert 0 <= est < Fraction(1, 10)  # random hosts show no large bias

    def test_exact_guard(self):
        with pytest.raises(ValueError):
            quasirandom_epsilon(transitive_host(21))


class TestInterpolation:
    def test_constant_count_pattern_crosses_immediately(self):
        e = Digraph(2, [(0, 1)])
        t5 = transitive_host(5)
        res = interpolate_to_density(e, t5, t5.reverse(), 0, target=10)
        assert res.index == 0
        assert set(res.h_values) == {10}

    def test_step_bound_for_transitive_triangle(self):
        d = transitive_tournament(3)
        t5 = transitive_host(5)
        h_lo = 10  # transitive triples in the transitive host: C(5,3)
        res = interpolate_to_density(d, t5, t5.reverse(), 0, target=h_lo)
        bound = d.n**2 * 5 ** (d.n - 2)
        assert all(abs(step) <= bound for step in res.deltas)
        assert len(res.deltas) == 10

    def test_exclusion_mask_respected(self):
        d = transitive_tournament(3)
        t5 = transitive_host(5)
        rev = t5.reverse()
        res = interpolate_to_density(d, t5, rev, (3, 4), target=10)
        assert len(res.deltas) == 3  # only pairs inside {0,1,2} may flip
        final = res.h_values[-1]
        walked = interpolate_to_density(d, t5, rev, (3, 4), target=final)
        end = walked.h_values[-1]
        assert end == final
        # pairs touching the excluded vertices keep the low orientation
        for i in range(5):
            for j in range(i + 1, 5):
                if i >= 3 or j >= 3:
                    continue
        for v in (3, 4):
            for u in range(5):
                if u != v:
                    assert walked.tournament.has_edge(u, v) == t5.has_edge(u, v)

    def test_unbracketed_target_rejected(self):
        e = Digraph(2, [(0, 1)])
        t5 = transitive_host(5)
        with pytest.raises(ValueError, match="bracketed"):
            interpolate_to_density(e, t5, t5.reverse(), 0, target=11)


class TestForcingProbe:
    def test_deviation_tracks_epsilon(self):
        gadget, _ = subset_bipartite(2)
        rows = forcing_probe(
            gadget,
            [
                ("transitive-12", transitive_host(12)),
                ("uniform-40", uniform_tournament(40, 11)),
            ],
            samples=20_000,
            seed=13,
        )
        ordered = {row.label: row for row in rows}
        assert ordered["transitive-12"].epsilon == Fraction(1, 4)
        assert ordered["transitive-12"].deviation_approx > ordered["uniform-40"].deviation_approx
        assert ordered["transitive-12"].epsilon_approx > ordered["uniform-40"].epsilon_approx

    def test_monotone_trend_across_host_types(self):
        # directional bias shrinks from transitive through planted to uniform,
        # and the count deviation shrinks with it
        gadget, _ = subset_bipartite(2)
        rows = forcing_probe(
            gadget,
            [
                ("transitive-16", transitive_host(16)),
                ("two-block-60", two_block_tournament(60, Fraction(1, 2), 3)),
                ("uniform-60", uniform_tournament(60, 3)),
            ],
            samples=30_000,
            seed=5,
        )
        by_label = {row.label: row for row in rows}
        assert by_label["transitive-16"].epsilon == Fraction(1, 4)
        assert (
            by_label["transitive-16"].epsilon_approx
            > by_label["two-block-60"].epsilon_approx
            > by_label["uniform-60"].epsilon_approx
        )
        assert (
            by_label["transitive-16"].deviation_approx
            > by_label["two-block-60"].deviation_approx
            > by_label["uniform-60"].deviation_approx
        )

    def test_large_host_requires_seed(self):
        gadget, _ = subset_bipartite(2)
        with pytest.raises(ValueError, match="samples"):
            forcing_probe(gadget, [("big", uniform_tournament(40, 1))])


class TestOpenScans:
    def test_four_cycle_scan_reports_without_prejudice(self):
        # length 0 mod 4: under-representation is not expected to hold in
        # general, but no desk-scale witness is known; the scan only reports
        report = check_anti_exhaustive(directed_cycle(4), 6, dedup=True)
        assert report.extremal_ratio > 0
        assert PropertyReport.from_json(report.to_json()).to_json() == report.to_json()

    def test_tree_orientations_hold_the_bound_at_small_sizes(self):
        from toursid.constructions import tree_anti_orientation
        from toursid.digraph import UndirectedGraph

        trees = [
            UndirectedGraph(3, [(0, 1), (0, 2)]),
            UndirectedGraph(5, [(0, i) for i in range(1, 5)]),
            UndirectedGraph(4, [(0, 1), (0, 2), (0, 3)]),
        ]
        for tree in trees:
            oriented = tree_anti_orientation(tree)
            report = check_anti_exhaustive(oriented, 5, dedup=True)
            assert report.verdict == "holds-upto"

    def test_out_star_holds_exhaustively_below_the_family_violation(self):
        report = check_anti_exhaustive(star(2, 0), 6, dedup=True)
        assert report.verdict == "holds-upto"


class TestReports:
    def test_round_trip_with_witness_verification(self):
        report = check_anti_on_family(star(2, 0), "transitive", [11, 12])
        text = report.to_json()
        loaded = PropertyReport.from_json(text)
        assert loaded.to_json() == text

    def test_family_witness_below_curve_maximum_still_verifies(self):
        # first violation at n=12; the extremal ratio comes from n=14
        report = check_anti_on_family(star(2, 0), "transitive", range(4, 15))
        assert trn_loads(report.witness_trn).n == 12
        assert report.extremal_ratio == Fraction(4 * 13 * 12, 3 * 14 * 14)
        loaded = PropertyReport.from_json(report.to_json())
        assert loaded.extremal_ratio == report.extremal_ratio

    def test_tampered_witness_rejected(self):
        report = check_anti_on_family(star(2, 0), "transitive", [12])
        doc = json.loads(report.to_json())
        doc["witness_trn"] = "3\n111\n"
        with pytest.raises(ValueError, match="re-verification|ratio"):
            PropertyReport.from_json(json.dumps(doc))

    def test_sampled_witness_reverifies(self):
        report = check_anti_on_family(
            star(2, 0), "transitive", [30], seed=3, samples=20_000
        )
        assert report.verdict == "violated"
        loaded = PropertyReport.from_json(report.to_json())
        assert loaded.extra["witness_hits"] == report.extra["witness_hits"]

    def test_serialization_is_deterministic(self):
        a = check_anti_exhaustive(directed_cycle(3), 4).to_json()
        b = check_anti_exhaustive(directed_cycle(3), 4).to_json()
        assert a == b

    def test_strong_anti_pinned_regime_recorded(self):
        p = PinnedPattern(star(1, 1), (0,))
        report = check_strong_anti(p, 4)
        assert report.regime["pinned"] == [0]

    def test_impartiality_reports(self):
        good = impartiality_report(impartial_four_tree(), 5)
        assert good.verdict == "holds-upto"
        bad = impartiality_report(directed_path(2), 3)
        assert bad.verdict == "violated"
        counts = sorted(int(c) for c in bad.extra["witness_counts"])
        assert counts == [1, 3]
        PropertyReport.from_json(bad.to_json())  # witness pair re-verifies

    def test_sidorenko_scan_is_measurement_only(self):
        report = sidorenko_scan_exhaustive(transitive_tournament(2), 4)
        assert report.verdict == "measured"
        ratios = [
            Fraction(int(r["min_ratio"]["num"]), int(r["min_ratio"]["den"]))
            for r in report.curve
        ]
        assert ratios == [Fraction(0), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)]
