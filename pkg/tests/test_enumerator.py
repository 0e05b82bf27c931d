import pytest

from k3ns8 import (
    EigenRankVector,
    FixedLocusProfile,
    InvolutionData,
    PointCounts,
    brute_force_classify,
    classify_order8,
    involution_fixed_locus,
    k_sigma2,
    lefschetz_check,
    ns_rank,
    power_invariants,
    rational_fix4_constraints,
)
from k3ns8.enumerator import ORDER2_TRIPLES, ORDER4_ROWS

TABLE_ROWS = [
    (1, 1, 13, 3, 10, 1, 0),
    (2, 2, 6, 4, 4, 0, 0),
    (1, 1, 9, 7, 4, 0, 1),
    (1, 3, 7, 5, 4, 0, 0),
]


def profile(m1, m, r, l, n27, n36, n45, k, a, alpha=None):
    return FixedLocusProfile(EigenRankVector(r, l, m, m1),
                             PointCounts(n27, n36, n45),
                             k=k, a=a, alpha=k if alpha is None else alpha)


class TestEigenRankVector:
    def test_rank_identity_enforced(self):
        with pytest.raises(ValueError):
            EigenRankVector(13, 3, 1, 2)

    def test_projectivity_enforced(self):
        with pytest.raises(ValueError):
            EigenRankVector(0, 22, 0, 0)

    def test_power_invariants_first_row(self):
        square, fourth = power_invariants(EigenRankVector(13, 3, 1, 1))
        assert (square.r, square.l, square.m, square.m1) == (16, 2, 2, 0)
        assert (fourth.r, fourth.l) == (18, 4)

    def test_power_invariants_degenerate(self):
        square, fourth = power_invariants(EigenRankVector(22, 0, 0, 0))
        assert square == fourth == EigenRankVector(22, 0, 0, 0)

    def test_power_invariants_second_row(self):
        square, fourth = power_invariants(EigenRankVector(6, 4, 2, 2))
        assert (square.r, square.l, square.m) == (10, 4, 4)
        assert (fourth.r, fourth.l) == (14, 8)

    def test_square_has_even_minus_one_and_i_ranks(self):
        for r, l, m, m1 in [(13, 3, 1, 1), (6, 4, 2, 2), (9, 7, 1, 1),
                            (7, 5, 3, 1)]:
            square, _ = power_invariants(EigenRankVector(r, l, m, m1))
            assert square.l % 2 == 0
            assert square.m % 2 == 0


class TestLefschetzCheck:
    def test_first_row(self):
        assert lefschetz_check(profile(1, 1, 13, 3, 3, 3, 4, k=1, a=0))

    def test_third_row(self):
        assert lefschetz_check(profile(1, 1, 9, 7, 1, 1, 2, k=0, a=1))

    def test_perturbed_ranks_fail(self):
        # (r, l) moved off (9, 7) while keeping rank 22: the isolated
        # point count no longer matches 2 + r - l - 2*alpha
        bad = profile(1, 1, 10, 6, 1, 1, 2, k=0, a=1)
        assert not lefschetz_check(bad)


class TestRationalFix4Constraints:
    def test_first_row(self):
        assert rational_fix4_constraints(profile(1, 1, 13, 3, 3, 3, 4, k=1, a=0))

    def test_unbalanced_pair_types(self):
        assert not rational_fix4_constraints(
            profile(1, 1, 13, 3, 2, 1, 2, k=1, a=0))

    def test_odd_self_paired_count(self):
        assert not rational_fix4_constraints(
            profile(1, 1, 13, 3, 1, 1, 3, k=0, a=0))


class TestKSigma2:
    def test_known_values(self):
        assert k_sigma2(profile(1, 1, 13, 3, 3, 3, 4, k=1, a=0)) == 3
        assert k_sigma2(profile(1, 1, 9, 7, 1, 1, 2, k=0, a=1)) == 3
        assert k_sigma2(profile(2, 2, 6, 4, 1, 1, 2, k=0, a=0)) == 1

    def test_odd_n45_rejected(self):
        with pytest.raises(ValueError):
            k_sigma2(profile(1, 1, 13, 3, 3, 3, 3, k=1, a=0))


class TestClassification:
    def test_exact_rows_in_order(self):
        assert [p.as_row() for p in classify_order8()] == TABLE_ROWS

    def test_existence_annotations(self):
        by_row = {p.as_row(): p.existence for p in classify_order8()}
        assert by_row[(1, 1, 13, 3, 10, 1, 0)] == "example known"
        assert by_row[(1, 1, 9, 7, 4, 0, 1)] == "example known"
        assert by_row[(2, 2, 6, 4, 4, 0, 0)] == "existence open"
        assert by_row[(1, 3, 7, 5, 4, 0, 0)] == "existence open"

    def test_ns_rank_values(self):
        assert [ns_rank(p) for p in classify_order8()] == [18, 14, 18, 18]

    def test_profiles_satisfy_all_constraints(self):
        for p in classify_order8():
            assert lefschetz_check(p)
            assert rational_fix4_constraints(p)
            assert p.points.N % 2 == 0
            assert p.points.n27 == p.points.n36

    def test_square_invariants_match_order4_table(self):
        allowed = {(16, 2, 2, 10, 3, 0), (10, 4, 4, 6, 1, 0), (12, 2, 6, 6, 1, 2)}
        for p in classify_order8():
            square, _ = power_invariants(p.ranks)
            k2 = k_sigma2(p)
            matches = [row for row in ORDER4_ROWS
                       if (row.r, row.m, row.l, row.k) ==
                       (square.r, square.m, square.l, k2)]
            assert len(matches) == 1
            row = matches[0]
            assert (row.r, row.m, row.l, row.N, row.k, row.a) in allowed


class TestBruteForceOracle:
    def test_matches_structured_derivation(self):
        assert set(brute_force_classify()) == set(classify_order8())
        assert [p.as_row() for p in brute_force_classify()] == TABLE_ROWS

    def test_restricting_k_drops_the_fixed_curve_row(self):
        rows = [p.as_row() for p in brute_force_classify(k_max=0)]
        assert rows == [r for r in TABLE_ROWS if r[5] == 0]

    def test_order4_filter_is_necessary(self):
        unfiltered = set(brute_force_classify(use_order4_filter=False))
        filtered = set(brute_force_classify())
        assert filtered < unfiltered


class TestOrder4Data:
    def test_eight_rows(self):
        assert len(ORDER4_ROWS) == 8

    def test_rows_satisfy_order4_rank_identity(self):
        for row in ORDER4_ROWS:
            assert row.r + row.l + 2 * row.m == 22


class TestInvolutions:
    def test_formula_cases(self):
        assert involution_fixed_locus(InvolutionData(18, 4, 1)).to_json() == \
            {"kind": "curves", "g": 0, "k": 7}
        assert involution_fixed_locus(InvolutionData(10, 10, 1)).to_json() == \
            {"kind": "curves", "g": 1, "k": 0}

    def test_exceptional_lattices(self):
        assert involution_fixed_locus(InvolutionData(10, 10, 0)).kind == "empty"
        assert involution_fixed_locus(InvolutionData(10, 8, 0)).kind == \
            "two-elliptic-curves"
        # same (r, a) with delta = 1 follows the formulas instead
        assert involution_fixed_locus(InvolutionData(10, 8, 1)).to_json() == \
            {"kind": "curves", "g": 2, "k": 1}

    def test_non_admissible_triples_rejected(self):
        for triple in ((5, 2, 1), (3, 3, 0), (21, 1, 1), (1, 1, 0)):
            with pytest.raises(ValueError):
                InvolutionData(*triple)

    def test_data_integrity(self):
        assert len(ORDER2_TRIPLES) == 75
        for r, a, delta in ORDER2_TRIPLES:
            assert 1 <= r <= 20
            assert 0 <= a <= min(r, 22 - r)
            assert (r + a) % 2 == 0
            assert delta in (0, 1)

    def test_genus_curve_budget(self):
        # 2g + 2k = 22 - 2a wherever the formulas apply
        for r, a, delta in sorted(ORDER2_TRIPLES):
            descriptor = involution_fixed_locus(InvolutionData(r, a, delta))
            if descriptor.kind == "curves":
                assert 2 * descriptor.g + 2 * descriptor.k == 22 - 2 * a

    def test_admissible_lookup(self):
        deltas = {d.delta for d in InvolutionData.admissible(10, 10)}
        assert deltas == {0, 1}
        assert InvolutionData.admissible(5, 2) == []
