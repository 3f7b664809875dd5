from fractions import Fraction
from itertools import product

import pytest

from subseqbounds import (
    RunString,
    balanced_pattern_upper,
    make_balanced,
    multiset_coeff,
    p0_count,
    pattern_count,
    pattern_count_balanced,
    pattern_gap_report,
    pattern_sandwich_check,
    pattern_symmetry_check,
)
from subseqbounds.patterns import (
    pattern_count_bounded,
    pattern_gap_constant,
    pattern_gap_factor,
)


class TestPatternCount:
    def test_examples(self):
        x = RunString(0, (2, 2))
        assert pattern_count(x, 2) == 3
        assert pattern_count(x, 0) == 1
        assert pattern_count(x, 4) == 1
        assert pattern_count(x, 5) == 0

    def test_negative_t(self):
        with pytest.raises(ValueError, match="nonnegative"):
            pattern_count(RunString(0, (1,)), -1)

    def test_bounded_matches_enumeration(self):
        for bounds in [(0, 2), (1, 1, 1), (3, 0, 2), (2, 4, 1, 3)]:
            for t in range(sum(bounds) + 2):
                expected = sum(
                    1 for ys in product(*(range(b + 1) for b in bounds)) if sum(ys) == t
                )
                assert pattern_count_bounded(bounds, t) == expected

    def test_bounded_rejects_negative_bound(self):
        with pytest.raises(ValueError, match="nonnegative"):
            pattern_count_bounded([1, -1], 1)

    def test_balanced_closed_form(self):
        assert pattern_count_balanced(2, 2, 2) == 3
        assert pattern_count_balanced(3, 2, 3) == pattern_count(RunString(0, (2, 2, 2)), 3)
        for r in range(1, 11):
            for k in range(1, 6):
                for t in range(r * k + 1):
                    assert pattern_count_balanced(r, k, t) == pattern_count(make_balanced(r, k), t)

    def test_balanced_matches_tuple_count(self):
        for r in range(1, 7):
            for k in range(1, 5):
                for t in range(r * k + 1):
                    assert pattern_count_balanced(r, k, t) == p0_count(r, t, k + 1)

    def test_balanced_errors(self):
        with pytest.raises(ValueError, match="r >= 1"):
            pattern_count_balanced(0, 2, 1)
        with pytest.raises(ValueError, match="nonnegative"):
            pattern_count_balanced(2, 2, -1)


class TestSandwich:
    def test_collision_example(self):
        # patterns (1,1,0) and (0,1,1) of 11011 both leave 111
        check = pattern_sandwich_check(RunString(1, (2, 1, 2)), 2)
        assert check.patterns == 5
        assert check.subsequences == 4
        assert check.subsequences < check.patterns
        assert check.holds

    def test_constant_string(self):
        for t in range(6):
            check = pattern_sandwich_check(RunString(0, (5,)), t)
            assert check.patterns == check.subsequences == 1

    def test_exhaustive(self):
        for n in range(1, 11):
            for mask in range(1 << n):
                x = RunString.from_bits(format(mask, f"0{n}b"))
                for t in range(n + 1):
                    assert pattern_sandwich_check(x, t).holds

    def test_reduced_patterns_with_single_runs(self):
        check = pattern_sandwich_check(RunString(0, (1, 1, 1)), 1)
        assert check.reduced_patterns == 0
        assert check.subsequences == 3


class TestSymmetry:
    def test_examples(self):
        x = RunString(0, (2, 2))
        assert pattern_symmetry_check(x, 1)
        assert pattern_count(x, 1) == pattern_count(x, 3) == 2
        assert pattern_symmetry_check(x, 0)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            pattern_symmetry_check(RunString(0, (2, 2)), 5)


class TestBalancedPatternUpper:
    def test_examples(self):
        assert balanced_pattern_upper(2, 2, 2) == 3
        assert balanced_pattern_upper(4, 3, 0) == 1

    def test_power_branch_at_half(self):
        assert 6**24 < multiset_coeff(24, 60)
        assert balanced_pattern_upper(24, 5, 60) == 6**24

    def test_bounds_patterns(self):
        for r in range(1, 9):
            for k in range(1, 5):
                for t in range(r * k + 1):
                    assert pattern_count_balanced(r, k, t) <= balanced_pattern_upper(r, k, t)


class TestPatternGap:
    def test_large_point(self):
        report = pattern_gap_report(40, 10, 200)
        assert report.patterns < report.hr_upper
        assert report.patterns < report.lev_upper
        assert isinstance(report.hr_ratio, Fraction)

    def test_zero_deletions(self):
        report = pattern_gap_report(5, 3, 0)
        assert report.patterns == 1
        assert report.hr_upper >= 1
        assert report.lev_upper >= 1

    def test_ratio_grows_with_runs(self):
        ratios = [pattern_gap_report(r, 10, r * 5).hr_ratio for r in (10, 20, 40)]
        assert ratios[0] < ratios[1] < ratios[2]

    def test_range(self):
        with pytest.raises(ValueError, match="rk = 6"):
            pattern_gap_report(2, 3, 7)

    def test_constant(self):
        assert pattern_gap_constant(2) < 1
        assert pattern_gap_constant(4) > 1
        assert pattern_gap_constant(10) > pattern_gap_constant(4)
        assert pattern_gap_factor(40, 10) > 1

    def test_report(self, capsys):
        pattern_gap_report(20, 10, 100).report()
        out = capsys.readouterr().out
        assert "B_(r=20,k=10) at t=100" in out
        assert "hr_upper=" in out
        assert "lev_upper=" in out
        assert "gap factor at t=rk/2" in out

    def test_report_off_midpoint(self, capsys):
        pattern_gap_report(20, 10, 60).report()
        assert "gap factor" not in capsys.readouterr().out
