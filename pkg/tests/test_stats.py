import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats as scipy_stats

from sasseval.errors import (DegenerateVariance, EmptyFamily, InsufficientData,
                             LengthMismatch)
from sasseval.stats import (bonferroni, family_tests, mean_sd, paired_t_test,
                            regularized_incomplete_beta, student_t_two_tailed_p)


def closed_form_df1(t):
    """Cauchy two-tailed tail: p = 1 - 2*arctan(|t|)/pi."""
    return 1.0 - 2.0 * math.atan(abs(t)) / math.pi


def closed_form_df2(t):
    """df=2 two-tailed tail: p = 2*(1 - (1/2 + t/(2*sqrt(2)*sqrt(1 + t^2/2))))."""
    t = abs(t)
    return 2.0 * (1.0 - (0.5 + t / (2.0 * math.sqrt(2.0) * math.sqrt(1.0 + t * t / 2.0))))


class TestStudentT:
    def test_center_is_one(self):
        for df in (1, 2, 5, 50, 1000):
            assert student_t_two_tailed_p(0.0, df) == pytest.approx(1.0, abs=1e-12)

    def test_cauchy_closed_form(self):
        assert student_t_two_tailed_p(1.0, 1) == pytest.approx(0.5, abs=1e-6)
        for t in (0.3, 2.0, 7.5):
            assert student_t_two_tailed_p(t, 1) == pytest.approx(closed_form_df1(t), abs=1e-8)

    def test_df2_closed_form(self):
        assert student_t_two_tailed_p(3.4641, 2) == pytest.approx(
            closed_form_df2(3.4641), abs=1e-6)
        # display-rounded value from the derivation: ~0.0742
        assert student_t_two_tailed_p(3.4641, 2) == pytest.approx(0.0742, abs=5e-5)
        t_exact = 2.0 * math.sqrt(3.0)  # d = [1, 2, 3]
        assert student_t_two_tailed_p(t_exact, 2) == pytest.approx(
            closed_form_df2(t_exact), abs=1e-8)

    def test_normal_limit(self):
        assert student_t_two_tailed_p(1.959964, 10 ** 6) == pytest.approx(0.05, abs=1e-4)

    def test_symmetry(self):
        for df in (1, 3, 17):
            for t in (0.5, 1.7, 4.2):
                assert student_t_two_tailed_p(t, df) == student_t_two_tailed_p(-t, df)

    def test_infinite_t(self):
        assert student_t_two_tailed_p(float("inf"), 5) == 0.0

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            student_t_two_tailed_p(float("nan"), 5)

    def test_bad_df(self):
        with pytest.raises(ValueError):
            student_t_two_tailed_p(1.0, 0)

    @given(st.floats(-50, 50), st.integers(1, 10000))
    @settings(max_examples=300)
    def test_matches_scipy(self, t, df):
        mine = student_t_two_tailed_p(t, df)
        ref = 2.0 * scipy_stats.t.sf(abs(t), df)
        assert mine == pytest.approx(ref, abs=1e-9)

    @given(st.integers(1, 500))
    @settings(max_examples=100)
    def test_monotone_decreasing_in_abs_t(self, df):
        ps = [student_t_two_tailed_p(t / 4.0, df) for t in range(0, 40)]
        assert all(a >= b for a, b in zip(ps, ps[1:]))

    def test_incomplete_beta_endpoints(self):
        assert regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0
        assert regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0

    @given(st.floats(0.001, 0.999), st.floats(0.2, 50), st.floats(0.2, 50))
    @settings(max_examples=300)
    def test_incomplete_beta_matches_scipy(self, x, a, b):
        assert regularized_incomplete_beta(x, a, b) == pytest.approx(
            scipy_stats.beta.cdf(x, a, b), abs=1e-9)


class TestPairedT:
    def test_identical_samples(self):
        r = paired_t_test([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
        assert r.t_stat == 0.0 and r.p_raw == 1.0 and r.df == 2

    def test_hand_derived_case(self):
        # d = [1, 2, 3]: mean 2, sd 1, t = 2/(1/sqrt(3)) = 2*sqrt(3)
        r = paired_t_test([2.0, 4.0, 6.0], [1.0, 2.0, 3.0])
        assert r.t_stat == pytest.approx(2.0 * math.sqrt(3.0), abs=1e-12)
        assert r.t_stat == pytest.approx(3.4641, abs=1e-4)
        assert r.df == 2
        assert r.p_raw == pytest.approx(closed_form_df2(r.t_stat), abs=1e-8)
        assert r.p_raw == pytest.approx(0.0742, abs=5e-5)

    def test_antisymmetry(self):
        xs = [1.0, 5.0, 2.0, 8.0]
        ys = [0.5, 4.0, 4.0, 5.0]
        fwd = paired_t_test(xs, ys)
        rev = paired_t_test(ys, xs)
        assert fwd.t_stat == pytest.approx(-rev.t_stat, abs=1e-12)
        assert fwd.p_raw == pytest.approx(rev.p_raw, abs=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            paired_t_test([1.0, 2.0], [1.0])

    def test_insufficient_data(self):
        with pytest.raises(InsufficientData):
            paired_t_test([1.0], [2.0])

    def test_degenerate_variance(self):
        with pytest.raises(DegenerateVariance):
            paired_t_test([2.0, 3.0, 4.0], [1.0, 2.0, 3.0])  # constant nonzero diff

    @given(st.lists(st.floats(-100, 100), min_size=2, max_size=40),
           st.data())
    @settings(max_examples=200)
    def test_matches_scipy_ttest_rel(self, xs, data):
        ys = data.draw(st.lists(st.floats(-100, 100),
                                min_size=len(xs), max_size=len(xs)))
        diffs = [x - y for x, y in zip(xs, ys)]
        mean = sum(diffs) / len(diffs)
        if sum((d - mean) ** 2 for d in diffs) == 0.0:
            return  # (numerically) zero-variance paths covered elsewhere
        mine = paired_t_test(xs, ys)
        ref = scipy_stats.ttest_rel(xs, ys)
        assert mine.t_stat == pytest.approx(ref.statistic, rel=1e-9, abs=1e-9)
        assert mine.p_raw == pytest.approx(ref.pvalue, rel=1e-7, abs=1e-9)


class TestBonferroni:
    def test_simple_multiplication(self):
        [(p_adj, sig)] = [bonferroni([0.01] * 6)[0]]
        assert p_adj == pytest.approx(0.06)
        assert not sig

    def test_clamped_at_one(self):
        adjusted = bonferroni([0.3] * 6)
        assert all(p == 1.0 for p, _ in adjusted)

    def test_family_of_one_is_identity(self):
        [(p_adj, sig)] = bonferroni([0.03])
        assert p_adj == 0.03 and sig

    def test_empty_family(self):
        with pytest.raises(EmptyFamily):
            bonferroni([])

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            bonferroni([1.5])

    @given(st.lists(st.floats(0, 1), min_size=1, max_size=20))
    @settings(max_examples=200)
    def test_never_decreases_never_exceeds_one(self, ps):
        for (p_adj, _), p in zip(bonferroni(ps), ps):
            assert p_adj >= p
            assert p_adj <= 1.0

    def test_family_tests_wiring(self):
        r1 = paired_t_test([2.0, 4.0, 6.0, 8.0], [1.0, 2.0, 3.0, 4.0])
        r2 = paired_t_test([1.0, 2.0, 3.0, 4.0], [1.1, 1.9, 3.2, 3.8])
        tests = family_tests([r1, r2], alpha=0.05)
        assert all(t.family_size == 2 for t in tests)
        for t, r in zip(tests, (r1, r2)):
            assert t.p_adjusted == pytest.approx(min(1.0, r.p_raw * 2))
            assert t.significant == (t.p_adjusted < 0.05)


class TestMeanSd:
    def test_known_values(self):
        m, sd = mean_sd([1.0, 2.0, 3.0])
        assert m == 2.0 and sd == pytest.approx(1.0)

    def test_single_value(self):
        assert mean_sd([5.0]) == (5.0, 0.0)

    def test_empty(self):
        with pytest.raises(InsufficientData):
            mean_sd([])
