"""Tests for the derivation-chain quantities and the chain verifier."""
from __future__ import annotations

import math

import pytest

from cbsum.chain import (
    CHAIN_COMPARISONS,
    StepId,
    StepReport,
    absorbed_form,
    alternative_finish,
    cancelled_form,
    closure_sides,
    definition_form,
    folded_form,
    symmetrized_form,
    telescoped_form,
    verify_chain,
    verify_chain_timed,
    x_value,
)
from cbsum.identity import half_row_sum

from oracle import brute_force_sum

ALL_FORMS = (absorbed_form, folded_form, cancelled_form, telescoped_form)


class TestLineQuantities:
    def test_symmetrized_form_equals_definition(self):
        for n in (1, 2, 3, 8):
            assert symmetrized_form(n) == brute_force_sum(n)
            assert definition_form(n) == brute_force_sum(n)

    def test_absorbed_form_small_values(self):
        # frozen: S(1)/(4*2*1) = 1, S(2)/(4*4*3) = 6, S(3)/(4*6*5) = 60
        assert absorbed_form(1) == 1
        assert absorbed_form(2) == 6
        assert absorbed_form(3) == 60

    def test_absorbed_form_is_exact_quotient_of_sum(self):
        for n in (1, 2, 3, 4, 7):
            scale = 4 * (2 * n) * (2 * n - 1)
            quotient, remainder = divmod(brute_force_sum(n), scale)
            assert remainder == 0
            assert absorbed_form(n) == quotient

    def test_folded_form_small_values(self):
        assert folded_form(1) == 1
        assert folded_form(2) == 6
        assert folded_form(10) == absorbed_form(10)

    def test_cancelled_form_small_values(self):
        assert cancelled_form(1) == 1
        assert cancelled_form(2) == 6
        assert cancelled_form(7) == folded_form(7)

    def test_telescoped_form_small_values(self):
        # n=1 evaluates to 2*1*1 - 0 - 1*3 + 2*1 = 1
        assert telescoped_form(1) == 1
        assert telescoped_form(2) == 6
        assert telescoped_form(12) == cancelled_form(12)

    def test_closure_sides(self):
        assert closure_sides(1) == (4, 4)
        assert closure_sides(2) == (72, 72)
        lhs, rhs = closure_sides(5)
        assert lhs == rhs

    def test_quantities_are_positive(self):
        for n in (1, 2, 5, 20):
            for form in ALL_FORMS:
                assert form(n) > 0

    @pytest.mark.parametrize("form", ALL_FORMS)
    def test_degenerate_size_rejected(self, form):
        with pytest.raises(ValueError):
            form(0)

    def test_end_to_end_closure(self):
        # bypasses the intermediate lines entirely
        for n in range(1, 201):
            scale = 4 * (2 * n) * (2 * n - 1)
            assert scale * telescoped_form(n) == 2 * n * n * math.comb(2 * n, n) ** 2


class TestAlternativeFinish:
    def test_small_values(self):
        one = alternative_finish(1)
        assert one.expression == 1
        assert one.closed_product == math.comb(0, 0) * math.comb(1, 0) == 1
        two = alternative_finish(2)
        assert two.expression == 6
        assert two.closed_product == math.comb(2, 1) * math.comb(3, 1) == 6

    def test_parent_row_substitution_at_two(self):
        # sum_{i>=0} C(4,2+i) = 11 must equal 4X - C(2,1) + C(2,0) = 12 - 2 + 1
        finish = alternative_finish(2)
        assert finish.parent_row_sides == (11, 11)
        assert 4 * finish.x - 2 + 1 == 11

    def test_all_components_agree_over_range(self):
        for n in range(1, 101):
            finish = alternative_finish(n)
            assert finish.all_equal, n
            assert finish.telescoped == telescoped_form(n)

    def test_degenerate_size_rejected(self):
        with pytest.raises(ValueError):
            alternative_finish(0)


class TestXValue:
    def test_matches_half_row_sum_one_size_down(self):
        for n in range(1, 501):
            assert x_value(n).x == half_row_sum(n - 1)

    def test_degenerate_size_rejected(self):
        with pytest.raises(ValueError):
            x_value(0)


class TestStepReport:
    def test_compare_sets_flag(self):
        good = StepReport.compare(3, StepId.L3_FOLDED, 5, 5)
        bad = StepReport.compare(3, StepId.L3_FOLDED, 5, 6)
        assert good.equal and not bad.equal

    def test_equal_flag_matches_sides(self):
        for report in verify_chain(4):
            if report.step is not StepId.X_FINISH:
                assert report.equal == (report.lhs == report.rhs)


class TestVerifyChain:
    def test_report_shape(self):
        reports = verify_chain(1)
        assert len(reports) == 7
        assert tuple(r.step for r in reports) == CHAIN_COMPARISONS
        assert all(r.n == 1 for r in reports)
        assert all(r.equal for r in reports)

    @pytest.mark.parametrize("n", [2, 17, 100])
    def test_chain_holds(self, n):
        assert all(r.equal for r in verify_chain(n))

    def test_timed_variant_durations(self):
        for report, duration in verify_chain_timed(3):
            assert duration >= 1
            assert report.equal

    def test_degenerate_size_rejected(self):
        with pytest.raises(ValueError):
            verify_chain(0)


class TestDivisibility:
    def test_sum_divisible_by_scale_factor(self):
        for n in range(1, 41):
            assert brute_force_sum(n) % (8 * n * (2 * n - 1)) == 0
