"""Tests for the binomial substrate: values, conventions, strategies, rows."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from cbsum.combinatorics import (
    BINOMIAL_STRATEGIES,
    PascalRow,
    SumInstance,
    binomial,
    binomial_factorial,
    binomial_from_row,
    binomial_multiplicative,
    pascal_row,
)
from cbsum.digests import value_digest

from oracle import pascal_row_by_addition


class TestBinomial:
    @pytest.mark.parametrize(
        "m,k,expected",
        [
            (4, 2, 6),
            (0, -1, 0),
            (0, 0, 1),
            (4, 5, 0),
            (10, -3, 0),
            # multiplicative formula cross-checked against the full
            # addition-rule row in TestStrategies below
            (30, 15, 155117520),
        ],
    )
    def test_values_and_zero_convention(self, m, k, expected):
        assert binomial(m, k) == expected

    def test_negative_upper_index_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(m=st.integers(0, 500), k=st.integers(-10, 510))
    def test_matches_math_comb_with_zero_convention(self, m, k):
        expected = math.comb(m, k) if 0 <= k <= m else 0
        assert binomial(m, k) == expected


class TestPascalRow:
    def test_row_zero(self):
        assert pascal_row(0).coefficients == (1,)

    def test_small_row(self):
        assert pascal_row(4).coefficients == (1, 4, 6, 4, 1)

    def test_large_row_sums_to_power_of_two(self):
        assert sum(pascal_row(2000).coefficients) == 2**2000

    def test_entry_zero_convention(self):
        row = pascal_row(5)
        assert row.entry(-1) == 0
        assert row.entry(6) == 0
        assert row.entry(2) == 10

    def test_len_and_indexing(self):
        row = pascal_row(3)
        assert len(row) == 4
        assert row[1] == 3

    def test_negative_row_rejected(self):
        with pytest.raises(ValueError):
            pascal_row(-2)

    def test_wrong_coefficient_count_rejected(self):
        with pytest.raises(ValueError):
            PascalRow(m=2, coefficients=(1, 2))

    def test_matches_addition_rule_oracle(self):
        for m in (0, 1, 2, 7, 30):
            assert list(pascal_row(m).coefficients) == pascal_row_by_addition(m)


class TestRowInvariants:
    """Exhaustive row invariants: symmetry, row sum, Pascal's rule.

    One incremental pass over rows 0..2000 checks all three at once.
    """

    def test_rows_up_to_2000(self):
        previous = None
        power = 1
        for m in range(0, 2001):
            coeffs = pascal_row(m).coefficients
            assert coeffs == coeffs[::-1], f"symmetry broken in row {m}"
            assert sum(coeffs) == power, f"row sum broken in row {m}"
            if previous is not None:
                expected = (
                    (1,)
                    + tuple(previous[k - 1] + previous[k] for k in range(1, m))
                    + (1,)
                )
                assert coeffs == expected, f"Pascal's rule broken in row {m}"
            previous = coeffs
            power *= 2


class TestStrategies:
    @pytest.mark.parametrize("name,strategy", sorted(BINOMIAL_STRATEGIES.items()))
    def test_small_value(self, name, strategy):
        assert strategy(4, 2) == 6

    @pytest.mark.parametrize("name,strategy", sorted(BINOMIAL_STRATEGIES.items()))
    def test_zero_convention(self, name, strategy):
        assert strategy(6, -1) == 0
        assert strategy(6, 7) == 0

    @pytest.mark.parametrize("name,strategy", sorted(BINOMIAL_STRATEGIES.items()))
    def test_negative_upper_index_rejected(self, name, strategy):
        with pytest.raises(ValueError):
            strategy(-3, 1)

    def test_pairwise_agreement_midsize(self):
        values = {name: fn(200, 100) for name, fn in BINOMIAL_STRATEGIES.items()}
        assert len(set(values.values())) == 1

    def test_multiplicative_matches_addition_rule_row(self):
        row = pascal_row_by_addition(30)
        assert [binomial_multiplicative(30, k) for k in range(31)] == row

    @settings(max_examples=60, deadline=None)
    @given(m=st.integers(0, 10_000), k=st.integers(-5, 10_005))
    def test_all_strategies_agree_randomized(self, m, k):
        reference = binomial(m, k)
        assert binomial_from_row(m, k) == reference
        assert binomial_multiplicative(m, k) == reference
        assert binomial_factorial(m, k) == reference

    def test_central_coefficient_digest_agreement_at_scale(self):
        # n = 10^5: too large to compare decimals by eye, so compare digests
        a = binomial_multiplicative(200_000, 100_000)
        b = binomial_factorial(200_000, 100_000)
        assert value_digest(a) == value_digest(b)


class TestSumInstance:
    def test_derived_indices(self):
        inst = SumInstance(7)
        assert inst.two_n == 14
        assert inst.two_n_minus_one == 13

    def test_negative_size_rejected(self):
        with pytest.raises(ValueError):
            SumInstance(-1)

    @given(n=st.integers(1, 10_000))
    def test_derived_indices_consistent(self, n):
        inst = SumInstance(n)
        assert inst.two_n == 2 * n
        assert inst.two_n_minus_one == 2 * n - 1
