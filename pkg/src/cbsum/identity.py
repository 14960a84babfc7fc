"""Evaluation strategies for the central-binomial double sum.

The quantity of interest, for a size ``n``, is

    S(n) = sum_{i=-n..n} sum_{j=-n..n} C(2n,n+i) C(2n,n+j) |i^2 - j^2|

and the claim being verified throughout this package is the closed form
S(n) = 2 n^2 C(2n,n)^2. Three evaluators compute S(n) by structurally
different routes; they must agree bit-exactly, and the tests treat any
disagreement as a finding, not an error.

This module also carries the small exact identities the step-by-step
derivation in :mod:`cbsum.chain` leans on: the half-row sum, the absorption
of quadratic factors into a lower row, and the double application of
Pascal's rule.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Dict

from .combinatorics import SumInstance, binomial, pascal_row


class Strategy(enum.Enum):
    """How S(n) gets evaluated.

    NAIVE walks the full (2n+1)^2 grid of (i, j) with the absolute value;
    SYMMETRIZED walks the quarter domain i in [0, n], j in [-i, i] and
    multiplies by 4 (on that domain i^2 - j^2 >= 0, so no absolute value);
    CLOSED_FORM computes 2 n^2 C(2n,n)^2 with no double loop at all.
    """

    NAIVE = "naive"
    SYMMETRIZED = "symmetrized"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class EvalResult:
    n: int
    strategy: Strategy
    value: int


def _naive_value(n: int) -> int:
    coeffs = pascal_row(2 * n).coefficients
    squares = [(k - n) ** 2 for k in range(2 * n + 1)]
    total = 0
    for a, si in zip(coeffs, squares):
        inner = 0
        for b, sj in zip(coeffs, squares):
            d = si - sj
            inner += b * d if d >= 0 else -(b * d)
        total += a * inner
    return total


def _symmetrized_value(n: int) -> int:
    coeffs = pascal_row(2 * n).coefficients
    total = 0
    for i in range(n + 1):
        si = i * i
        inner = 0
        for j in range(-i, i + 1):
            inner += coeffs[n + j] * (si - j * j)
        total += coeffs[n + i] * inner
    return 4 * total


def evaluate_naive(inst: SumInstance) -> EvalResult:
    """Full-grid evaluation of S(n), |i^2 - j^2| taken termwise."""
    return EvalResult(n=inst.n, strategy=Strategy.NAIVE, value=_naive_value(inst.n))


def evaluate_symmetrized(inst: SumInstance) -> EvalResult:
    """Quarter-domain evaluation: 4 * sum_{0<=i<=n} sum_{|j|<=i} ... (i^2-j^2)."""
    return EvalResult(
        n=inst.n, strategy=Strategy.SYMMETRIZED, value=_symmetrized_value(inst.n)
    )


def evaluate_closed_form(inst: SumInstance) -> EvalResult:
    """Closed form 2 n^2 C(2n,n)^2."""
    n = inst.n
    value = 2 * n * n * binomial(2 * n, n) ** 2
    return EvalResult(n=n, strategy=Strategy.CLOSED_FORM, value=value)


EVALUATORS: Dict[Strategy, Callable[[SumInstance], EvalResult]] = {
    Strategy.NAIVE: evaluate_naive,
    Strategy.SYMMETRIZED: evaluate_symmetrized,
    Strategy.CLOSED_FORM: evaluate_closed_form,
}


def evaluate(n: int, strategy: Strategy) -> EvalResult:
    """Evaluate S(n) with the given strategy (dispatches via ``EVALUATORS``)."""
    return EVALUATORS[strategy](SumInstance(n))


def half_row_sum(n: int) -> int:
    """Direct sum of the upper half of row 2n: sum_{i=0..n} C(2n, n+i).

    Deliberately *not* the closed form (4^n + C(2n,n)) / 2, so that the
    closed form stays a falsifiable property of this function instead of
    an assumption baked into it.
    """
    if n < 0:
        raise ValueError(f"half_row_sum: size must be >= 0, got n={n}")
    return sum(pascal_row(2 * n).coefficients[n:])


def absorption_sides(n: int, i: int) -> tuple[int, int]:
    """Both sides of (n-i)(n+i) C(2n,n+i) == 2n(2n-1) C(2n-2,n-1+i).

    The quadratic factor is absorbed into a shift down by two rows. Needs
    n >= 1 (at n = 0 the 2n(2n-1) factor degenerates). Returns the two
    sides; their equality is the property under test, never assumed here.
    """
    if n < 1:
        raise ValueError(f"absorption_sides: needs n >= 1, got n={n}")
    lhs = (n - i) * (n + i) * binomial(2 * n, n + i)
    rhs = 2 * n * (2 * n - 1) * binomial(2 * n - 2, n - 1 + i)
    return lhs, rhs


def pascal_triple_sides(n: int, k: int) -> tuple[int, int]:
    """Both sides of Pascal's rule applied twice:

        C(2n, n+k) == C(2n-2, n+k) + 2 C(2n-2, n-1+k) + C(2n-2, n-2+k)

    Total in k thanks to the out-of-range-is-zero convention.
    """
    if n < 1:
        raise ValueError(f"pascal_triple_sides: needs n >= 1, got n={n}")
    lhs = binomial(2 * n, n + k)
    rhs = (
        binomial(2 * n - 2, n + k)
        + 2 * binomial(2 * n - 2, n - 1 + k)
        + binomial(2 * n - 2, n - 2 + k)
    )
    return lhs, rhs
