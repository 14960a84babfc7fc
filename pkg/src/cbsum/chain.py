"""Step-by-step verification of the derivation of the closed form.

The derivation proceeds through a chain of displayed lines, each a quantity
that can be evaluated exactly on its own. With S = S(n) and the shorthand
X = sum_{i>=0} C(2n-2, n-1+i), the chain is:

    L0  S as defined (full grid, absolute value)
    L1  4 sum_{i>=0} sum_{|j|<=i} C(2n,n+i) C(2n,n+j) (i^2 - j^2)
    L2  S / (4*2n*(2n-1)) rewritten via the absorption identity as a
        signed pair of double sums over rows 2n-2 and 2n
    L3  the j-range folded to 0 <= j <= i, picking up boundary single sums
    L4  L3 with every C(2n, .) expanded by the double Pascal rule
        (not materialized: its content is exactly pascal_triple_sides
        plus linearity, and its value would duplicate L3 term for term)
    L5  the post-cancellation form: four double sums purely in row 2n-2
        plus the two boundary single sums
    L6  the telescoped form: four products of a coefficient and a single
        half-row sum
    L7  closure: L6 == n C(2n,n)^2 / (4(2n-1))
    X   alternative finish: L6 rewritten in terms of X alone collapses to
        C(2n-2,n-1) C(2n-1,n-1)

Every function here evaluates its line literally, iterating only over the
support of the coefficients involved. Rational steps are verified in
cleared-denominator integer form; no rational arithmetic exists anywhere.

Quantities are returned as (possibly signed) ints. In a correct build they
are all positive, but two-term combinations could in principle go negative,
so nothing here assumes a sign.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from .combinatorics import pascal_row
from .identity import Strategy, evaluate


class StepId(enum.Enum):
    """Identifies one line of the derivation chain.

    L0..L7 follow the chain in order; X_FINISH is the alternative ending.
    L0_DEFINITION is the anchor every later line is compared back to, and
    L4_EXPANDED is the bracket-expansion line that is deliberately not
    materialized (see module docstring), so neither appears as a report of
    its own in :func:`verify_chain`.
    """

    L0_DEFINITION = "L0_DEFINITION"
    L1_SYMMETRIZED = "L1_SYMMETRIZED"
    L2_ABSORBED = "L2_ABSORBED"
    L3_FOLDED = "L3_FOLDED"
    L4_EXPANDED = "L4_EXPANDED"
    L5_CANCELLED = "L5_CANCELLED"
    L6_TELESCOPED = "L6_TELESCOPED"
    L7_CLOSED = "L7_CLOSED"
    X_FINISH = "X_FINISH"


#: The seven consecutive comparisons verify_chain emits, in order.
CHAIN_COMPARISONS: tuple[StepId, ...] = (
    StepId.L1_SYMMETRIZED,
    StepId.L2_ABSORBED,
    StepId.L3_FOLDED,
    StepId.L5_CANCELLED,
    StepId.L6_TELESCOPED,
    StepId.L7_CLOSED,
    StepId.X_FINISH,
)


@dataclass(frozen=True)
class StepReport:
    """Outcome of checking one derivation step at one n.

    ``equal`` reflects the full per-step check. For every step except
    X_FINISH that is exactly ``lhs == rhs``; the X_FINISH report folds in
    the three auxiliary identities and the closed-product equality as well,
    since that step stands or falls with them.
    """

    n: int
    step: StepId
    lhs: int
    rhs: int
    equal: bool

    @classmethod
    def compare(cls, n: int, step: StepId, lhs: int, rhs: int) -> "StepReport":
        return cls(n=n, step=step, lhs=lhs, rhs=rhs, equal=lhs == rhs)


@dataclass(frozen=True)
class XValue:
    """X = sum_{i>=0} C(2n-2, n-1+i), the half-row sum one size down."""

    n: int
    x: int


def x_value(n: int) -> XValue:
    if n < 1:
        raise ValueError(f"x_value: needs n >= 1, got n={n}")
    row = pascal_row(2 * n - 2).coefficients
    return XValue(n=n, x=sum(row[n - 1 :]))


def _require_positive(n: int, where: str) -> None:
    if n < 1:
        raise ValueError(
            f"{where}: needs n >= 1 (the chain divides by 2n(2n-1)), got n={n}"
        )


def definition_form(n: int) -> int:
    """L0: S(n) straight from the definition (full-grid evaluation)."""
    return evaluate(n, Strategy.NAIVE).value


def symmetrized_form(n: int) -> int:
    """L1: 4 sum_{i>=0} sum_{|j|<=i} C(2n,n+i) C(2n,n+j) (i^2 - j^2).

    Identical to the SYMMETRIZED evaluation strategy, and delegated to it.
    """
    return evaluate(n, Strategy.SYMMETRIZED).value


def absorbed_form(n: int) -> int:
    """L2: the value of S(n) / (4 * 2n * (2n-1)) after absorption,

        - sum_{i>=0} sum_{|j|<=i} C(2n-2,n-1+i) C(2n,n+j)
        + sum_{i>=0} sum_{|j|<=i} C(2n,n+i) C(2n-2,n-1+j)

    evaluated as a plain integer (callers clear the denominator when
    comparing against L1).
    """
    _require_positive(n, "absorbed_form")
    big = pascal_row(2 * n).coefficients
    small = pascal_row(2 * n - 2).coefficients
    top = 2 * n - 2
    first = 0
    for i in range(n):  # C(2n-2, n-1+i) vanishes for i > n-1
        first += small[n - 1 + i] * sum(big[n - i : n + i + 1])
    second = 0
    for i in range(n + 1):
        lo = max(0, n - 1 - i)
        hi = min(top, n - 1 + i)
        second += big[n + i] * sum(small[lo : hi + 1])
    return -first + second


def folded_form(n: int) -> int:
    """L3: the j-range of L2 folded to 0 <= j <= i by row symmetry,

        - 2 sum_{0<=j<=i} C(2n-2,n-1+i) C(2n,n+j)
        + C(2n,n) sum_{i>=0} C(2n-2,n-1+i)
        + 2 sum_{0<=j<=i} C(2n,n+i) C(2n-2,n-1+j)
        - C(2n-2,n-1) sum_{i>=0} C(2n,n+i)

    where the single sums are the j = 0 boundary terms the fold exposes.
    """
    _require_positive(n, "folded_form")
    big = pascal_row(2 * n).coefficients
    small = pascal_row(2 * n - 2).coefficients
    top = 2 * n - 2
    first = 0
    for i in range(n):
        first += small[n - 1 + i] * sum(big[n : n + i + 1])
    second = big[n] * sum(small[n - 1 :])
    third = 0
    for i in range(n + 1):
        hi = min(top, n - 1 + i)
        third += big[n + i] * sum(small[n - 1 : hi + 1])
    fourth = small[n - 1] * sum(big[n:])
    return -2 * first + second + 2 * third - fourth


def cancelled_form(n: int) -> int:
    """L5: what survives after expanding L3 by the double Pascal rule and
    cancelling the matching pair of sums:

        - 2 sum_{0<=j<=i} C(2n-2,n-1+i) C(2n-2,n+j)
        + 2 sum_{0<=j<=i} C(2n-2,n-2+i) C(2n-2,n-1+j)
        + 2 sum_{0<=j<=i} C(2n-2,n+i)   C(2n-2,n-1+j)
        - 2 sum_{0<=j<=i} C(2n-2,n-1+i) C(2n-2,n-2+j)
        - C(2n-2,n-1) sum_{i>=0} C(2n,n+i)
        + C(2n,n)     sum_{i>=0} C(2n-2,n-1+i)
    """
    _require_positive(n, "cancelled_form")
    big = pascal_row(2 * n).coefficients
    small = pascal_row(2 * n - 2).coefficients
    top = 2 * n - 2

    def triangle(shift_i: int, shift_j: int) -> int:
        # sum over 0 <= j <= i of small[shift_i + i] * small[shift_j + j],
        # iterating only where both factors are in range
        total = 0
        for i in range(n + 1):
            ti = shift_i + i
            if ti < 0 or ti > top:
                continue
            lo = max(0, shift_j)
            hi = min(top, shift_j + i)
            if hi >= lo:
                total += small[ti] * sum(small[lo : hi + 1])
        return total

    return (
        -2 * triangle(n - 1, n)
        + 2 * triangle(n - 2, n - 1)
        + 2 * triangle(n, n - 1)
        - 2 * triangle(n - 1, n - 2)
        - small[n - 1] * sum(big[n:])
        + big[n] * sum(small[n - 1 :])
    )


def telescoped_form(n: int) -> int:
    """L6: the double sums of L5 telescoped down to boundary single sums,

        + 2 C(2n-2,n-1) sum_{i>=0} C(2n-2,n-2+i)
        - 2 C(2n-2,n-2) sum_{i>=0} C(2n-2,n-1+i)
        - C(2n-2,n-1)   sum_{i>=0} C(2n,n+i)
        + C(2n,n)       sum_{i>=0} C(2n-2,n-1+i)
    """
    _require_positive(n, "telescoped_form")
    big = pascal_row(2 * n).coefficients
    small = pascal_row(2 * n - 2).coefficients
    center = small[n - 1]
    below = small[n - 2] if n >= 2 else 0
    low_sum = sum(small[max(0, n - 2) :])
    x = sum(small[n - 1 :])
    return 2 * center * low_sum - 2 * below * x - center * sum(big[n:]) + big[n] * x


def closure_sides(n: int) -> tuple[int, int]:
    """L7 in cleared-denominator form: 4(2n-1) L6  vs  n C(2n,n)^2."""
    _require_positive(n, "closure_sides")
    center = pascal_row(2 * n).coefficients[n]
    return 4 * (2 * n - 1) * telescoped_form(n), n * center * center


@dataclass(frozen=True)
class AlternativeFinish:
    """The X-based ending: L6 rewritten purely in terms of X.

    ``expression`` is

        2 C(2n-2,n-1) [C(2n-2,n-2) + X] - 2 C(2n-2,n-2) X
        - C(2n-2,n-1) [4X - C(2n-2,n-1) + C(2n-2,n-2)] + C(2n,n) X

    and ``closed_product`` the value it collapses to,
    C(2n-2,n-1) C(2n-1,n-1). The three substitutions the rewrite relies on
    are carried as explicit (lhs, rhs) pairs:

    * ``low_shift_sides``:  sum_{i>=0} C(2n-2,n-2+i)  vs  C(2n-2,n-2) + X
    * ``parent_row_sides``: sum_{i>=0} C(2n,n+i)  vs
                            4X - C(2n-2,n-1) + C(2n-2,n-2)
    * ``adjacent_pair_sides``: C(2n-2,n-2) + C(2n-2,n-1)  vs  C(2n-1,n-1)
    """

    n: int
    x: int
    expression: int
    closed_product: int
    telescoped: int
    low_shift_sides: tuple[int, int]
    parent_row_sides: tuple[int, int]
    adjacent_pair_sides: tuple[int, int]

    @property
    def all_equal(self) -> bool:
        return (
            self.expression == self.telescoped == self.closed_product
            and self.low_shift_sides[0] == self.low_shift_sides[1]
            and self.parent_row_sides[0] == self.parent_row_sides[1]
            and self.adjacent_pair_sides[0] == self.adjacent_pair_sides[1]
        )


def alternative_finish(n: int) -> AlternativeFinish:
    """Evaluate the X-based finish and everything it depends on."""
    _require_positive(n, "alternative_finish")
    big = pascal_row(2 * n).coefficients
    small = pascal_row(2 * n - 2).coefficients
    row_above = pascal_row(2 * n - 1).coefficients
    center = small[n - 1]
    below = small[n - 2] if n >= 2 else 0
    x = sum(small[n - 1 :])
    expression = (
        2 * center * (below + x)
        - 2 * below * x
        - center * (4 * x - center + below)
        + big[n] * x
    )
    return AlternativeFinish(
        n=n,
        x=x,
        expression=expression,
        closed_product=center * row_above[n - 1],
        telescoped=telescoped_form(n),
        low_shift_sides=(sum(small[max(0, n - 2) :]), below + x),
        parent_row_sides=(sum(big[n:]), 4 * x - center + below),
        adjacent_pair_sides=(below + center, row_above[n - 1]),
    )


def verify_chain_timed(n: int) -> list[tuple[StepReport, int]]:
    """Run all seven chain comparisons at ``n``, timing each.

    The attached duration (nanoseconds) is the incremental cost of the
    quantities each comparison introduces, so the first entry carries the
    full-grid L0 evaluation. A false flag is a result, never an exception.
    """
    _require_positive(n, "verify_chain")
    clock = time.perf_counter_ns
    out: list[tuple[StepReport, int]] = []

    def emit(report: StepReport, started: int) -> None:
        out.append((report, max(1, clock() - started)))

    t = clock()
    l0 = definition_form(n)
    l1 = symmetrized_form(n)
    emit(StepReport.compare(n, StepId.L1_SYMMETRIZED, l0, l1), t)

    t = clock()
    l2 = absorbed_form(n)
    scale = 4 * (2 * n) * (2 * n - 1)
    emit(StepReport.compare(n, StepId.L2_ABSORBED, l1, scale * l2), t)

    t = clock()
    l3 = folded_form(n)
    emit(StepReport.compare(n, StepId.L3_FOLDED, l2, l3), t)

    t = clock()
    l5 = cancelled_form(n)
    emit(StepReport.compare(n, StepId.L5_CANCELLED, l3, l5), t)

    t = clock()
    l6 = telescoped_form(n)
    emit(StepReport.compare(n, StepId.L6_TELESCOPED, l5, l6), t)

    t = clock()
    closed_lhs, closed_rhs = closure_sides(n)
    emit(StepReport.compare(n, StepId.L7_CLOSED, closed_lhs, closed_rhs), t)

    t = clock()
    finish = alternative_finish(n)
    report = StepReport(
        n=n,
        step=StepId.X_FINISH,
        lhs=l6,
        rhs=finish.expression,
        equal=l6 == finish.expression and finish.all_equal,
    )
    emit(report, t)
    return out


def verify_chain(n: int) -> list[StepReport]:
    """The seven consecutive-line comparisons at ``n``, in chain order."""
    return [report for report, _ in verify_chain_timed(n)]
