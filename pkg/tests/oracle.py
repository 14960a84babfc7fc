"""Independent oracles for the test suite.

Everything here is built directly on ``math.comb`` and literal loops so it
shares no code with the package under test.
"""
from __future__ import annotations

from math import comb


def brute_force_sum(n: int) -> int:
    """S(n) summed term by term over the whole (2n+1)^2 grid."""
    total = 0
    for i in range(-n, n + 1):
        for j in range(-n, n + 1):
            total += comb(2 * n, n + i) * comb(2 * n, n + j) * abs(i * i - j * j)
    return total


def reflected_brute_force_sum(n: int) -> int:
    """S(n) over the reflected grid (i -> -i, j -> -j)."""
    total = 0
    for i in range(-n, n + 1):
        for j in range(-n, n + 1):
            total += comb(2 * n, n - i) * comb(2 * n, n - j) * abs(i * i - j * j)
    return total


def pascal_row_by_addition(m: int) -> list[int]:
    """Row m of Pascal's triangle grown row by row with the addition rule."""
    row = [1]
    for _ in range(m):
        row = [1] + [row[k] + row[k + 1] for k in range(len(row) - 1)] + [1]
    return row
