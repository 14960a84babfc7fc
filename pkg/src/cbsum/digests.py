"""Stable fingerprints and size estimates for huge exact integers.

Results in this package routinely run to hundreds of thousands of decimal
digits, so reports identify them by a SHA-256 digest of their decimal
representation plus a digit count instead of printing them in full.
"""
from __future__ import annotations

import hashlib
import sys


def _lift_str_limit() -> None:
    # CPython >= 3.10.7 caps int -> str conversion at 4300 digits by default;
    # exact values here legitimately exceed that.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def decimal_str(value: int) -> str:
    """Decimal representation of ``value``, regardless of its size."""
    _lift_str_limit()
    return str(value)


def decimal_digits(value: int) -> int:
    """Number of decimal digits of ``|value|`` without converting to a string.

    Brackets the answer from ``bit_length`` and corrects by comparing against
    powers of ten, so it stays cheap even for million-bit integers.
    """
    value = abs(value)
    if value == 0:
        return 1
    # floor(bits * log10(2)) as pure integer arithmetic
    estimate = value.bit_length() * 30103 // 100000
    power = 10**estimate
    while value < power:
        estimate -= 1
        power //= 10
    while value >= power * 10:
        estimate += 1
        power *= 10
    return estimate + 1


def value_digest(value: int) -> str:
    """SHA-256 hex digest of the decimal representation of ``value``."""
    return hashlib.sha256(decimal_str(value).encode("ascii")).hexdigest()
