"""Exact integer helpers: binomials, Catalan numbers, powers of two.

Python ints are arbitrary precision, so every count here is a plain ``int``.
Indices are small; only the values grow.
"""

from __future__ import annotations

import functools
import math


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, raising ExactDivisionError unless ``b`` divides ``a``."""
    if b == 0:
        raise ExactDivisionError(f"division of {a} by zero")
    q, r = divmod(a, b)
    if r:
        raise ExactDivisionError(f"{b} does not divide {a} (remainder {r})")
    return q


def binomial(n: int, k: int) -> int:
    """n choose k, with the convention that out-of-range k gives 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@functools.lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan needs n >= 0, got {n}")
    return exact_div(math.comb(2 * n, n), n + 1)


def pow2(m: int) -> int:
    if m < 0:
        raise ValueError(f"pow2 needs m >= 0, got {m}")
    return 1 << m
