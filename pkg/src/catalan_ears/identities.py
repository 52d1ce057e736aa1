"""Exact checks of the Catalan identities refined by the ear statistics.

Fractional summands are never evaluated one at a time. Each sum is taken
over a common denominator and divided once at the end with exact_div, so a
transcription error surfaces as ExactDivisionError instead of a rounded
wrong answer.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

from catalan_ears.exactmath import binomial, catalan, exact_div, pow2

IDENTITY_CAP = 200


def main_rhs(n: int) -> int:
    """sum_{1<=k<=n/2} 2^(n-2k) C(n,2k) Cat(k) k(n+2) / (n(n-1)); equals Cat(n) for n >= 2."""
    if n < 2:
        raise ValueError(f"main identity needs n >= 2, got {n}")
    numer = sum(pow2(n - 2 * k) * binomial(n, 2 * k) * catalan(k) * k * (n + 2) for k in range(1, n // 2 + 1))
    return exact_div(numer, n * (n - 1))


def touchard_rhs(n: int) -> int:
    """sum_{0<=k<=n/2} 2^(n-2k) C(n,2k) Cat(k); equals Cat(n+1)."""
    if n < 0:
        raise ValueError(f"Touchard's identity needs n >= 0, got {n}")
    return sum(pow2(n - 2 * k) * binomial(n, 2 * k) * catalan(k) for k in range(0, n // 2 + 1))


def amdeberhan_lhs(n: int) -> int:
    """2n Cat(n+1) / (n+3)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return exact_div(2 * n * catalan(n + 1), n + 3)


def amdeberhan_rhs(n: int) -> int:
    """sum_{0<=k<=(n-1)/2} 2^(n-2k) C(n,2k+1) Cat(k) (2k+1)/(k+2).

    The summands are not integers on their own; the sum is cleared by the
    lcm of the k+2 and divided once. Empty (zero) for n = 0.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    ks = range(0, (n - 1) // 2 + 1) if n >= 1 else range(0)
    denom = math.lcm(*(k + 2 for k in ks)) if ks else 1
    numer = sum(
        pow2(n - 2 * k) * binomial(n, 2 * k + 1) * catalan(k) * (2 * k + 1) * (denom // (k + 2)) for k in ks
    )
    return exact_div(numer, denom)


def super_ballot(n: int) -> int:
    """6 Cat(n+1) / (n+3), checked against 2*Touchard - Amdeberhan."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    value = exact_div(6 * catalan(n + 1), n + 3)
    other = 2 * touchard_rhs(n) - amdeberhan_rhs(n)
    if value != other:
        raise ArithmeticError(f"super ballot mismatch at n={n}: {value} != {other}")
    return value


@dataclass
class IdentityReport:
    identity: str
    nmin: int
    nmax: int
    rows: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.rows)

    @property
    def failures(self) -> list[dict]:
        return [{"n": n, "lhs": str(lhs), "rhs": str(rhs)} for n, lhs, rhs in self.rows if lhs != rhs]

    def to_json(self) -> dict:
        return {"identity": self.identity, "nmax": self.nmax, "pass": self.passed, "failures": self.failures}


# name -> (first n, left side, right side)
IDENTITIES: dict[str, tuple[int, Callable[[int], int], Callable[[int], int]]] = {
    "main": (2, catalan, main_rhs),
    "touchard": (0, lambda n: catalan(n + 1), touchard_rhs),
    "amdeberhan": (1, amdeberhan_lhs, amdeberhan_rhs),
    "superballot": (
        0,
        lambda n: exact_div(6 * catalan(n + 1), n + 3),
        lambda n: 2 * touchard_rhs(n) - amdeberhan_rhs(n),
    ),
}


def verify(identity: str, nmax: int) -> IdentityReport:
    """Compare both sides exactly for every n from the identity's first valid n to nmax."""
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {sorted(IDENTITIES)}")
    if not 0 <= nmax <= IDENTITY_CAP:
        raise ValueError(f"nmax must be in 0..{IDENTITY_CAP}, got {nmax}")
    nmin, lhs, rhs = IDENTITIES[identity]
    report = IdentityReport(identity, nmin, nmax)
    for n in range(nmin, nmax + 1):
        report.rows.append((n, lhs(n), rhs(n)))
    return report
