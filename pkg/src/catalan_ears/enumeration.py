"""Exhaustive dissection generation and the u/v ear-statistic tables.

``u[n, k]`` counts dissections of the based (n+2)-gon with exactly k ears
(triangles with two or more polygon sides); ``v[n, k]`` counts those with
exactly k black ears (two or more non-base sides). Each table can be built
three ways: by brute-force enumeration, by the base-triangle recurrences,
and from closed forms.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from catalan_ears.exactmath import ExactDivisionError, binomial, catalan, exact_div, pow2
from catalan_ears.structures import Dissection, ear_counts

ENUMERATION_CAP = 14


class Stat(str, enum.Enum):
    U = "u"
    V = "v"


class Provenance(str, enum.Enum):
    BRUTE = "brute"
    RECURRENCE = "recurrence"
    CLOSED = "closed"


class DependencyError(ValueError):
    """A table needed as input does not cover the rows being computed."""


@dataclass
class StatTable:
    """Exact u or v values keyed by (n, k); only nonzero entries are stored."""

    kind: Stat
    provenance: Provenance
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def set(self, n: int, k: int, value: int) -> None:
        if value < 0:
            raise ValueError(f"negative count {value} at {(n, k)}")
        if value:
            self.entries[n, k] = value
        else:
            self.entries.pop((n, k), None)

    def row(self, n: int) -> dict[int, int]:
        return {k: v for (m, k), v in sorted(self.entries.items()) if m == n}

    def ns(self) -> list[int]:
        return sorted({n for n, _ in self.entries})

    def restrict(self, nmin: int, nmax: int) -> StatTable:
        kept = {key: v for key, v in self.entries.items() if nmin <= key[0] <= nmax}
        return StatTable(self.kind, self.provenance, kept)

    def to_csv(self) -> str:
        lines = ["n,k,value"]
        lines += [f"{n},{k},{v}" for (n, k), v in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str, kind: Stat, provenance: Provenance) -> StatTable:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].strip() != "n,k,value":
            raise ValueError('table CSV must start with the header "n,k,value"')
        table = cls(kind, provenance)
        for ln in lines[1:]:
            n, k, v = (int(x) for x in ln.split(","))
            table.set(n, k, v)
        return table

    def to_json(self) -> dict:
        return {
            "stat": self.kind.value,
            "provenance": self.provenance.value,
            "entries": [{"n": n, "k": k, "value": str(v)} for (n, k), v in sorted(self.entries.items())],
        }


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"n must be in 1..{ENUMERATION_CAP}, got {n!r}")


def _sub_triangulations(i: int, j: int) -> Iterator[tuple]:
    if j - i < 2:
        yield ()
        return
    for m in range(i + 1, j):
        yield from _with_apex(i, j, m)


def _with_apex(i: int, j: int, m: int) -> Iterator[tuple]:
    own = tuple(c for c in ((i, m), (m, j)) if c[1] - c[0] > 1)
    for left in _sub_triangulations(i, m):
        for right in _sub_triangulations(m, j):
            yield own + left + right


def enumerate_dissections(n: int, apex: int | None = None) -> Iterator[Dissection]:
    """Yield every dissection of the based (n+2)-gon exactly once.

    The order is deterministic: apex of the base triangle ascending, then the
    left sub-polygon's choices, then the right's, each recursively in the same
    order. ``apex`` restricts the stream to base triangles (-1, 0, apex), which
    is how work is split across processes.
    """
    _check_n(n)
    apexes = range(1, n + 1) if apex is None else [apex]
    for m in apexes:
        if not 1 <= m <= n:
            raise ValueError(f"apex must be in 1..{n}, got {m}")
        for chords in _with_apex(0, n + 1, m):
            yield Dissection.from_positions(n, chords)


def _count_stats(n: int, apex: int | None = None) -> tuple[Counter, Counter]:
    u: Counter = Counter()
    v: Counter = Counter()
    for d in enumerate_dissections(n, apex):
        ears, black = ear_counts(d)
        u[ears] += 1
        v[black] += 1
    return u, v


def brute_tables(nmax: int, workers: int = 1) -> tuple[StatTable, StatTable]:
    """Both brute-force tables from one pass over all dissections, n = 1..nmax.

    With ``workers > 1`` each row is split by base-triangle apex across
    processes; counts are order-independent so the result is identical.
    """
    _check_n(nmax)
    u = StatTable(Stat.U, Provenance.BRUTE)
    v = StatTable(Stat.V, Provenance.BRUTE)
    if workers > 1:
        jobs = [(n, r) for n in range(1, nmax + 1) for r in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_stats, *zip(*jobs)))
        per_n: dict[int, tuple[Counter, Counter]] = {}
        for (n, _), (cu, cv) in zip(jobs, parts):
            acc = per_n.setdefault(n, (Counter(), Counter()))
            acc[0].update(cu)
            acc[1].update(cv)
    else:
        per_n = {n: _count_stats(n) for n in range(1, nmax + 1)}
    for n, (cu, cv) in per_n.items():
        for k, c in cu.items():
            u.set(n, k, c)
        for k, c in cv.items():
            v.set(n, k, c)
    return u, v


def brute_table(kind: Stat | str, nmax: int, workers: int = 1) -> StatTable:
    u, v = brute_tables(nmax, workers)
    return u if Stat(kind) is Stat.U else v


def _double_sum(v: StatTable, n: int, k: int) -> int:
    # Sum over base apexes 2..n-1 of v[r-1, j] * v[n-r, k-j], all j; absent
    # entries are zero, which enforces the summation bounds automatically.
    total = 0
    for r in range(2, n):
        left = v.row(r - 1)
        for j, a in left.items():
            b = v[n - r, k - j]
            if b:
                total += a * b
    return total


def v_recurrence(nmax: int, seed: StatTable | None = None) -> StatTable:
    """v table for n = 1..nmax; rows n <= 3 come from ``seed`` (brute force by default)."""
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    if seed is None:
        seed = brute_table(Stat.V, min(3, nmax))
    table = StatTable(Stat.V, Provenance.RECURRENCE)
    for (n, k), val in seed.entries.items():
        if n <= 3:
            table.set(n, k, val)
    for n in range(4, nmax + 1):
        for k in range(1, (n + 1) // 2 + 2):
            table.set(n, k, 2 * table[n - 1, k] + _double_sum(table, n, k))
    return table


U_BASE = {(1, 1): 1, (2, 2): 2, (3, 2): 5}


def u_recurrence(nmax: int, v: StatTable) -> StatTable:
    """u table for n = 1..nmax from the v table; needs v through row nmax-1."""
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    have = set(v.ns())
    missing = [m for m in range(1, nmax) if m not in have]
    if missing:
        raise DependencyError(f"u recurrence up to n={nmax} needs v rows {missing}")
    table = StatTable(Stat.U, Provenance.RECURRENCE)
    for (n, k), val in U_BASE.items():
        if n <= nmax:
            table.set(n, k, val)
    for n in range(4, nmax + 1):
        for k in range(2, (n + 2) // 2 + 1):
            table.set(n, k, 2 * v[n - 1, k - 1] + _double_sum(v, n, k))
    return table


def recurrence_table(kind: Stat | str, nmax: int) -> StatTable:
    v = v_recurrence(nmax)
    if Stat(kind) is Stat.V:
        return v
    return u_recurrence(nmax, v)


def v_closed(n: int, k: int) -> int:
    """Black-ear count in closed form: 2^(n+1-2k) * C(n-1, 2k-2) * Catalan(k-1)."""
    if n < 1:
        raise ValueError(f"v_closed needs n >= 1, got {n}")
    b = binomial(n - 1, 2 * k - 2)
    if b == 0:
        return 0
    return pow2(n + 1 - 2 * k) * b * catalan(k - 1)


def _scaled_pow2(e: int, x: int) -> int:
    return x * pow2(e) if e >= 0 else exact_div(x, pow2(-e))


def u_closed_two_term(n: int, k: int) -> int:
    """2^(n+1-2k) * (C(n-2,2k-3)*Cat(k-1) + 4*C(n-2,2k-4)*Cat(k-2)), 0 off support."""
    if n < 2 or k < 2:
        return 0
    inner = binomial(n - 2, 2 * k - 3) * catalan(k - 1) + 4 * binomial(n - 2, 2 * k - 4) * catalan(k - 2)
    if inner == 0:
        return 0
    return _scaled_pow2(n + 1 - 2 * k, inner)


def u_closed_simplified(n: int, k: int) -> int:
    """With j = k-1: 2^(n-2j) * C(n, 2j) * Cat(j) * (n+2) j / (n(n-1)), 0 off support."""
    if n < 2 or k < 2:
        return 0
    j = k - 1
    b = binomial(n, 2 * j)
    if b == 0:
        return 0
    return exact_div(pow2(n - 2 * j) * b * catalan(j) * (n + 2) * j, n * (n - 1))


def u_closed(n: int, k: int) -> int:
    """Ear count in closed form; both published forms are evaluated and must agree."""
    a = u_closed_two_term(n, k)
    b = u_closed_simplified(n, k)
    if a != b:
        raise ExactDivisionError(f"closed forms disagree at (n={n}, k={k}): {a} != {b}")
    return a


def closed_table(kind: Stat | str, nmax: int) -> StatTable:
    """Closed-form table for n = 1..nmax.

    The u closed form is singular at n = 1, so that row holds the base value
    u[1, 1] = 1.
    """
    kind = Stat(kind)
    table = StatTable(kind, Provenance.CLOSED)
    for n in range(1, nmax + 1):
        if kind is Stat.V:
            for k in range(1, (n + 1) // 2 + 1):
                table.set(n, k, v_closed(n, k))
        elif n == 1:
            table.set(1, 1, U_BASE[1, 1])
        else:
            for k in range(2, (n + 2) // 2 + 1):
                table.set(n, k, u_closed(n, k))
    return table


def build_table(kind: Stat | str, nmax: int, provenance: Provenance | str, workers: int = 1) -> StatTable:
    provenance = Provenance(provenance)
    if provenance is Provenance.BRUTE:
        return brute_table(kind, nmax, workers)
    if provenance is Provenance.RECURRENCE:
        return recurrence_table(kind, nmax)
    return closed_table(kind, nmax)


@dataclass
class RelationReport:
    """Entrywise check of u[n,k] = v[n,k] + 2 v[n-1,k-1] - 2 v[n-1,k]."""

    nmin: int
    nmax: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "identity": "relation",
            "nmin": self.nmin,
            "nmax": self.nmax,
            "checked": self.checked,
            "pass": self.passed,
            "failures": self.violations,
        }


def relation_check(u: StatTable, v: StatTable, nmax: int, nmin: int = 1) -> RelationReport:
    """Check the u/v relation for nmin <= n <= nmax and every k that could be nonzero.

    Entries missing from either table count as zero, including the whole of
    row n = 0. Violations are collected, never raised.
    """
    report = RelationReport(nmin, nmax)
    for n in range(nmin, nmax + 1):
        for k in range(0, n + 3):
            lhs = u[n, k]
            rhs = v[n, k] + 2 * v[n - 1, k - 1] - 2 * v[n - 1, k]
            report.checked += 1
            if lhs != rhs:
                report.violations.append({"n": n, "k": k, "lhs": str(lhs), "rhs": str(rhs)})
    return report
