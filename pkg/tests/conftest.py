import itertools

import pytest

from catalan_ears.enumeration import brute_tables


@pytest.fixture(scope="session")
def brute12():
    """Brute-force (u, v) tables for n = 1..12, shared across modules."""
    return brute_tables(12)


def pascal_rows(nmax):
    """Pascal's triangle built row by row by addition only."""
    rows = [[1]]
    for _ in range(nmax):
        prev = rows[-1]
        rows.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return rows


def segner_catalans(nmax):
    cats = [1]
    for m in range(nmax):
        cats.append(sum(cats[i] * cats[m - i] for i in range(m + 1)))
    return cats


def all_dissections_by_subsets(n):
    """Every noncrossing (n-1)-subset of the (n+2)-gon's diagonals, in labels -1..n."""
    labels = list(range(-1, n + 1))
    order = {lab: i for i, lab in enumerate(labels)}
    m = n + 2
    diags = [
        (a, b)
        for a, b in itertools.combinations(labels, 2)
        if (order[b] - order[a]) % m not in (1, m - 1)
    ]

    def cross(e, f):
        a, b = sorted(order[x] for x in e)
        c, d = sorted(order[x] for x in f)
        return a < c < b < d or c < a < d < b

    for subset in itertools.combinations(diags, n - 1):
        if not any(cross(e, f) for e, f in itertools.combinations(subset, 2)):
            yield subset


def triangles_by_triples(n, diagonals):
    """Triangles as vertex triples whose three edges are all sides or diagonals."""
    labels = list(range(-1, n + 1))
    m = n + 2
    edges = {frozenset(e) for e in diagonals}
    edges |= {frozenset((labels[i], labels[(i + 1) % m])) for i in range(m)}
    return sorted(
        t
        for t in itertools.combinations(labels, 3)
        if all(frozenset(p) in edges for p in itertools.combinations(t, 2))
    )


def polygon_sides(n):
    labels = list(range(-1, n + 1))
    m = n + 2
    return {frozenset((labels[i], labels[(i + 1) % m])) for i in range(m)}


def ears_by_definition(n, diagonals, *, black):
    sides = polygon_sides(n)
    if black:
        sides = sides - {frozenset((-1, 0))}
    count = 0
    for t in triangles_by_triples(n, diagonals):
        if sum(frozenset(p) in sides for p in itertools.combinations(t, 2)) >= 2:
            count += 1
    return count


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
