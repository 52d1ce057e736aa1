"""Regenerate the bundled OEIS b-files from the sequences' defining formulas.

oeis.org is not reachable from the build sandbox, so the shipped b-files are
written from the OEIS definitions rather than downloaded. The formulas here
deliberately avoid the package's own code paths.
"""

from math import comb, factorial
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "catalan_ears" / "data"


def a007054(n):
    return 6 * factorial(2 * n) // (factorial(n) * factorial(n + 2))


def a091894_rows(rows):
    yield 1  # row 0
    for n in range(1, rows + 1):
        for k in range((n - 1) // 2 + 1):
            yield 2 ** (n - 2 * k - 1) * comb(n - 1, 2 * k) * comb(2 * k, k) // (k + 1)


def write(name, title, values):
    lines = [
        f"# {title}",
        "# Regenerated offline from the OEIS definition (see tools/make_fixtures.py).",
    ]
    lines += [f"{i} {v}" for i, v in enumerate(values)]
    (DATA / name).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    write("b007054.txt", "A007054: Super ballot numbers: 6*(2n)!/(n!(n+2)!), n = 0..200",
          [a007054(n) for n in range(201)])
    write("b091894.txt", "A091894: Touchard distribution, T(0,0)=1 then T(n,k)=2^(n-2k-1)*C(n-1,2k)*Catalan(k), rows 0..30",
          list(a091894_rows(30)))
