"""Dissection -> binary tree -> ordered tree -> Dyck path, and back.

Stage one is the dual tree of the dissection. Rooted at the base, the
triangle sitting on an edge becomes a node; of its two other edges, the one
reached first going clockwise from the parent edge leads to the left child
and the other to the right child; polygon sides end the recursion. Stage
two is the natural correspondence (left child = first child, right child =
next sibling) with a new root planted on top. Stage three walks around the
ordered tree, writing U down each edge on the way out and D on the way back.

Black ears are the leaves of the binary tree, and all of them except the
last become DDU factors of the path: countDDU = blackEarCount - 1. The
mirror orientation obeys the same count law. This one sends the decagon
dissection with diagonals {-1,4},{-1,5},{-1,7},{0,3},{0,4},{1,3},{5,7} to
UUUUDDUDDDUDUUDD, the customary drawing, and is kept for that reason.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional

from catalan_ears.exactmath import binomial, catalan, pow2
from catalan_ears.structures import (
    BinaryTree,
    Dissection,
    DyckPath,
    InvalidStructureError,
    OrderedTree,
    binary_size,
    count_ddu,
    dyck_paths,
)


def dissection_to_binary(d: Dissection) -> BinaryTree:
    adj = d.adjacency()

    def build(i: int, j: int) -> Optional[BinaryTree]:
        if j - i < 2:
            return None
        for m in range(i + 1, j):
            if m in adj[i] and m in adj[j]:
                break
        else:
            raise InvalidStructureError(f"no triangle on chord {(i, j)}")
        # In position space chord (m, j) is the clockwise one.
        return BinaryTree(left=build(m, j), right=build(i, m))

    root = build(0, d.n + 1)
    assert root is not None
    return root


def binary_to_dissection(b: Optional[BinaryTree]) -> Dissection:
    n = binary_size(b)
    if n == 0:
        raise InvalidStructureError("the empty tree has no dissection; dissections need n >= 1")
    chords: list[tuple[int, int]] = []
    stack: list[tuple[int, int, BinaryTree]] = [(0, n + 1, b)]  # type: ignore[list-item]
    while stack:
        i, j, node = stack.pop()
        m = i + binary_size(node.right) + 1
        if m - i > 1:
            chords.append((i, m))
            stack.append((i, m, node.right))  # type: ignore[arg-type]
        if j - m > 1:
            chords.append((m, j))
            stack.append((m, j, node.left))  # type: ignore[arg-type]
    return Dissection.from_positions(n, chords)


def _forest_from_binary(b: Optional[BinaryTree]) -> tuple[OrderedTree, ...]:
    forest = []
    while b is not None:
        forest.append(OrderedTree(_forest_from_binary(b.left)))
        b = b.right
    return tuple(forest)


def binary_to_ordered(b: Optional[BinaryTree]) -> OrderedTree:
    """Natural correspondence, planted: the result has one edge per node of ``b``."""
    return OrderedTree(_forest_from_binary(b))


def _binary_from_forest(forest: tuple[OrderedTree, ...]) -> Optional[BinaryTree]:
    b = None
    for t in reversed(forest):
        b = BinaryTree(_binary_from_forest(t.children), b)
    return b


def ordered_to_binary(t: OrderedTree) -> Optional[BinaryTree]:
    return _binary_from_forest(t.children)


def ordered_to_dyck(t: OrderedTree) -> DyckPath:
    out: list[str] = []

    def walk(node: OrderedTree) -> None:
        for child in node.children:
            out.append("U")
            walk(child)
            out.append("D")

    walk(t)
    return DyckPath._trusted("".join(out))


def dyck_to_ordered(p: DyckPath) -> OrderedTree:
    stack: list[list[OrderedTree]] = [[]]
    for s in p.steps:
        if s == "U":
            stack.append([])
        else:
            children = stack.pop()
            stack[-1].append(OrderedTree(tuple(children)))
    if len(stack) != 1:
        raise InvalidStructureError(f"unbalanced path {p.steps!r}")
    return OrderedTree(tuple(stack[0]))


def dissection_to_dyck(d: Dissection) -> DyckPath:
    return ordered_to_dyck(binary_to_ordered(dissection_to_binary(d)))


def dyck_to_dissection(p: DyckPath) -> Dissection:
    if p.semilength == 0:
        raise InvalidStructureError("the empty path has no dissection; dissections need n >= 1")
    return binary_to_dissection(ordered_to_binary(dyck_to_ordered(p)))


def ddu_formula(n: int, k: int) -> int:
    """Dyck paths of semilength n with k DDUs: 2^(n-1-2k) * C(n-1, 2k) * Catalan(k)."""
    if n < 1 or k < 0 or 2 * k > n - 1:
        return 0
    return pow2(n - 1 - 2 * k) * binomial(n - 1, 2 * k) * catalan(k)


def ddu_distribution(n: int) -> dict[int, int]:
    """DDU counts over all Dyck paths of semilength n, by direct enumeration."""
    counts = Counter(count_ddu(p) for p in dyck_paths(n))
    return dict(sorted(counts.items()))


def ddu_triangle(nmax: int) -> list[int]:
    """Rows n = 1..nmax of the DDU distribution flattened with k ascending."""
    flat: list[int] = []
    for n in range(1, nmax + 1):
        dist = ddu_distribution(n)
        flat.extend(dist.get(k, 0) for k in range(0, (n - 1) // 2 + 1))
    return flat
