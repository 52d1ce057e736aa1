"""Dissections of a based polygon, the trees and Dyck paths they map to, and
the ear statistics.

Vertices of the (n+2)-gon carry the labels -1, 0, 1, ..., n counterclockwise,
and the base is the side {-1, 0}. Internally a label is turned into a
*position* by moving -1 to the end: positions 0, 1, ..., n are labels
0, 1, ..., n and position n+1 is label -1. In position space the base is the
chord (0, n+1) and every sub-polygon cut off by a diagonal (i, j) is the run
of positions i..j, which keeps the recursions simple. Nothing outside this
package sees positions.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Optional

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


class InvalidStructureError(ValueError):
    """A dissection, tree or path violates one of its invariants."""


class ParseError(InvalidStructureError):
    """Text could not be parsed into a valid structure."""


def label_to_pos(label: int, n: int) -> int:
    return n + 1 if label == -1 else label


def pos_to_label(pos: int, n: int) -> int:
    return -1 if pos == n + 1 else pos


def is_side(p: int, q: int, n: int) -> bool:
    """True when positions p, q are joined by a side of the (n+2)-gon."""
    lo, hi = min(p, q), max(p, q)
    return hi - lo == 1 or (lo == 0 and hi == n + 1)


def is_base(p: int, q: int, n: int) -> bool:
    return min(p, q) == 0 and max(p, q) == n + 1


def crosses(e: Edge, f: Edge) -> bool:
    """Strict interleaving of two chords in circular order; shared endpoints never cross."""
    a, b = sorted(e)
    c, d = sorted(f)
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Dissection:
    """A triangulation of the based (n+2)-gon, stored as its n-1 diagonals.

    Diagonals use the outward labels -1..n, each pair ordered (smaller,
    larger) and the tuple sorted, so equal dissections compare equal.
    """

    n: int
    diagonals: tuple[Edge, ...]

    def __post_init__(self) -> None:
        diagonals = tuple(sorted(tuple(sorted(map(int, e))) for e in self.diagonals))
        object.__setattr__(self, "diagonals", diagonals)
        self._validate()

    @classmethod
    def _trusted(cls, n: int, diagonals: tuple[Edge, ...]) -> Dissection:
        # Skips validation; callers guarantee canonical, valid diagonals.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "diagonals", diagonals)
        return obj

    @classmethod
    def from_positions(cls, n: int, chords: Iterable[Edge]) -> Dissection:
        labelled = (tuple(sorted((pos_to_label(p, n), pos_to_label(q, n)))) for p, q in chords)
        return cls._trusted(n, tuple(sorted(labelled)))

    def _validate(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise InvalidStructureError(f"n must be a positive integer, got {n!r}")
        if len(self.diagonals) != n - 1:
            raise InvalidStructureError(
                f"a dissection into {n} triangles has exactly {n - 1} diagonals, got {len(self.diagonals)}"
            )
        if len(set(self.diagonals)) != len(self.diagonals):
            raise InvalidStructureError("repeated diagonal")
        chords = []
        for a, b in self.diagonals:
            if not (-1 <= a <= n and -1 <= b <= n):
                raise InvalidStructureError(f"label out of range -1..{n} in diagonal {(a, b)}")
            p, q = label_to_pos(a, n), label_to_pos(b, n)
            if p == q or is_side(p, q, n):
                raise InvalidStructureError(f"diagonal {(a, b)} does not join nonadjacent vertices")
            chords.append((p, q))
        for e, f in itertools.combinations(chords, 2):
            if crosses(e, f):
                raise InvalidStructureError(
                    f"diagonals {self._label_edge(e)} and {self._label_edge(f)} cross"
                )

    def _label_edge(self, e: Edge) -> Edge:
        return tuple(sorted(pos_to_label(p, self.n) for p in e))  # type: ignore[return-value]

    def chords(self) -> list[Edge]:
        """Diagonals in position space, each as (low, high)."""
        n = self.n
        return [tuple(sorted((label_to_pos(a, n), label_to_pos(b, n)))) for a, b in self.diagonals]  # type: ignore[misc]

    def adjacency(self) -> list[set[int]]:
        """Neighbour sets by position, over polygon sides and diagonals."""
        n = self.n
        adj = [{p - 1, p + 1} for p in range(n + 2)]
        adj[0] = {1, n + 1}
        adj[n + 1] = {n, 0}
        for a, b in self.diagonals:
            p = n + 1 if a == -1 else a
            q = n + 1 if b == -1 else b
            adj[p].add(q)
            adj[q].add(p)
        return adj

    def to_json(self) -> str:
        return serialize(self)


def _triangle_positions(d: Dissection) -> list[Triangle]:
    # In a convex triangulation every 3-clique is a face. Seen from its lowest
    # vertex v, a face's other two corners are consecutive neighbours of v.
    adj = d.adjacency()
    found = []
    for v, nbrs in enumerate(adj):
        above = sorted(w for w in nbrs if w > v)
        for x, y in zip(above, above[1:]):
            if y in adj[x]:
                found.append((v, x, y))
    if len(found) != d.n:
        raise InvalidStructureError(f"expected {d.n} triangles, found {len(found)}")
    return found


def triangles_of(d: Dissection) -> list[Triangle]:
    """The n triangles of ``d``, each a label triple in ascending label order."""
    n = d.n
    tris = [tuple(sorted(pos_to_label(p, n) for p in t)) for t in _triangle_positions(d)]
    return sorted(tris)  # type: ignore[arg-type]


def ear_counts(d: Dissection) -> tuple[int, int]:
    """(ear count, black ear count) of ``d`` in one pass over its triangles."""
    last = d.n + 1
    ears = black = 0
    for a, b, c in _triangle_positions(d):
        # a < b < c, so only a-b and b-c can be consecutive sides and only
        # a-c can be the base.
        sides = (b - a == 1) + (c - b == 1)
        if sides == 2:
            black += 1
            ears += 1
        elif sides == 1 and a == 0 and c == last:
            ears += 1
    return ears, black


def ear_count(d: Dissection) -> int:
    """Triangles with at least two polygon sides, the blue base included."""
    return ear_counts(d)[0]


def black_ear_count(d: Dissection) -> int:
    """Triangles with at least two polygon sides other than the base."""
    return ear_counts(d)[1]


@dataclass(frozen=True)
class BinaryTree:
    """A binary tree node; the empty tree is ``None``."""

    left: Optional[BinaryTree] = None
    right: Optional[BinaryTree] = None

    @property
    def n(self) -> int:
        return binary_size(self)


def binary_size(b: Optional[BinaryTree]) -> int:
    size = 0
    stack = [b]
    while stack:
        node = stack.pop()
        if node is not None:
            size += 1
            stack.append(node.left)
            stack.append(node.right)
    return size


def binary_to_json(b: Optional[BinaryTree]) -> object:
    """``None`` for the empty tree, otherwise ``[left, right]``."""
    if b is None:
        return None
    return [binary_to_json(b.left), binary_to_json(b.right)]


def binary_from_json(obj: object) -> Optional[BinaryTree]:
    if obj is None:
        return None
    if not (isinstance(obj, list) and len(obj) == 2):
        raise ParseError(f"binary tree node must be null or a [left, right] pair, got {obj!r}")
    return BinaryTree(binary_from_json(obj[0]), binary_from_json(obj[1]))


@dataclass(frozen=True)
class OrderedTree:
    """A rooted plane tree; a node is the ordered tuple of its subtrees."""

    children: tuple[OrderedTree, ...] = ()

    @property
    def edges(self) -> int:
        return sum(1 + c.edges for c in self.children)

    def to_json(self) -> list:
        return [c.to_json() for c in self.children]

    @classmethod
    def from_json(cls, obj: object) -> OrderedTree:
        if not isinstance(obj, list):
            raise ParseError(f"ordered tree node must be a list of children, got {obj!r}")
        return cls(tuple(cls.from_json(c) for c in obj))


@dataclass(frozen=True)
class DyckPath:
    """A word over U and D whose every prefix has at least as many U as D."""

    steps: str

    def __post_init__(self) -> None:
        height = 0
        for i, s in enumerate(self.steps):
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise InvalidStructureError(f"step {i} is {s!r}; Dyck paths use only 'U' and 'D'")
            if height < 0:
                raise InvalidStructureError(f"path goes below the axis at step {i}")
        if height != 0:
            raise InvalidStructureError(f"path ends at height {height}, not 0")

    @classmethod
    def _trusted(cls, steps: str) -> DyckPath:
        obj = object.__new__(cls)
        object.__setattr__(obj, "steps", steps)
        return obj

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def count_ddu(p: DyckPath) -> int:
    s = p.steps
    return sum(1 for i in range(len(s) - 2) if s[i : i + 3] == "DDU")


def dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength n, U-before-D lexicographic order."""
    if n < 0:
        raise ValueError(f"semilength must be >= 0, got {n}")
    buf: list[str] = []

    def extend(ups: int, downs: int) -> Iterator[str]:
        if ups == n and downs == n:
            yield "".join(buf)
            return
        if ups < n:
            buf.append("U")
            yield from extend(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append("D")
            yield from extend(ups, downs + 1)
            buf.pop()

    for s in extend(0, 0):
        yield DyckPath._trusted(s)


def serialize(d: Dissection) -> str:
    """Canonical JSON, e.g. ``{"n":2,"diagonals":[[0,2]]}``."""
    return json.dumps({"n": d.n, "diagonals": [list(e) for e in d.diagonals]}, separators=(",", ":"))


def parse(text: str) -> Dissection:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed dissection JSON: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"n", "diagonals"}:
        raise ParseError('dissection JSON must be an object with exactly the keys "n" and "diagonals"')
    n, diagonals = obj["n"], obj["diagonals"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(f'"n" must be an integer, got {n!r}')
    if not isinstance(diagonals, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        for e in diagonals
    ):
        raise ParseError('"diagonals" must be a list of integer pairs')
    try:
        return Dissection(n, tuple(tuple(e) for e in diagonals))  # type: ignore[misc]
    except ParseError:
        raise
    except InvalidStructureError as exc:
        raise ParseError(str(exc)) from exc


def serialize_path(p: DyckPath) -> str:
    return p.steps


def parse_path(text: str) -> DyckPath:
    try:
        return DyckPath(text.strip())
    except ParseError:
        raise
    except InvalidStructureError as exc:
        raise ParseError(str(exc)) from exc
