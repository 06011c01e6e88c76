"""Partitions, skew and cylindric shapes, semistandard tableaux.

Tableaux are plain tuples of row tuples. A skew tableau of shape
``outer/inner`` stores in row ``i`` only the ``outer[i] - inner[i]`` filled
cells. Boxes are indexed ``(row, column)`` from the top-left corner, both
0-based, and the content of a box is ``row - column``.
"""
from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidCylindricShape

Tableau = tuple  # tuple[tuple[int, ...], ...]
Word = tuple  # tuple[int, ...]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``(2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must weakly decrease: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i, row in enumerate(self.outer)
            for j in range(self.inner.part(i), row)
        ]

    def row_lengths(self) -> list[int]:
        return [row - self.inner.part(i) for i, row in enumerate(self.outer)]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def column_lengths(self, ncols: int | None = None) -> list[int]:
        lo, hi = conjugate(self.inner), conjugate(self.outer)
        ncols = len(hi) if ncols is None else ncols
        return [hi.part(j) - lo.part(j) for j in range(ncols)]


def as_skew(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(Partition(shape))


# ---------------------------------------------------------------- insertion


def row_insert(T: Tableau, x: int) -> Tableau:
    """Schensted row insertion ``T <- x``."""
    rows = [list(r) for r in T]
    for row in rows:
        k = bisect.bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return tuple(tuple(r) for r in rows)
        row[k], x = x, row[k]
    rows.append([x])
    return tuple(tuple(r) for r in rows)


def row_insert_word(T: Tableau, w: Iterable[int]) -> Tableau:
    rows = [list(r) for r in T]
    for x in w:
        for row in rows:
            k = bisect.bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def reverse_bump(T: Tableau, row: int) -> tuple[Tableau, int]:
    """Undo one row insertion whose new box was the last box of ``row``.

    Returns the smaller tableau and the letter that had been inserted.
    """
    rows = [list(r) for r in T]
    x = rows[row].pop()
    for i in range(row - 1, -1, -1):
        r = rows[i]
        k = bisect.bisect_left(r, x) - 1
        r[k], x = x, r[k]
    while rows and not rows[-1]:
        rows.pop()
    return tuple(tuple(r) for r in rows), x


def row_word(T: Tableau) -> Word:
    """Concatenate the rows from the bottom row up."""
    return tuple(x for row in reversed(T) for x in row)


def shape(T: Tableau) -> Partition:
    return Partition(len(r) for r in T)


def content(letters: Iterable[int]) -> Counter:
    return Counter(letters)


def tableau_content(T: Tableau) -> Counter:
    return Counter(x for row in T for x in row)


def is_semistandard(T: Tableau, inner: Sequence[int] = ()) -> bool:
    inner = Partition(inner)
    for i, row in enumerate(T):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if any(x < 1 for x in row):
            return False
        if i == 0:
            continue
        above, off_above, off = T[i - 1], inner.part(i - 1), inner.part(i)
        for j, x in enumerate(row, start=off):
            k = j - off_above
            if 0 <= k < len(above) and above[k] >= x:
                return False
            if k >= len(above) and j >= off_above:
                return False  # box below nothing: not a skew shape
    return True


# ---------------------------------------------------------------- enumeration


def _fill(ncells: int, relations: Sequence[tuple[int, int, bool]], max_entry: int):
    """All assignments v: cells -> 1..max_entry with v[a] <= v[b] (or <).

    ``relations`` holds ``(a, b, strict)``. Cells are filled in index order;
    every relation is checked as soon as both ends are known.
    """
    lower: list[list[tuple[int, int]]] = [[] for _ in range(ncells)]
    upper: list[list[tuple[int, int]]] = [[] for _ in range(ncells)]
    for a, b, strict in relations:
        if a == b:
            if strict:
                return []
            continue
        if a < b:
            lower[b].append((a, int(strict)))
        else:
            upper[a].append((b, int(strict)))
    out = []
    values = [0] * ncells

    def rec(k):
        if k == ncells:
            out.append(tuple(values))
            return
        lo = max((values[a] + s for a, s in lower[k]), default=1)
        hi = min((values[b] - s for b, s in upper[k]), default=max_entry)
        for v in range(lo, hi + 1):
            values[k] = v
            rec(k + 1)

    rec(0)
    return out


def _to_rows(cells, values, nrows) -> Tableau:
    rows = [[] for _ in range(nrows)]
    for (i, _), v in zip(cells, values):
        rows[i].append(v)
    return tuple(tuple(r) for r in rows)


def _skew_relations(cells):
    index = {c: k for k, c in enumerate(cells)}
    rel = []
    for k, (i, j) in enumerate(cells):
        if (i, j + 1) in index:
            rel.append((k, index[i, j + 1], False))
        if (i + 1, j) in index:
            rel.append((k, index[i + 1, j], True))
    return rel


def enumerate_ssyt(shape_, max_entry: int) -> list[Tableau]:
    """Every semistandard filling of a (skew) shape with entries in 1..max_entry.

    Sorted lexicographically by row word.
    """
    sh = as_skew(shape_)
    cells = sh.cells()
    fills = _fill(len(cells), _skew_relations(cells), max_entry)
    tabs = [_to_rows(cells, v, len(sh.outer)) for v in fills]
    tabs.sort(key=row_word)
    return tabs


# ---------------------------------------------------------------- cylinders


@dataclass(frozen=True)
class CylindricShape:
    """Skew shape ``base`` repeated by the shift ``s`` rows up, ``n - s`` columns right.

    Construction validates that the periodic set of boxes is a convex subset
    of the lattice, i.e. an honest cylindric skew shape.
    """

    base: SkewShape
    n: int
    s: int
    cells: tuple = field(init=False, compare=False, repr=False)
    relations: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "base", as_skew(self.base))
        n, s = self.n, self.s
        if not 1 <= s <= n - 1:
            raise InvalidCylindricShape(f"need 1 <= s <= n-1, got n={n}, s={s}")
        if self.base.outer.part(0) > n - s:
            raise InvalidCylindricShape(
                f"longest row {self.base.outer.part(0)} exceeds n-s={n - s}"
            )
        # the periodic outer and inner boundaries must not overlap their own shifts
        for name, part in (("outer", self.base.outer), ("inner", self.base.inner)):
            cols = part.conjugate()
            if cols.part(0) - cols.part(n - s - 1) > s:
                raise InvalidCylindricShape(
                    f"{name} columns {tuple(cols)} drop by more than s={s} across the cylinder"
                )
        cells = tuple(self.base.cells())
        object.__setattr__(self, "cells", cells)
        self._check_convex()
        object.__setattr__(self, "relations", tuple(self._relations()))

    @property
    def shift(self) -> tuple[int, int]:
        return (self.n - self.s, self.s)

    def locate(self, i: int, j: int):
        """Return ``(base_index, k)`` if box (i, j) is the k-th shifted copy of a base box."""
        return _locator(self.base, self.n, self.s).get((i, j))

    def __contains__(self, box) -> bool:
        return self.locate(*box) is not None

    def _check_convex(self):
        base_cells = self.cells
        if not base_cells:
            return
        nrows = len(self.base.outer)
        kmax = (nrows - 1) // self.s + 1
        window = [
            (i - k * self.s, j + k * (self.n - self.s))
            for k in range(kmax + 1)
            for (i, j) in base_cells
        ]
        for (xi, xj) in base_cells:
            for (yi, yj) in window:
                if yi < xi or yj < xj:
                    continue
                for zi in range(xi, yi + 1):
                    for zj in range(xj, yj + 1):
                        if (zi, zj) not in self:
                            raise InvalidCylindricShape(
                                f"periodic propagation of {self.base} by {self.shift} "
                                f"is not convex: missing box {(zi, zj)} between "
                                f"{(xi, xj)} and {(yi, yj)}"
                            )

    def _relations(self):
        for k, (i, j) in enumerate(self.cells):
            right = self.locate(i, j + 1)
            if right is not None:
                yield (k, right[0], False)
            below = self.locate(i + 1, j)
            if below is not None:
                yield (k, below[0], True)

    def colors(self, r: int = 0) -> list[int]:
        """Color ``content + r mod n`` of each base box."""
        return [(i - j + r) % self.n for (i, j) in self.cells]


@lru_cache(maxsize=None)
def _locator(base: SkewShape, n: int, s: int) -> dict:
    cells = base.cells()
    nrows = max(len(base.outer), 1)
    kmax = nrows // s + 3
    out = {}
    for idx, (i, j) in enumerate(cells):
        for k in range(-kmax, kmax + 1):
            out[(i - k * s, j + k * (n - s))] = (idx, k)
    return out


def build_cylindric_shape(base, n: int, s: int) -> CylindricShape:
    return CylindricShape(as_skew(base), n, s)


def enumerate_cylindric_ssyt(D: CylindricShape, max_entry: int) -> list[Tableau]:
    """Fillings of the base cells whose periodic extension is semistandard."""
    fills = _fill(len(D.cells), D.relations, max_entry)
    tabs = [_to_rows(D.cells, v, len(D.base.outer)) for v in fills]
    tabs.sort(key=row_word)
    return tabs
