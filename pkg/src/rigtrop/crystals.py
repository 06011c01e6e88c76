"""Rectangular tableau crystals, tensor products, combinatorial R and energy.

An element of B^{r,s} is a rectangular semistandard tableau given as a tuple
of ``r`` row tuples of length ``s``. A tensor product ``b_1 ⊗ … ⊗ b_m`` is a
tuple of factors, where a factor is either such a tableau or, for one-row
factors, simply a weakly increasing word. ``None`` is the crystal zero.

Kashiwara operators use Kashiwara's convention: a tableau is read in the
Japanese order (columns right to left, each column top to bottom), letter
``a`` gives a ``+`` and letter ``a+1`` a ``-``, adjacent ``+ -`` pairs cancel,
``f_a`` changes the leftmost surviving ``+`` and ``e_a`` the rightmost
surviving ``-``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .tableaux import Partition, reverse_bump, row_insert_word, row_word, shape


class InternalError(RuntimeError):
    pass


def highest_weight_element(r: int, s: int, n: int) -> tuple:
    """The r x s tableau whose i-th row is filled with i."""
    if not (1 <= r <= n - 1 and s >= 1):
        raise ValueError(f"no B^{{{r},{s}}} for n={n}")
    return tuple((i,) * s for i in range(1, r + 1))


def is_word(factor) -> bool:
    return len(factor) > 0 and isinstance(factor[0], int)


def as_tableau(factor) -> tuple:
    return (tuple(factor),) if is_word(factor) else tuple(tuple(r) for r in factor)


def is_rectangular(T) -> bool:
    return len({len(r) for r in T}) <= 1


# ------------------------------------------------------------------ Kashiwara


def _japanese_cells(T):
    """Cells (row, col) of a tableau in Japanese reading order."""
    width = len(T[0]) if T else 0
    return [
        (i, j)
        for j in range(width - 1, -1, -1)
        for i in range(len(T))
        if j < len(T[i])
    ]


def _signature(letters, a):
    """Indices of the uncancelled ``+`` and ``-`` letters, in reading order."""
    plus, minus = [], []
    for k, x in enumerate(letters):
        if x == a:
            plus.append(k)
        elif x == a + 1:
            if plus:
                plus.pop()
            else:
                minus.append(k)
    return plus, minus


def _flatten(factors):
    letters, where = [], []
    for f, T in enumerate(factors):
        for (i, j) in _japanese_cells(T):
            letters.append(T[i][j])
            where.append((f, i, j))
    return letters, where


def _tensor_kashiwara(op, a, tabs):
    letters, where = _flatten(tabs)
    plus, minus = _signature(letters, a)
    if op == "f":
        if not plus:
            return None
        k, new = plus[0], a + 1
    elif op == "e":
        if not minus:
            return None
        k, new = minus[-1], a
    else:
        raise ValueError(f"unknown operator {op!r}")
    f, i, j = where[k]
    rows = [list(r) for r in tabs[f]]
    rows[i][j] = new
    out = list(tabs)
    out[f] = tuple(tuple(r) for r in rows)
    return tuple(out)


def kashiwara(op: str, a: int, x, n: int | None = None):
    """Apply ``e_a`` or ``f_a`` to a single tableau. Returns None for zero."""
    if n is not None and not 1 <= a <= n - 1:
        raise ValueError(f"index a={a} outside 1..{n - 1}")
    out = _tensor_kashiwara(op, a, (as_tableau(x),))
    if out is None:
        return None
    return out[0][0] if is_word(x) else out[0]


def kashiwara_tensor(op: str, a: int, factors: Sequence, n: int | None = None):
    """Apply ``e_a`` or ``f_a`` to ``b_1 ⊗ … ⊗ b_m`` by the tensor product rule."""
    if n is not None and not 1 <= a <= n - 1:
        raise ValueError(f"index a={a} outside 1..{n - 1}")
    tabs = tuple(as_tableau(f) for f in factors)
    out = _tensor_kashiwara(op, a, tabs)
    if out is None:
        return None
    return tuple(o[0] if is_word(f) else o for f, o in zip(factors, out))


def epsilon(a: int, x) -> int:
    letters, _ = _flatten((as_tableau(x),))
    return len(_signature(letters, a)[1])


def phi_a(a: int, x) -> int:
    letters, _ = _flatten((as_tableau(x),))
    return len(_signature(letters, a)[0])


# ------------------------------------------------------------- R and energy


def _strips(lam, size, floor):
    """Inner shapes nu with lam/nu a horizontal strip of ``size`` boxes and nu >= floor."""
    lam = list(lam)
    L = len(lam)
    lows = [max(lam[i + 1] if i + 1 < L else 0, floor[i] if i < len(floor) else 0) for i in range(L)]
    out = []

    def rec(i, left, nu):
        if i == L:
            if left == 0:
                out.append(tuple(nu))
            return
        for take in range(0, min(left, lam[i] - lows[i]) + 1):
            nu.append(lam[i] - take)
            rec(i + 1, left - take, nu)
            nu.pop()

    if any(lows[i] > lam[i] for i in range(L)):
        return out
    rec(0, size, [])
    return out


def _unbump_strip(T, nu):
    """Reverse-bump the boxes of shape(T)/nu from right to left.

    Returns the smaller tableau and the extracted letters in insertion order,
    or None if they do not form a weakly increasing word.
    """
    lam = shape(T)
    cells = [(i, j) for i in range(len(lam)) for j in range(nu[i] if i < len(nu) else 0, lam[i])]
    cells.sort(key=lambda c: -c[1])
    letters = []
    for (i, _) in cells:
        T, x = reverse_bump(T, i)
        letters.append(x)
    letters.reverse()
    if any(p > q for p, q in zip(letters, letters[1:])):
        return None
    return T, tuple(letters)


@lru_cache(maxsize=200_000)
def _R(b, b2):
    r, s = len(b), len(b[0])
    r2, s2 = len(b2), len(b2[0])
    if (r, s) == (r2, s2):
        return b, b2
    P = row_insert_word(b2, row_word(b))
    floor = (s,) * r

    def rec(T, rows_top_down, k):
        if k == 0:
            if shape(T) != Partition(floor):
                return None
            new_left = tuple(rows_top_down)
            if any(
                new_left[i][j] >= new_left[i + 1][j]
                for i in range(r2 - 1)
                for j in range(s2)
            ):
                return None
            if row_insert_word(T, row_word(new_left)) != P:
                return None
            return new_left, T
        for nu in _strips(shape(T), s2, floor):
            res = _unbump_strip(T, nu)
            if res is None:
                continue
            T2, letters = res
            found = rec(T2, rows_top_down + [letters], k - 1)
            if found is not None:
                return found
        return None

    found = rec(P, [], r2)
    if found is None:
        raise InternalError(f"no R-image found for {b} ⊗ {b2}")
    return found


def combinatorial_R(b, b2):
    """R: b ⊗ b2 -> b2' ⊗ b', where b2' has the shape of b2 and b' that of b.

    Characterized by (b2 <- row(b)) = (b' <- row(b2')). The pair is found by
    peeling the rows of b2' off the insertion tableau as horizontal strips.
    """
    left, right = _R(as_tableau(b), as_tableau(b2))
    if is_word(b2):
        left = left[0]
    if is_word(b):
        right = right[0]
    return left, right


def _concat_rows(r, s, r2, s2):
    return [s * (i < r) + s2 * (i < r2) for i in range(max(r, r2))]


@lru_cache(maxsize=200_000)
def _H(b, b2):
    P = row_insert_word(b2, row_word(b))
    c = _concat_rows(len(b), len(b[0]), len(b2), len(b2[0]))
    return sum(max(0, len(row) - (c[i] if i < len(c) else 0)) for i, row in enumerate(P))


def energy_H(b, b2) -> int:
    """Boxes of (b2 <- row(b)) lying outside the row-concatenation of both rectangles."""
    return _H(as_tableau(b), as_tableau(b2))


def apply_R_permutation(p: Sequence, swaps: Sequence[int]) -> tuple:
    """Apply local R-matrices at the 1-based positions ``k`` (factors k, k+1)."""
    p = list(p)
    for k in swaps:
        if not 1 <= k < len(p):
            raise IndexError(f"swap position {k} outside 1..{len(p) - 1}")
        p[k - 1], p[k] = combinatorial_R(p[k - 1], p[k])
    return tuple(p)
