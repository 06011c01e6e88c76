"""Min-plus evaluation of loop polynomials and the tropical shape formulas.

An assignment is an ``m x n`` table ``a[j-1][i]`` of nonnegative integers,
the value of x_j^(i). Tropical evaluation of a positive polynomial is the
minimum over its monomials of the exponent vector dotted with the values.
"""
from __future__ import annotations

from functools import lru_cache
from math import ceil
from typing import Sequence

import numpy as np

from .errors import ConvexityViolation, NotAPartition, NotSubtractionFree, RibbonRemovalFailure
from .loopsym import LoopPolynomial, cylindric_loop_schur, tau_poly
from .tableaux import Partition, build_cylindric_shape, conjugate


def path_coordinates(p: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """x_j^(i+j-1) = number of letters i in b_{m+1-j}."""
    m = len(p)
    a = [[0] * n for _ in range(m)]
    for j in range(1, m + 1):
        for letter in p[m - j]:
            a[j - 1][(letter + j - 1) % n] += 1
    return a


def exponent_matrix(f: LoopPolynomial) -> np.ndarray:
    if not f.terms:
        raise ValueError("cannot tropicalize the zero polynomial")
    if any(c < 0 for c in f.terms.values()):
        raise NotSubtractionFree("polynomial has a negative coefficient")
    return np.array(sorted(f.terms), dtype=np.int64).reshape(len(f.terms), f.m * f.n)


def trop_eval(f: LoopPolynomial, a) -> int:
    """Replace + by min and * by +; the constant 1 gives 0."""
    E = exponent_matrix(f)
    v = np.asarray(a, dtype=np.int64).reshape(-1)
    return int((E @ v).min())


def trop_eval_many(f: LoopPolynomial, assignments) -> np.ndarray:
    """Evaluate at a batch of assignments of shape (P, m, n)."""
    E = exponent_matrix(f)
    A = np.asarray(assignments, dtype=np.int64).reshape(len(assignments), -1)
    return (E @ A.T).min(axis=0)


# ---------------------------------------------------------------- ribbons


def _rim(lam):
    """Boxes (i, j) with (i+1, j+1) outside lam, ordered from the bottom-left box upward."""
    cells = []
    for i in range(len(lam) - 1, -1, -1):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        start = max(below - 1, 0)
        for j in range(start, lam[i]):
            cells.append((i, j))
    return cells


def remove_ribbon(lam: Sequence[int], n: int) -> Partition:
    """Remove the largest ribbon of at most n boxes containing the whole bottom row."""
    lam = Partition(lam)
    if not lam:
        raise RibbonRemovalFailure("nothing to remove from the empty partition")
    rim = _rim(lam)
    bottom = lam[-1]
    for h in range(min(n, len(rim)), bottom - 1, -1):
        if h == len(rim) or (rim[h][1] == rim[h - 1][1] and rim[h][0] == rim[h - 1][0] - 1):
            rows = list(lam)
            for (i, _) in rim[:h]:
                rows[i] -= 1
            return Partition(rows)
    raise RibbonRemovalFailure(f"no removable ribbon of at most {n} boxes in {tuple(lam)}")


@lru_cache(maxsize=None)
def lambda_shapes(s: int, n: int, m: int) -> tuple:
    """(n-s)^m followed by successive ribbon removals down to the empty partition."""
    if not 1 <= s <= n - 1:
        raise ValueError(f"need 1 <= s <= n-1, got s={s}, n={n}")
    shapes = [Partition((n - s,) * m)]
    while shapes[-1]:
        shapes.append(remove_ribbon(shapes[-1], n))
    return tuple(shapes)


# ---------------------------------------------------------------- formulas


@lru_cache(maxsize=None)
def _shape_matrices(s: int, n: int, m: int) -> tuple:
    """Exponent matrices of s^(0) over D_s(lambda(s, r)) for r = 0, 1, ..."""
    out = []
    for lam in lambda_shapes(s, n, m):
        if not lam:
            out.append(np.zeros((1, m * n), dtype=np.int64))
            continue
        D = build_cylindric_shape(lam, n, s)
        out.append(exponent_matrix(cylindric_loop_schur(D, 0, m, n)))
    return tuple(out)


def _trop_values(mats, a):
    v = np.asarray(a, dtype=np.int64).reshape(-1)
    return [int((E @ v).min()) for E in mats]


def _as_partition(parts):
    parts = list(parts)
    if any(x < y for x, y in zip(parts, parts[1:])) or any(x < 0 for x in parts):
        raise NotAPartition(f"differences {parts} are not a partition")
    return Partition(parts)


def conjectured_shape(p, s: int, n: int) -> Partition:
    """r-th part = trop s^(0)_{D_s(lambda(s,r-1))} - trop s^(0)_{D_s(lambda(s,r))}."""
    vals = _trop_values(_shape_matrices(s, n, len(p)), path_coordinates(p, n))
    return _as_partition(a - b for a, b in zip(vals, vals[1:]))


@lru_cache(maxsize=None)
def _tau_matrix(k: int, n: int, m: int):
    if k <= 0:
        return np.zeros((1, m * n), dtype=np.int64)
    return exponent_matrix(tau_poly(k, 0, m, n))


def theta(k: int, a, n: int) -> int:
    """Theta_k = trop(tau_k^(0)); zero for k <= 0."""
    m = len(a)
    return trop_eval_matrix(_tau_matrix(k, n, m), a)


def trop_eval_matrix(E: np.ndarray, a) -> int:
    return int((E @ np.asarray(a, dtype=np.int64).reshape(-1)).min())


def soliton_count_bound(n: int, m: int) -> int:
    return ceil((n - 1) * m / n)


def first_shape_theorem(p, n: int) -> Partition:
    """nu^(1)_r = Theta_{(n-1)m-(r-1)n} - Theta_{(n-1)m-rn}."""
    m = len(p)
    a = path_coordinates(p, n)
    top = (n - 1) * m
    R = soliton_count_bound(n, m)
    th = [theta(top - r * n, a, n) for r in range(R + 1)]
    return _as_partition(x - y for x, y in zip(th, th[1:]))


def energy_formula_trop(p, ell: int, n: int, bound: str = "ceil") -> int:
    """min over i of (i * ell + Theta_{(n-1)m-in}), Theta of a nonpositive index being 0.

    ``bound="ceil"`` lets i run up to ceil((n-1)m/n) so that the term with
    Theta_0 is always present; ``bound="floor"`` stops at floor((n-1)m/n).
    """
    m = len(p)
    a = path_coordinates(p, n)
    top = (n - 1) * m
    imax = ceil(top / n) if bound == "ceil" else top // n
    return min(i * ell + theta(top - i * n, a, n) for i in range(imax + 1))


def energy_formula_full(p, ell: int, n: int) -> int:
    """The unreduced form: min over 0 <= i <= (n-1)m of ceil(i/n) * ell + Theta_{(n-1)m-i}."""
    m = len(p)
    a = path_coordinates(p, n)
    top = (n - 1) * m
    return min(ceil(i / n) * ell + theta(top - i, a, n) for i in range(top + 1))


def convex_function_values(A: Sequence[int], xmax: int | None = None) -> list[int]:
    """A(x) = min_i ((n-i) x + A_i) for x = 0..xmax."""
    n = len(A) - 1
    xmax = A[-1] + 1 if xmax is None else xmax
    return [min((n - i) * x + A[i] for i in range(n + 1)) for x in range(xmax + 1)]


def partition_from_convex(A: Sequence[int]) -> tuple[Partition, Partition]:
    """Successive differences of A(x) and the conjugate (A_n - A_{n-1}, ..., A_1)."""
    A = [int(x) for x in A]
    if not A or A[0] != 0:
        raise ConvexityViolation("A_0 must be 0")
    if any(x < 0 for x in A):
        raise ConvexityViolation("values must be nonnegative")
    for i in range(1, len(A) - 1):
        if A[i - 1] + A[i + 1] < 2 * A[i]:
            raise ConvexityViolation(f"A_{i - 1} + A_{i + 1} < 2 A_{i}")
    vals = convex_function_values(A)
    delta = Partition(b - a for a, b in zip(vals, vals[1:]))
    conj = Partition(sorted((A[i] - A[i - 1] for i in range(1, len(A))), reverse=True))
    return delta, conj


def tropical_R(x: Sequence[int], y: Sequence[int]) -> tuple[list[int], list[int]]:
    """Tropicalization of the birational R-matrix on two beams (values by color)."""
    n = len(x)

    def tk(r):
        return min(
            sum(y[(r + t) % n] for t in range(1, s + 1)) + sum(x[(r + t) % n] for t in range(s + 1, n))
            for s in range(n)
        )

    k = [tk(i) for i in range(n)]
    new_x = [y[(i + 1) % n] + k[(i + 1) % n] - k[i] for i in range(n)]
    new_y = [x[(i - 1) % n] + k[(i - 1) % n] - k[i] for i in range(n)]
    return new_x, new_y


def trop_kappa1(x: Sequence[int], y: Sequence[int]) -> int:
    n = len(x)
    return min(
        sum(y[(1 + t) % n] for t in range(1, s + 1)) + sum(x[(1 + t) % n] for t in range(s + 1, n))
        for s in range(n)
    )
