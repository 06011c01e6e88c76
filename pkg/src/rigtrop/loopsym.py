"""Exact polynomials in colored variables x_j^(i) and loop symmetric functions.

A monomial is a dense exponent tuple of length ``m * n``; the variable
x_j^(i) (beam j in 1..m, color i mod n) sits at index ``(j - 1) * n + i % n``.
Coefficients are Python ints and point evaluation uses ``Fraction``.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .tableaux import CylindricShape, SkewShape, as_skew, conjugate, enumerate_cylindric_ssyt, enumerate_ssyt


class LoopPolynomial:
    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: dict | None = None):
        self.m, self.n = m, n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # construction
    @classmethod
    def one(cls, m, n):
        return cls(m, n, {(0,) * (m * n): 1})

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    @classmethod
    def var(cls, j, i, m, n):
        e = [0] * (m * n)
        e[index(j, i, n)] = 1
        return cls(m, n, {tuple(e): 1})

    @classmethod
    def from_monomials(cls, monomials: Iterable[Sequence[tuple[int, int]]], m, n):
        """Sum of monomials, each a list of (beam, color) pairs."""
        terms: dict = {}
        for mono in monomials:
            e = [0] * (m * n)
            for j, i in mono:
                e[index(j, i, n)] += 1
            key = tuple(e)
            terms[key] = terms.get(key, 0) + 1
        return cls(m, n, terms)

    # arithmetic
    def _check(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return LoopPolynomial(self.m, self.n, t)

    def __neg__(self):
        return LoopPolynomial(self.m, self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LoopPolynomial(self.m, self.n, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        t: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return LoopPolynomial(self.m, self.n, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LoopPolynomial):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LoopPolynomial(m={self.m}, n={self.n}, {to_text(self)})"

    # queries
    def monomials(self) -> list[tuple]:
        return sorted(self.terms, reverse=True)

    def monomial_set(self) -> set:
        return set(self.terms)

    def is_monomial_positive(self) -> bool:
        return all(v > 0 for v in self.terms.values())

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def evaluate(self, point) -> Fraction:
        """Evaluate at ``point[j-1][i]`` = value of x_j^(i)."""
        flat = [Fraction(point[j][i]) for j in range(self.m) for i in range(self.n)]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(flat, e):
                if k:
                    term *= v ** k
            total += term
        return total


def index(j: int, i: int, n: int) -> int:
    return (j - 1) * n + i % n


def variables_of(e: Sequence[int], n: int) -> list[tuple[int, int]]:
    """(beam, color) pairs of an exponent tuple, with multiplicity."""
    out = []
    for k, p in enumerate(e):
        out.extend([(k // n + 1, k % n)] * p)
    return out


def to_text(f: LoopPolynomial) -> str:
    """Canonical text ``c * x[j]^(i) * ...`` with terms in decreasing monomial order."""
    if not f.terms:
        return "0"
    parts = []
    for e in f.monomials():
        c = f.terms[e]
        factors = [f"x[{j}]^({i})" for j, i in variables_of(e, f.n)]
        if not factors:
            parts.append(str(c))
        else:
            parts.append(" * ".join([str(c)] + factors))
    return " + ".join(parts).replace("+ -", "- ")


# ------------------------------------------------------- loop symmetric functions


def elementary_e(k: int, r: int, m: int, n: int) -> LoopPolynomial:
    if k < 0 or k > m:
        return LoopPolynomial.zero(m, n)
    return LoopPolynomial.from_monomials(
        ([(j, r + t) for t, j in enumerate(idx)] for idx in combinations(range(1, m + 1), k)),
        m,
        n,
    )


def tableau_weight(cells, T, r: int) -> list[tuple[int, int]]:
    """(beam, color) of every box: x_{T(s)}^{(c(s) + r)} with content row - col."""
    values = [v for row in T for v in row]
    return [(v, i - j + r) for (i, j), v in zip(cells, values)]


def loop_schur(shape, r: int, m: int, n: int) -> LoopPolynomial:
    """Loop (skew) Schur function of a plain skew shape."""
    sh = as_skew(shape)
    cells = sh.cells()
    return LoopPolynomial.from_monomials(
        (tableau_weight(cells, T, r) for T in enumerate_ssyt(sh, m)), m, n
    )


def cylindric_loop_schur(D, r: int, m: int, n: int) -> LoopPolynomial:
    """Cylindric loop Schur function; a plain skew shape is treated without wrapping."""
    if not isinstance(D, CylindricShape):
        return loop_schur(D, r, m, n)
    if D.n != n:
        raise ValueError(f"shape lives on n={D.n}, not n={n}")
    return LoopPolynomial.from_monomials(
        (tableau_weight(D.cells, T, r) for T in enumerate_cylindric_ssyt(D, m)), m, n
    )


def _bounded_multisets(k, m, cap):
    """Weakly increasing sequences of length k over 1..m, each value at most ``cap`` times."""
    out = []

    def rec(start, left, seq, count):
        if left == 0:
            out.append(tuple(seq))
            return
        for v in range(start, m + 1):
            c = count + 1 if seq and seq[-1] == v else 1
            if c > cap:
                continue
            seq.append(v)
            rec(v, left - 1, seq, c)
            seq.pop()

    rec(1, k, [], 0)
    return out


def tau_monomials(k: int, a: int, m: int, n: int) -> list[list[tuple[int, int]]]:
    if k < 0 or k > (n - 1) * m:
        return []
    return [
        [(g, a - t) for t, g in enumerate(gamma)]
        for gamma in _bounded_multisets(k, m, n - 1)
    ]


def tau_poly(k: int, a: int, m: int, n: int) -> LoopPolynomial:
    """Sum over multisets {g_1 <= ... <= g_k} of 1..m with multiplicities <= n-1
    of x_{g_1}^(a) x_{g_2}^(a-1) ... x_{g_k}^(a-k+1)."""
    return LoopPolynomial.from_monomials(tau_monomials(k, a, m, n), m, n)


# ------------------------------------------------------- birational R-matrix


def kappa(r: int, x: Sequence, y: Sequence) -> Fraction:
    """kappa_r(x, y) for n-tuples indexed by color 0..n-1."""
    n = len(x)
    total = 0
    for s in range(n):
        term = 1
        for t in range(1, s + 1):
            term *= y[(r + t) % n]
        for t in range(s + 1, n):
            term *= x[(r + t) % n]
        total += term
    return total


def kappa_poly(r: int, n: int) -> LoopPolynomial:
    """kappa_r as a polynomial with x on beam 1 and y on beam 2."""
    return LoopPolynomial.from_monomials(
        (
            [(2, r + t) for t in range(1, s + 1)] + [(1, r + t) for t in range(s + 1, n)]
            for s in range(n)
        ),
        2,
        n,
    )


def birational_R_point(point, j: int):
    """Apply R to beams j, j+1 (1-based) of ``point[beam-1][color]``."""
    m = len(point)
    if not 1 <= j < m:
        raise IndexError(f"position {j} outside 1..{m - 1}")
    x = [Fraction(v) for v in point[j - 1]]
    y = [Fraction(v) for v in point[j]]
    n = len(x)
    k = [kappa(i, x, y) for i in range(n)]
    new_x = [y[(i + 1) % n] * k[(i + 1) % n] / k[i] for i in range(n)]
    new_y = [x[(i - 1) % n] * k[(i - 1) % n] / k[i] for i in range(n)]
    out = [list(map(Fraction, row)) for row in point]
    out[j - 1], out[j] = new_x, new_y
    return out


def random_point(m: int, n: int, rng: random.Random, hi: int = 10**6):
    return [[Fraction(rng.randint(1, hi)) for _ in range(n)] for _ in range(m)]


def invariance_check(f: LoopPolynomial, trials: int = 20, seed: int = 0) -> bool:
    """Randomized identity test for f(p) = f(R_j p) at exact rational points."""
    rng = random.Random(seed)
    for _ in range(trials):
        p = random_point(f.m, f.n, rng)
        v = f.evaluate(p)
        for j in range(1, f.m):
            if f.evaluate(birational_R_point(p, j)) != v:
                return False
    return True


# ------------------------------------------------------- highway paths


def network_sources_sinks(D: CylindricShape, r: int):
    """Source and sink labels S_i, R_i (mod n) for the columns of D."""
    n, s = D.n, D.s
    lam = conjugate(D.base.outer)
    mu = conjugate(D.base.inner)
    cols = n - s
    S = tuple((mu.part(i) - i + r) % n for i in range(cols))
    R = tuple((lam.part(i) - (i + 1) + r) % n for i in range(cols))
    return S, R


def highway_path(source: int, straight: Sequence[bool], n: int):
    """Walk the grid network from wire ``source`` through loops 1..m.

    At loop k the path either goes straight through the vertex, picking up
    the weight x_k^(w + k - 1), or turns onto the loop and leaves on wire
    w - 1. Returns (weight variables, edge set, sink label).
    """
    w = source % n
    weight, edges = [], {("wire", w, 1)}
    m = len(straight)
    for k, go in enumerate(straight, start=1):
        if go:
            weight.append((k, w + k - 1))
        else:
            edges.add(("loop", w, k))
            w = (w - 1) % n
        edges.add(("wire", w, k + 1))
    return weight, edges, (w + m - 1) % n


def noncrossing_families(n: int, m: int, D: CylindricShape, r: int):
    """Edge-disjoint families (p_1, ..., p_{n-s}) with p_i from S_i to R_i
    going straight through exactly as many vertices as column i has boxes."""
    S, R = network_sources_sinks(D, r)
    lengths = D.base.column_lengths(len(S))
    options = []
    for src, snk, ell in zip(S, R, lengths):
        paths = []
        for chosen in combinations(range(m), ell):
            straight = [k in chosen for k in range(m)]
            weight, edges, end = highway_path(src, straight, n)
            if end == snk:
                paths.append((weight, edges))
        options.append(paths)
    for family in product(*options):
        seen = set()
        ok = True
        for _, edges in family:
            if seen & edges:
                ok = False
                break
            seen |= edges
        if ok:
            yield [v for weight, _ in family for v in weight]


def noncrossing_generating_function(n: int, m: int, D: CylindricShape, r: int) -> LoopPolynomial:
    return LoopPolynomial.from_monomials(noncrossing_families(n, m, D, r), m, n)


# ------------------------------------------------------- cell transfer


def cell_transfer_positivity(n: int, m: int, N: int) -> bool:
    """Whether (tau_N)^2 - tau_{N-n} tau_{N+n} (color 0) has nonnegative coefficients."""
    t = tau_poly(N, 0, m, n)
    diff = t * t - tau_poly(N - n, 0, m, n) * tau_poly(N + n, 0, m, n)
    return diff.is_monomial_positive() or not diff.terms
