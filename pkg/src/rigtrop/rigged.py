"""Rigged configurations and the bijection with one-row paths.

A rigged configuration stores ``nu0`` (the factor widths) and, for each
``a = 1..n-1``, a multiset of strings ``(length, rigging)``. Strings are kept
sorted so that equality of configurations is multiset equality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidRiggedConfiguration
from .tableaux import Partition


def Q(k: int, parts: Iterable[int]) -> int:
    """Number of boxes in the first k columns."""
    return sum(min(k, p) for p in parts)


def _canon(strings) -> tuple:
    return tuple(sorted(((int(l), int(j)) for l, j in strings), key=lambda t: (-t[0], -t[1])))


@dataclass(frozen=True)
class RiggedConfiguration:
    n: int
    nu0: Partition
    strings: tuple  # strings[a-1] holds the strings of nu^(a)

    def __post_init__(self):
        object.__setattr__(self, "nu0", Partition(sorted(self.nu0, reverse=True)))
        strings = tuple(_canon(s) for s in self.strings)
        if len(strings) < self.n - 1:
            strings = strings + ((),) * (self.n - 1 - len(strings))
        if len(strings) != self.n - 1:
            raise InvalidRiggedConfiguration(f"expected {self.n - 1} levels, got {len(strings)}")
        if any(l < 1 for level in strings for l, _ in level):
            raise InvalidRiggedConfiguration("string lengths must be positive")
        object.__setattr__(self, "strings", strings)

    @classmethod
    def empty(cls, n: int) -> "RiggedConfiguration":
        return cls(n, Partition(), ())

    def nu(self, a: int) -> Partition:
        if a == 0:
            return self.nu0
        if a >= self.n:
            return Partition()
        return Partition(sorted((l for l, _ in self.strings[a - 1]), reverse=True))

    def level(self, a: int) -> tuple:
        return self.strings[a - 1]

    def vacancy(self, a: int, k: int) -> int:
        return vacancy(self, a, k)

    def is_valid(self) -> bool:
        return all(
            j <= self.vacancy(a, l)
            for a in range(1, self.n)
            for l, j in self.level(a)
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "nu0": list(self.nu0),
            "strings": {
                str(a): [list(s) for s in self.level(a)] for a in range(1, self.n)
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "RiggedConfiguration":
        n = int(d["n"])
        levels = [[] for _ in range(n - 1)]
        for key, strings in d.get("strings", {}).items():
            a = int(key)
            if not 1 <= a <= n - 1:
                raise InvalidRiggedConfiguration(f"level {a} outside 1..{n - 1}")
            levels[a - 1] = [tuple(s) for s in strings]
        return cls(n, Partition(sorted(d.get("nu0", []), reverse=True)), tuple(levels))

    @classmethod
    def from_json(cls, text: str) -> "RiggedConfiguration":
        return cls.from_dict(json.loads(text))


def vacancy(rc: RiggedConfiguration, a: int, k: int) -> int:
    return Q(k, rc.nu(a - 1)) - 2 * Q(k, rc.nu(a)) + Q(k, rc.nu(a + 1))


def is_highest_weight(rc: RiggedConfiguration) -> bool:
    return all(
        0 <= j <= rc.vacancy(a, l) for a in range(1, rc.n) for l, j in rc.level(a)
    )


# ------------------------------------------------------------ working state


class _State:
    """Mutable configuration used while running the bijection."""

    def __init__(self, n, rows=(), levels=None):
        self.n = n
        self.rows = list(rows)  # nu0, one row per factor, in path order
        self.levels = [[list(s) for s in lv] for lv in (levels or [[] for _ in range(n - 1)])]

    def lengths(self, a):
        if a == 0:
            return self.rows
        if a >= self.n:
            return []
        return [l for l, _ in self.levels[a - 1]]

    def vac(self, a, k):
        return Q(k, self.lengths(a - 1)) - 2 * Q(k, self.lengths(a)) + Q(k, self.lengths(a + 1))

    def singular(self, a, split=None):
        """Indices of singular strings of nu^(a).

        With ``split = k``, vacancy numbers are taken as if the nu0 row of
        length k were cut into rows k-1 and 1.
        """
        out = []
        for i, (l, j) in enumerate(self.levels[a - 1]):
            v = self.vac(a, l)
            if split is not None and a == 1 and l < split:
                v += 1
            if j == v:
                out.append(i)
        return out

    def freeze(self):
        levels = tuple(tuple(tuple(s) for s in lv) for lv in self.levels)
        return RiggedConfiguration(self.n, Partition(sorted(self.rows, reverse=True)), levels)

    def _reset_riggings(self, chosen):
        """Give the chosen strings their new vacancy number as rigging."""
        for a, i in chosen:
            s = self.levels[a - 1][i]
            s[1] = self.vac(a, s[0])

    def add_letter(self, c):
        """One step of the forward algorithm: the current factor gains letter c."""
        picks = []  # (a, index or None)
        bound = None
        for a in range(c - 1, 0, -1):
            best, best_len = None, 0
            for i in self.singular(a):
                l = self.levels[a - 1][i][0]
                if (bound is None or l <= bound) and l > best_len:
                    best, best_len = i, l
            picks.append((a, best))
            bound = best_len
        self.rows[-1] += 1
        chosen = []
        for a, i in picks:
            if i is None:
                self.levels[a - 1].append([1, 0])
                i = len(self.levels[a - 1]) - 1
            else:
                self.levels[a - 1][i][0] += 1
            chosen.append((a, i))
        self._reset_riggings(chosen)

    def remove_letter(self, row):
        """One step of the inverse algorithm; returns the removed letter."""
        picks = []
        bound = 1
        c = self.n
        for a in range(1, self.n):
            best, best_len = None, None
            for i in self.singular(a, split=self.rows[row]):
                l = self.levels[a - 1][i][0]
                if l >= bound and (best_len is None or l < best_len):
                    best, best_len = i, l
            if best is None:
                c = a
                break
            picks.append((a, best))
            bound = best_len
        if self.rows[row] < 1:
            raise InvalidRiggedConfiguration("nu0 row exhausted")
        self.rows[row] -= 1
        chosen = []
        for a, i in picks:
            self.levels[a - 1][i][0] -= 1
            if self.levels[a - 1][i][0] > 0:
                chosen.append((a, i))
        self._reset_riggings(chosen)
        for lv in self.levels:
            lv[:] = [s for s in lv if s[0] > 0]
        return c


def phi_trace(p: Sequence[Sequence[int]], n: int) -> list[RiggedConfiguration]:
    """Configurations after every single letter, starting from the empty one."""
    st = _State(n)
    out = [st.freeze()]
    for word in p:
        st.rows.append(0)
        for c in sorted(word, reverse=True):
            if not 1 <= c <= n:
                raise ValueError(f"letter {c} outside 1..{n}")
            st.add_letter(c)
            out.append(st.freeze())
    return out


def phi(p: Sequence[Sequence[int]], n: int) -> RiggedConfiguration:
    """The bijection from one-row paths to rigged configurations."""
    return phi_trace(p, n)[-1]


def phi_inverse(rc: RiggedConfiguration, shape_order: Sequence[int] | None = None) -> tuple:
    """Recover the path; ``shape_order`` lists the factor widths from left to right.

    Defaults to ``rc.nu0`` in decreasing order.
    """
    n = rc.n
    order = list(rc.nu0) if shape_order is None else [int(x) for x in shape_order]
    if sorted(order, reverse=True) != list(rc.nu0):
        raise InvalidRiggedConfiguration(f"shape order {order} does not match nu0 {tuple(rc.nu0)}")
    if not rc.is_valid():
        raise InvalidRiggedConfiguration("a rigging exceeds its vacancy number")
    st = _State(n, order, [list(lv) for lv in rc.strings])
    words = []
    for k in range(len(order) - 1, -1, -1):
        letters = [st.remove_letter(k) for _ in range(order[k])]
        if any(x > y for x, y in zip(letters, letters[1:])):
            raise InvalidRiggedConfiguration("removed letters are not weakly increasing")
        words.append(tuple(letters))
        st.rows.pop()
    if any(st.levels):
        raise InvalidRiggedConfiguration("strings left over after removing every letter")
    return tuple(reversed(words))


# ------------------------------------------------------ crystal operators


def rc_kashiwara(op: str, a: int, rc: RiggedConfiguration):
    """Classical e_a / f_a on rigged configurations; None is the crystal zero."""
    if not 1 <= a <= rc.n - 1:
        raise ValueError(f"index a={a} outside 1..{rc.n - 1}")
    level = list(rc.level(a))
    x = min([j for _, j in level] + [0])
    if op == "f":
        ell = max([l for l, j in level if j == x] + ([0] if x == 0 else []))
        new_len, new_rig = ell + 1, x - 1
    elif op == "e":
        if x >= 0:
            return None
        ell = min(l for l, j in level if j == x)
        new_len, new_rig = ell - 1, x + 1
    else:
        raise ValueError(f"unknown operator {op!r}")
    # coriggings of all strings before the change
    cor = {
        b: [(l, rc.vacancy(b, l) - j) for l, j in rc.level(b)] for b in range(1, rc.n)
    }
    if ell > 0:
        cor[a].remove((ell, rc.vacancy(a, ell) - x))
    lengths = {b: [l for l, _ in cor[b]] for b in cor}
    if new_len > 0:
        lengths[a] = lengths[a] + [new_len]

    def vac(b, k):
        lo = rc.nu0 if b == 1 else lengths.get(b - 1, [])
        return Q(k, lo) - 2 * Q(k, lengths.get(b, [])) + Q(k, lengths.get(b + 1, []))

    levels = []
    for b in range(1, rc.n):
        lv = [(l, vac(b, l) - c) for l, c in cor[b]]
        if b == a and new_len > 0:
            if op == "f" and new_rig > vac(a, new_len):
                return None
            lv.append((new_len, new_rig))
        levels.append(lv)
    return RiggedConfiguration(rc.n, rc.nu0, tuple(levels))
