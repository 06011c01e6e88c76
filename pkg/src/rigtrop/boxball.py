"""Box-ball dynamics.

A state is a sequence of letters in 1..n where 1 is an empty box. Paths are
tuples of weakly increasing words (one-row tableaux); a state of length L is
the path of L single-letter words.
"""
from __future__ import annotations

from typing import Sequence

from .crystals import combinatorial_R, energy_H, highest_weight_element
from .errors import NonConvergence


def ball_move_K(state: Sequence[int], a: int) -> list[int]:
    """Move every ball ``a`` once, leftmost first, to the nearest empty box on its right.

    The tail is extended with empty boxes when a ball runs off the end.
    """
    cells = list(state)
    moved = [False] * len(cells)
    i = 0
    while i < len(cells):
        if cells[i] == a and not moved[i]:
            j = i + 1
            while j < len(cells) and cells[j] != 1:
                j += 1
            if j == len(cells):
                cells.append(1)
                moved.append(False)
            cells[i], cells[j] = 1, a
            moved[j] = True
        i += 1
    return cells


def evolve_T1inf(state: Sequence[int], n: int | None = None) -> list[int]:
    """K_2 K_3 ... K_n: move the largest balls first."""
    if n is None:
        n = max(state, default=1)
    cells = list(state)
    for a in range(n, 1, -1):
        cells = ball_move_K(cells, a)
    return cells


def render(state: Sequence[int]) -> str:
    return "".join("." if x == 1 else str(x) for x in state)


def parse_state(text: str) -> list[int]:
    return [1 if ch == "." else int(ch) for ch in text]


def state_to_path(state: Sequence[int]) -> tuple:
    return tuple((x,) for x in state)


def path_to_state(p) -> list[int]:
    return [x for word in p for x in word]


def ball_count(p) -> int:
    return sum(1 for word in p for x in word if x != 1)


def evolve_Trs(p: Sequence, r: int, s: int, n: int):
    """Thread the carrier u^{r,s} through ``p`` from left to right.

    Returns the new path and the carriers u^(1), ..., u^(m+1).
    """
    u = highest_weight_element(r, s, n)
    carriers = [u]
    out = []
    for b in p:
        b_new, u = combinatorial_R(u, b)
        out.append(b_new)
        carriers.append(u)
    return tuple(out), carriers


def energy_Ers(p: Sequence, r: int, s: int, n: int) -> int:
    _, carriers = evolve_Trs(p, r, s, n)
    return sum(energy_H(u, b) for u, b in zip(carriers, p))


def pad(p: Sequence, k: int) -> tuple:
    return tuple(p) + ((1,),) * k


def _chunks(cells):
    """Maximal weakly decreasing runs of balls; an ascent or an empty box separates two runs."""
    out, cur = [], []
    for x in cells:
        if x == 1 or (cur and x > cur[-1]):
            if cur:
                out.append(tuple(cur))
            cur = [] if x == 1 else [x]
        else:
            cur.append(x)
    if cur:
        out.append(tuple(cur))
    return out


def asymptotic_solitons(p: Sequence, n: int, max_steps: int | None = None) -> list[tuple]:
    """Evolve by T^{1,l} (l = number of balls) until the solitons separate.

    The path is padded by empty single boxes as needed. Stops once every ball
    sits in the single-box tail, the solitons (weakly decreasing runs of balls) weakly increase in length
    from left to right, and they did not change during the last step.
    """
    ell = ball_count(p)
    if ell == 0:
        return []
    m = len(p)
    size = sum(len(b) for b in p)
    bound = max_steps if max_steps is not None else max(size * ell, 1) + m + ell
    p = pad(p, size + ell)
    prev = None
    for _ in range(bound + 1):
        p, _carriers = evolve_Trs(p, 1, ell, n)
        tail = path_to_state(p[m:])
        # keep at least l empty boxes beyond the last ball
        last = max((k for k, x in enumerate(tail) if x != 1), default=-1)
        extra = ell + 1 - (len(tail) - 1 - last)
        if extra > 0:
            p = pad(p, extra)
        if any(x != 1 for b in p[:m] for x in b):
            prev = None
            continue
        chunks = _chunks(path_to_state(p[m:]))
        lengths = [len(c) for c in chunks]
        if chunks == prev and lengths == sorted(lengths):
            return chunks
        prev = chunks
    raise NonConvergence(f"solitons did not separate within {bound} steps")
