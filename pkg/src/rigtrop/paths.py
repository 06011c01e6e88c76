"""Path parsing, formatting, enumeration and seeded sampling.

Random paths use ``random.Random(seed)`` (Mersenne Twister, Python's
standard seeding of an int). Each path draws, factor by factor, a width
uniformly from 1..width_cap and then a content uniformly among the weakly
increasing words of that width over 1..n, listed in
``itertools.combinations_with_replacement`` order.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .errors import AlphabetError, NotWeaklyIncreasing, ParseError


@dataclass(frozen=True)
class PathSpec:
    n: int
    factors: tuple

    def __str__(self):
        return f"n={self.n}; {format_words(self.factors)}"


def format_words(factors) -> str:
    return ",".join("".join(str(x) for x in w) for w in factors)


_HEAD = re.compile(r"\s*n\s*=\s*(\d+)\s*;")


def parse_path(text: str) -> PathSpec:
    """Parse ``n=<int>; <word>,<word>,...`` where words are runs of digits."""
    head = _HEAD.match(text)
    if not head:
        raise ParseError("expected 'n=<int>;'", 0)
    n = int(head.group(1))
    if n < 2:
        raise ParseError("n must be at least 2", head.start(1))
    if n > 9:
        raise ParseError("letters are single digits, so n must be at most 9", head.start(1))
    body_start = head.end()
    body = text[body_start:]
    factors = []
    pos = body_start
    for chunk in body.split(","):
        word = chunk.strip()
        offset = pos + (len(chunk) - len(chunk.lstrip()))
        if not word:
            raise ParseError("empty word", offset)
        letters = []
        for k, ch in enumerate(word):
            if not ch.isdigit():
                raise ParseError(f"unexpected character {ch!r}", offset + k)
            x = int(ch)
            if not 1 <= x <= n:
                raise AlphabetError(f"letter {x} outside 1..{n}", offset + k)
            if letters and x < letters[-1]:
                raise NotWeaklyIncreasing(f"word {word!r} is not weakly increasing", offset + k)
            letters.append(x)
        factors.append(tuple(letters))
        pos += len(chunk) + 1
    return PathSpec(n, tuple(factors))


@lru_cache(maxsize=None)
def words(n: int, width: int) -> tuple:
    return tuple(combinations_with_replacement(range(1, n + 1), width))


def all_paths(n: int, m: int, width_cap: int):
    """Every path of exactly m factors with widths 1..width_cap."""
    for widths in product(range(1, width_cap + 1), repeat=m):
        yield from product(*(words(n, w) for w in widths))


def random_path(rng: random.Random, n: int, m: int, width_cap: int) -> tuple:
    out = []
    for _ in range(m):
        w = rng.randint(1, width_cap)
        out.append(rng.choice(words(n, w)))
    return tuple(out)


def random_paths(n: int, m: int, width_cap: int, samples: int, seed: int) -> list:
    rng = random.Random(seed)
    return [random_path(rng, n, m, width_cap) for _ in range(samples)]
