"""Generators and regular words of the free metabelian Lie algebra.

A word is a tuple of generator ranks.  ``(g,)`` is a letter; a longer tuple
``(a0, a1, ..., an)`` is the left-normed R-word ``a0 a1 ... an`` and is only
valid when the tail is ascending and ``a0 > a1``.  Because the tail is kept
sorted, the deg-lex order on words coincides with comparing the sort key
``(len(w), w)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class Alphabet:
    """Finite ordered generator set; ``names[i]`` has rank ``i`` (ascending)."""

    names: tuple

    def __post_init__(self):
        if not self.names:
            raise ValueError("empty generator list")
        seen = set()
        for n in self.names:
            if not isinstance(n, str) or not _NAME_RE.match(n):
                raise ValueError(f"invalid generator name {n!r}")
            if n in seen:
                raise ValueError(f"duplicate generator {n!r}")
            seen.add(n)
        object.__setattr__(self, "_rank", {n: i for i, n in enumerate(self.names)})

    def __len__(self):
        return len(self.names)

    def rank(self, name: str) -> int:
        try:
            return self._rank[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._rank

    def format_word(self, w: Word) -> str:
        if len(w) == 1:
            return self.names[w[0]]
        return "[" + ",".join(self.names[g] for g in w) + "]"

    def spaced(self, w: Word) -> str:
        return " ".join(self.names[g] for g in w)


def key(w: Word):
    """Deg-lex sort key."""
    return (len(w), w)


def compare(u: Word, v: Word) -> int:
    """-1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    ku, kv = (len(u), u), (len(v), v)
    return (ku > kv) - (ku < kv)


def sorted_tail(ms: Iterable[int]) -> Word:
    return tuple(sorted(ms))


def is_regular(w: Word) -> bool:
    if not isinstance(w, tuple) or not w:
        return False
    if len(w) == 1:
        return True
    tail = w[1:]
    return w[0] > tail[0] and all(tail[i] <= tail[i + 1] for i in range(len(tail) - 1))


def letter(g: int) -> Word:
    return (g,)


def rword(head: int, tail: Sequence[int]) -> Word:
    """Build the R-word with the given head and tail multiset."""
    w = (head,) + tuple(sorted(tail))
    if len(w) < 2 or not w[0] > w[1]:
        raise ValueError(f"not a regular R-word: head {head}, tail {tuple(tail)}")
    return w


def is_letter(w: Word) -> bool:
    return len(w) == 1


def head(w: Word) -> int:
    return w[0]


def tail(w: Word) -> Word:
    return w[1:]


def enumerate_regular_words(k: int, length: int) -> list:
    """All regular words of exactly ``length`` over ranks ``0..k-1``, ascending."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if length == 1:
        return [(g,) for g in range(k)]
    out = []
    for h in range(k):
        for t in combinations_with_replacement(range(k), length - 1):
            if t[0] < h:
                out.append((h,) + t)
    out.sort()
    return out


def count_regular_words(k: int, length: int) -> int:
    return len(enumerate_regular_words(k, length))
