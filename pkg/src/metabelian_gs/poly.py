"""Polynomials of the free metabelian Lie algebra and their product.

The multiplication table on regular words:

* ``u . v = 0`` when both are R-words,
* ``a0 a1 ... an . b = a0 <a1 ... an b>`` when ``b >= a1``,
* ``a0 a1 ... an . b = a0 b a1 ... an - a1 b <a0 a2 ... an>`` when ``b < a1``,

extended by anticommutativity to letter-times-word and letter-times-letter.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import kernels
from .scalars import canonical, div, format_scalar
from .words import Alphabet, Word, key


class MPoly:
    """Finite linear combination of regular words; immutable.

    ``terms`` maps word tuples to nonzero coefficients.
    """

    __slots__ = ("terms", "_lead")

    def __init__(self, terms=None):
        if terms:
            self.terms = {w: c for w, c in terms.items() if c}
        else:
            self.terms = {}
        self._lead = None

    @classmethod
    def _wrap(cls, terms: dict) -> "MPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p.terms = terms
        p._lead = None
        return p

    @classmethod
    def word(cls, w: Word, c=1) -> "MPoly":
        return cls({w: c})

    @classmethod
    def letter(cls, g: int, c=1) -> "MPoly":
        return cls({(g,): c})

    # -- structure -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        """Words in descending deg-lex order."""
        return sorted(self.terms, key=key, reverse=True)

    def leading(self):
        """``(word, coefficient)`` of the deg-lex largest word."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        if self._lead is None:
            self._lead = max(self.terms, key=key)
        return self._lead, self.terms[self._lead]

    @property
    def lead_word(self) -> Word:
        return self.leading()[0]

    @property
    def lead_coeff(self):
        return self.leading()[1]

    def part1(self) -> "MPoly":
        return MPoly._wrap({w: c for w, c in self.terms.items() if len(w) > 1})

    def part0(self) -> "MPoly":
        return MPoly._wrap({w: c for w, c in self.terms.items() if len(w) == 1})

    def parts(self):
        return self.part1(), self.part0()

    def has_part0(self) -> bool:
        return any(len(w) == 1 for w in self.terms)

    def has_part1(self) -> bool:
        return any(len(w) > 1 for w in self.terms)

    def lead0(self):
        """Leading letter of the (0)-part and its coefficient, or None."""
        best = None
        for w in self.terms:
            if len(w) == 1 and (best is None or w > best):
                best = w
        if best is None:
            return None
        return best[0], self.terms[best]

    def lead1(self):
        best = None
        for w in self.terms:
            if len(w) > 1 and (best is None or key(w) > key(best)):
                best = w
        if best is None:
            return None
        return best, self.terms[best]

    # -- linear structure ------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = t.get(w, 0) + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return MPoly._wrap(t)

    def __sub__(self, other: "MPoly") -> "MPoly":
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = t.get(w, 0) - c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return MPoly._wrap(t)

    def __neg__(self) -> "MPoly":
        return MPoly._wrap({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "MPoly":
        if not c:
            return MPoly()
        return MPoly._wrap({w: canonical(c * a) for w, a in self.terms.items()})

    def __rmul__(self, c) -> "MPoly":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return mul(self, other)
        return self.scale(other)

    def divide(self, c) -> "MPoly":
        return MPoly._wrap({w: div(a, c) for w, a in self.terms.items()})

    def convert(self, field) -> "MPoly":
        return MPoly({w: field(c) for w, c in self.terms.items()})

    def mul_tail(self, t: Sequence[int]) -> "MPoly":
        """``self . t1 . t2 ... tm`` for an ascending letter tuple ``t``."""
        t = tuple(t)
        if not t:
            return self
        out: dict = {}
        mwt = kernels.mul_word_tail
        for w, c in self.terms.items():
            for u, s in mwt(w, t):
                v = out.get(u, 0) + (c if s > 0 else -c)
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
        return MPoly._wrap(out)

    # -- normalisation ----------------------------------------------------

    def make_monic(self) -> "MPoly":
        return self.divide(self.lead_coeff)

    def make_1_monic(self) -> "MPoly":
        l1 = self.lead1()
        if l1 is None:
            raise ValueError("(1)-part is zero")
        return self.divide(l1[1])

    def make_0_monic(self) -> "MPoly":
        l0 = self.lead0()
        if l0 is None:
            raise ValueError("(0)-part is zero")
        return self.divide(l0[1])

    # -- comparison / display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items_desc(self):
        return [(w, self.terms[w]) for w in self.support()]

    def format(self, alphabet: Alphabet | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self.items_desc()):
            ws = alphabet.format_word(w) if alphabet else _raw_word(w)
            cs = format_scalar(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            body = ws if mag == "1" else f"{mag}*{ws}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MPoly({self.format()})"


def _raw_word(w: Word) -> str:
    if len(w) == 1:
        return str(w[0])
    return "[" + ",".join(map(str, w)) + "]"


ZERO = MPoly()


def word_product(u: Word, v: Word):
    """Product of two regular words as a list of ``(word, sign)`` pairs."""
    if len(v) == 1:
        return kernels.mul_word_tail(u, v)
    if len(u) == 1:
        return [(w, -s) for w, s in kernels.mul_word_tail(v, u)]
    return []


def mul_gen_gen(a: int, b: int) -> MPoly:
    return MPoly({w: s for w, s in kernels.mul_word_tail((a,), (b,))})


def mul_rword_gen(u: Word, b: int) -> MPoly:
    if len(u) < 2:
        raise ValueError("mul_rword_gen expects an R-word; use mul_gen_gen for letters")
    return MPoly({w: s for w, s in kernels.mul_word_tail(u, (b,))})


def mul(f: MPoly, g: MPoly) -> MPoly:
    """Bilinear Lie product in the free metabelian Lie algebra."""
    out: dict = {}
    for u, a in f.terms.items():
        lu = len(u)
        for v, b in g.terms.items():
            if lu > 1 and len(v) > 1:
                continue
            ab = a * b
            for w, s in word_product(u, v):
                x = out.get(w, 0) + (ab if s > 0 else -ab)
                if x:
                    out[w] = x
                else:
                    out.pop(w, None)
    return MPoly._wrap(out)


def bracket_left_normed(gs: Sequence[int]) -> MPoly:
    """``[g1, g2, ..., gm] = ((g1 g2) g3) ... gm``."""
    if not gs:
        raise ValueError("empty bracket")
    acc = MPoly.letter(gs[0])
    for g in gs[1:]:
        acc = mul(acc, MPoly.letter(g))
    return acc


def linear_combination(pairs: Iterable) -> MPoly:
    """Sum of ``coefficient * polynomial`` pairs."""
    out: dict = {}
    for c, p in pairs:
        for w, a in p.terms.items():
            x = out.get(w, 0) + c * a
            if x:
                out[w] = x
            else:
                out.pop(w, None)
    return MPoly._wrap(out)
