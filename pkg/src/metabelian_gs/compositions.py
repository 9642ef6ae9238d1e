"""The seven composition types between two monic relations.

Each composition is a concrete polynomial ``value`` in the ideal together
with a word ``w`` that bounds it strictly from above.  A relation set is a
Groebner-Shirshov basis when every composition reduces to zero.

Two rules drop compositions that are always trivial: the self-compositions
of type I, V and VI, and the type IV composition with ``a = a1`` when the
first relation has no (0)-part.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .poly import MPoly, linear_combination, mul
from .reduction import as_reducer
from .scalars import div
from .words import Word, key

KINDS = ("I", "II", "III", "IV", "V", "VI", "VII")
KIND_INDEX = {k: i for i, k in enumerate(KINDS)}


class CompositionError(ValueError):
    """A composition was requested whose side conditions do not hold."""


@dataclass(frozen=True)
class CompositionInstance:
    kind: str
    f: int
    g: int
    params: tuple
    w: Word
    value: MPoly = field(compare=False)

    def sort_key(self):
        return (len(self.w), self.w, KIND_INDEX[self.kind], self.params, self.f, self.g)

    def describe(self, alphabet=None) -> str:
        ws = alphabet.format_word(self.w) if alphabet else str(self.w)
        ps = ""
        if self.params:
            names = [alphabet.names[p] for p in self.params] if alphabet else list(self.params)
            ps = " params=" + ",".join(map(str, names))
        return f"C_{self.kind}({self.f},{self.g}) w={ws}{ps}"


def lcm_tail(a, b):
    return kernels.tail_lcm(tuple(a), tuple(b))


def quotient_tail(big, small):
    q = kernels.tail_diff(tuple(big), tuple(small))
    if q is None:
        raise ValueError(f"{tuple(small)} does not divide {tuple(big)}")
    return q


def _r_leading(f: MPoly) -> bool:
    return len(f.lead_word) > 1


def _word_times_poly(u: Word, g: MPoly) -> MPoly:
    return mul(MPoly.word(u), g)


def _check(cond: bool, msg: str):
    if not cond:
        raise CompositionError(msg)


def compose(kind: str, f: MPoly, g: MPoly, params: tuple = (), *, fi: int = 0, gi: int = 1,
            strict: bool = False) -> CompositionInstance:
    """Build the composition of the given kind for monic ``f`` and ``g``.

    ``params`` is ``(a,)`` for type IV, ``(a0, a1)`` for type VI and
    ``(a0,)`` for type VII, empty otherwise.  ``strict`` applies the extra
    condition that the tails in type I are not coprime.
    """
    _check(bool(f) and bool(g), "zero polynomial")
    _check(f.lead_coeff == 1 and g.lead_coeff == 1, "f and g must be monic")
    F = f.lead_word
    G = g.lead_word
    if kind == "I":
        _check(F[0] == G[0], "type I needs equal heads")
        A, B = F[1:], G[1:]
        L = kernels.tail_lcm(A, B)
        if strict:
            _check(L != kernels.merge(A, B), "type I (strict): tails are coprime")
        w = (F[0],) + L
        value = f.mul_tail(kernels.tail_diff(L, A)) - g.mul_tail(kernels.tail_diff(L, B))
    elif kind == "II":
        _check(_r_leading(f), "type II needs lead(f) in R")
        l0 = g.lead0()
        _check(l0 is not None, "type II needs g with a (0)-part")
        d, beta = l0
        u = kernels.strict_remove(F, d)
        _check(u is not None, "type II needs lead(g^(0)) strictly inside lead(f)")
        w = F
        value = f - _word_times_poly(u, g).divide(beta)
    elif kind == "III":
        _check(_r_leading(f), "type III needs lead(f) in R")
        _check(len(G) == 1 and G[0] == F[1], "type III needs lead(g) = a1 as a letter")
        _check(len(F) == 2 or F[0] <= F[2], "type III needs n = 1 or a0 <= a2")
        w = F
        value = f + g.mul_tail((F[0],) + F[2:])
    elif kind == "IV":
        _check(_r_leading(f), "type IV needs lead(f) in R")
        _check(g.has_part1(), "type IV needs g^(1) != 0")
        l0 = g.lead0()
        _check(l0 is not None and l0[0] == F[1], "type IV needs lead(g^(0)) = a1")
        _check(len(F) == 2 or F[0] <= F[2], "type IV needs n = 1 or a0 <= a2")
        (a,) = params
        _check(a < F[0], "type IV needs a < a0")
        beta = l0[1]
        w = (F[0],) + kernels.merge(F[1:], (a,))
        u = MPoly.word((F[0], a)).mul_tail(F[2:])
        value = f.mul_tail((a,)) - mul(u, g).divide(beta)
    elif kind == "V":
        _check(_r_leading(f), "type V needs lead(f) in R")
        _check(f.has_part0(), "type V needs f^(0) != 0")
        _check(g.has_part1(), "type V needs g^(1) != 0")
        l0 = g.lead0()
        _check(l0 is not None, "type V needs g^(0) != 0")
        b, beta = l0
        _check(b not in F[1:], "type V needs lead(g^(0)) outside the tail of lead(f)")
        w = (F[0],) + kernels.merge(F[1:], (b,))
        value = f.mul_tail((b,)) - _word_times_poly(F, g).divide(beta)
    elif kind == "VI":
        lf, lg = f.lead0(), g.lead0()
        _check(lf is not None and lg is not None and lf[0] == lg[0],
               "type VI needs equal leading (0)-letters")
        _check(f.has_part1(), "type VI needs f^(1) != 0")
        a0, a1 = params
        _check(a0 > a1, "type VI needs a0 > a1")
        a = lf[0]
        w = (a0,) + tuple(sorted((a1, a)))
        value = mul(MPoly.word((a0, a1)), f.divide(lf[1]) - g.divide(lg[1]))
    elif kind == "VII":
        _check(f.has_part1() and g.has_part1(), "type VII needs f^(1), g^(1) != 0")
        lf, lg = f.lead0(), g.lead0()
        _check(lf is not None and lg is not None and lf[0] > lg[0],
               "type VII needs lead(f^(0)) > lead(g^(0))")
        (a0,) = params
        a, alpha = lf
        b, beta = lg
        _check(a0 > a, "type VII needs a0 > lead(f^(0))")
        w = (a0, b, a)
        value = (_word_times_poly((a0, b), f).divide(alpha)
                 - _word_times_poly((a0, a), g).divide(beta))
    else:
        raise CompositionError(f"unknown composition kind {kind!r}")
    if value and not key(value.lead_word) < key(w):
        raise AssertionError(f"type {kind}: leading word {value.lead_word} not below w={w}")
    return CompositionInstance(kind, fi, gi, tuple(params), w, value)


def applicable(f: MPoly, g: MPoly, k: int, *, same: bool = False, strict: bool = False):
    """Yield ``(kind, params)`` for every composition of the ordered pair.

    ``k`` is the number of generators (parameters range over ``0..k-1``).
    ``same`` marks a relation paired with itself.
    """
    F = f.lead_word
    G = g.lead_word
    fR = len(F) > 1
    f1 = f.has_part1()
    g1 = g.has_part1()
    f0 = f.lead0()
    g0 = g.lead0()
    # I
    if not same and F[0] == G[0]:
        if not strict or kernels.tail_lcm(F[1:], G[1:]) != kernels.merge(F[1:], G[1:]):
            yield "I", ()
    if fR:
        # II
        if g0 is not None and kernels.strict_remove(F, g0[0]) is not None:
            yield "II", ()
        cond34 = len(F) == 2 or F[0] <= F[2]
        # III
        if cond34 and len(G) == 1 and G[0] == F[1]:
            yield "III", ()
        # IV
        if cond34 and g1 and g0 is not None and g0[0] == F[1]:
            for a in range(F[0]):
                if f0 is None and a == F[1]:
                    continue
                yield "IV", (a,)
        # V
        if not same and f0 is not None and g1 and g0 is not None and g0[0] not in F[1:]:
            yield "V", ()
    # VI
    if not same and f1 and f0 is not None and g0 is not None and f0[0] == g0[0]:
        for a0 in range(k):
            for a1 in range(a0):
                yield "VI", (a0, a1)
    # VII
    if f1 and g1 and f0 is not None and g0 is not None and f0[0] > g0[0]:
        for a0 in range(f0[0] + 1, k):
            yield "VII", (a0,)


def enumerate_compositions(fi: int, gi: int, S, k: int, *, strict: bool = False) -> list:
    """All compositions of the ordered pair ``(S[fi], S[gi])``.

    Provably trivial ones (self I/V/VI, type IV with ``a = a1`` and no
    (0)-part in f) are left out.  Sorted by kind then parameters.
    """
    R = as_reducer(S)
    f, g = R.polys[fi], R.polys[gi]
    out = [compose(kind, f, g, params, fi=fi, gi=gi, strict=strict)
           for kind, params in applicable(f, g, k, same=(fi == gi), strict=strict)]
    out.sort(key=lambda c: (KIND_INDEX[c.kind], c.params))
    return out


def pair_compositions(i: int, j: int, S, k: int, *, strict: bool = False) -> list:
    """Compositions of the unordered pair ``{i, j}`` (``i == j`` allowed).

    Type I and type VI are antisymmetric in the two relations; only the
    orientation whose first relation has the larger leading word is kept.
    """
    R = as_reducer(S)
    if i == j:
        return enumerate_compositions(i, i, R, k, strict=strict)
    a, b = R.polys[i], R.polys[j]
    if key(a.lead_word) < key(b.lead_word):
        i, j = j, i
        a, b = b, a
    fwd = enumerate_compositions(i, j, R, k, strict=strict)
    back = enumerate_compositions(j, i, R, k, strict=strict)
    both1 = a.has_part1() and b.has_part1()
    back = [c for c in back if c.kind != "I" and not (c.kind == "VI" and both1)]
    return fwd + back


def is_trivial(c: CompositionInstance, S) -> bool:
    """True when the composition value reduces to zero modulo S."""
    if not c.value:
        return True
    return not as_reducer(S).normal_form(c.value)
