"""Exact coefficient fields: the rationals (default) and prime fields GF(p).

Rational coefficients are stored as ``int`` when integral and as
:class:`fractions.Fraction` otherwise; both compare and hash consistently,
so polynomial dictionaries never depend on which of the two a value uses.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) / self

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


def div(a, b):
    """Exact quotient ``a / b``; integral rationals come back as ``int``."""
    if isinstance(a, ModP) or isinstance(b, ModP):
        return a / b if isinstance(a, ModP) else ModP(a, b.p) / b
    if not b:
        raise ZeroDivisionError("division by zero")
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


def canonical(c):
    """Collapse an integral ``Fraction`` to ``int``; other values unchanged."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class Field:
    """Coefficient field selector: ``Field()`` is Q, ``Field(p)`` is GF(p)."""

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"GF({p}): {p} is not prime")
        self.p = p

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def __call__(self, x):
        """Convert an int, Fraction, ModP or rational literal into this field."""
        if isinstance(x, str):
            if not _RATIONAL_RE.match(x.strip()):
                raise ValueError(f"malformed rational {x!r}")
            x = Fraction(x.strip())
        if self.p is None:
            if isinstance(x, ModP):
                raise TypeError("GF(p) element used over Q")
            return canonical(Fraction(x))
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"GF({x.p}) element used over GF({self.p})")
            return x
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
        return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.p})" if self.p is not None else "Field()"


QQ = Field()


def format_scalar(c) -> str:
    if isinstance(c, ModP):
        return str(c.v)
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"
