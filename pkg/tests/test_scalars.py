from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from metabelian_gs.scalars import QQ, Field, ModP, canonical, div, format_scalar


def test_rational_canonical_forms():
    assert QQ("4/6") == Fraction(2, 3)
    assert QQ("-6/3") == -2 and isinstance(QQ("-6/3"), int)
    assert QQ(0) == 0
    assert canonical(Fraction(8, 4)) == 2 and isinstance(canonical(Fraction(8, 4)), int)


def test_div_is_exact():
    assert div(1, 3) == Fraction(1, 3)
    assert div(6, 3) == 2 and isinstance(div(6, 3), int)
    with pytest.raises(ZeroDivisionError):
        div(1, 0)


def test_prime_field():
    F = Field(7)
    assert F.name == "GF(7)"
    assert F("1/2") * 2 == 1
    assert F(3) / F(5) * F(5) == F(3)
    assert F(-1) == 6
    with pytest.raises(ValueError):
        Field(9)
    with pytest.raises(ZeroDivisionError):
        F("1/7")


def test_malformed_rational():
    with pytest.raises(ValueError):
        QQ("1/x")


def test_mixing_fields_rejected():
    with pytest.raises(ValueError):
        ModP(1, 5) + ModP(1, 7)


def test_format():
    assert format_scalar(Fraction(-1, 3)) == "-1/3"
    assert format_scalar(4) == "4"
    assert format_scalar(ModP(-1, 5)) == "4"


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 50))
def test_gf_field_axioms(a, b, c):
    F = Field(13)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) * z == x * z + y * z
    assert x - x == 0
    if z:
        assert (x / z) * z == x


@given(st.fractions(), st.fractions())
def test_q_matches_fraction(a, b):
    assert QQ(a) + QQ(b) == a + b
    if b:
        assert div(QQ(a), QQ(b)) == a / b
