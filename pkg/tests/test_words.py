import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from metabelian_gs.words import (
    Alphabet,
    compare,
    count_regular_words,
    enumerate_regular_words,
    is_regular,
    key,
    rword,
    sorted_tail,
)

from .conftest import regular_words

# z < y < x
Z, Y, X = 0, 1, 2


def test_compare_examples():
    assert compare((X, Y, Y), (X, Y)) == 1
    assert compare((X,), (Y,)) == 1
    assert compare((X, Y, Y), (X, Z, Y)) == 1
    assert compare((X, Y), (X, Y)) == 0


def test_sorted_tail():
    assert sorted_tail([Y, Z, Y]) == (Z, Y, Y)
    assert sorted_tail([]) == ()
    assert sorted_tail([X]) == (X,)
    assert sorted_tail(sorted_tail([Y, Z, Y])) == (Z, Y, Y)


def test_enumerate_small():
    # two generators y < x
    assert enumerate_regular_words(2, 1) == [(0,), (1,)]
    assert enumerate_regular_words(2, 2) == [(1, 0)]
    assert enumerate_regular_words(2, 3) == [(1, 0, 0), (1, 0, 1)]
    with pytest.raises(ValueError):
        enumerate_regular_words(2, 0)


def _brute(k, n):
    out = set()
    for t in itertools.product(range(k), repeat=n):
        if is_regular(t):
            out.add(t)
    return sorted(out, key=key)


@pytest.mark.parametrize("k,n", [(2, 2), (3, 3), (3, 4), (4, 4)])
def test_enumerate_matches_bruteforce(k, n):
    assert enumerate_regular_words(k, n) == _brute(k, n)
    assert count_regular_words(k, n) == len(_brute(k, n))


def test_rword_validation():
    assert rword(2, [1, 0]) == (2, 0, 1)
    with pytest.raises(ValueError):
        rword(0, [1])


def test_alphabet():
    A = Alphabet(("z", "y", "x"))
    assert A.rank("x") == 2
    assert A.format_word((2, 0, 1)) == "[x,z,y]"
    assert A.format_word((1,)) == "y"
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    with pytest.raises(ValueError):
        Alphabet(("a b",))
    with pytest.raises(ValueError):
        Alphabet(())
    with pytest.raises(KeyError):
        A.rank("w")


@given(regular_words(4), regular_words(4), regular_words(4))
def test_compare_total_order(u, v, w):
    assert compare(u, v) == -compare(v, u)
    assert (compare(u, v) == 0) == (u == v)
    if compare(u, v) <= 0 and compare(v, w) <= 0:
        assert compare(u, w) <= 0
