"""Both kernel backends against each other and against a direct
implementation of the single-letter multiplication table."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from metabelian_gs import _pykernels, kernels

try:
    from metabelian_gs import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])
ids = [m.__name__.rsplit(".", 1)[-1] for m in BACKENDS]

K = 5
tails = st.lists(st.integers(0, K - 1), max_size=5).map(lambda t: tuple(sorted(t)))


@st.composite
def words(draw):
    n = draw(st.integers(1, 6))
    if n == 1:
        return (draw(st.integers(0, K - 1)),)
    t = tuple(sorted(draw(st.lists(st.integers(0, K - 2), min_size=n - 1, max_size=n - 1))))
    h = draw(st.integers(t[0] + 1, K - 1))
    return (h,) + t


def table(w, b):
    """One letter: the multiplication table written out directly."""
    if len(w) == 1:
        a = w[0]
        return {} if a == b else ({(a, b): 1} if a > b else {(b, a): -1})
    a0, a1, rest = w[0], w[1], list(w[2:])
    if b >= a1:
        return {(a0,) + tuple(sorted([a1] + rest + [b])): 1}
    out = {(a0,) + tuple(sorted([b, a1] + rest)): 1}
    v = (a1,) + tuple(sorted([b, a0] + rest))
    out[v] = out.get(v, 0) - 1
    return {k: c for k, c in out.items() if c}


def fold(w, t):
    cur = {w: 1}
    for b in t:
        nxt = {}
        for u, c in cur.items():
            for v, s in table(u, b).items():
                nxt[v] = nxt.get(v, 0) + c * s
        cur = {k: c for k, c in nxt.items() if c}
    return cur


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
@given(w=words(), t=tails)
def test_mul_word_tail_matches_table(mod, w, t):
    got = {}
    for u, s in mod.mul_word_tail(w, t):
        got[u] = got.get(u, 0) + s
    assert {k: c for k, c in got.items() if c} == fold(w, t)
    assert len(mod.mul_word_tail(w, t)) <= 2


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
@given(a=tails, b=tails)
def test_multiset_ops(mod, a, b):
    assert mod.merge(a, b) == tuple(sorted(a + b))
    L = mod.tail_lcm(a, b)
    for x in set(a) | set(b):
        assert L.count(x) == max(a.count(x), b.count(x))
    assert mod.is_subword_tail(L, a) and mod.is_subword_tail(L, b)
    d = mod.tail_diff(L, a)
    assert mod.merge(d, a) == L
    contained = all(a.count(x) <= b.count(x) for x in set(a))
    assert mod.is_subword_tail(b, a) == contained
    assert (mod.tail_diff(b, a) is not None) == contained


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
@given(w=words(), d=st.integers(0, K - 1))
def test_strict_remove(mod, w, d):
    r = mod.strict_remove(w, d)
    if len(w) < 3 or d not in w[1:]:
        assert r is None
        return
    i = w.index(d, 1)
    cand = w[:i] + w[i + 1:]
    assert r == (cand if cand[0] > cand[1] else None)


@pytest.mark.skipif(_ckernels is None, reason="extension not built")
@given(w=words(), t=tails)
def test_backends_agree(w, t):
    assert _ckernels.mul_word_tail(w, t) == _pykernels.mul_word_tail(w, t)
    assert _ckernels.tail_lcm(w[1:], t) == _pykernels.tail_lcm(w[1:], t)
    assert _ckernels.tail_diff(t, w[1:]) == _pykernels.tail_diff(t, w[1:])


def test_backend_selected():
    assert kernels.BACKEND in ("python", "cython")
    if _ckernels is not None:
        assert kernels.BACKEND == "cython"


def test_pure_env_forces_python(monkeypatch):
    import importlib

    monkeypatch.setenv("METABELIAN_GS_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("METABELIAN_GS_PURE")
        importlib.reload(kernels)
