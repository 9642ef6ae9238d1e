"""Normal S-words, reduction to normal form and S-irreducible words.

For a monic relation ``s`` the normal ``s``-words are

* ``s a1 a2 ... an`` with ascending letters and ``lead(s) != a1``
  (:class:`SWordI`), and
* ``u s`` with ``u`` an R-word, ``u != lead(s)`` and a nonzero (0)-part
  (:class:`SWordII`).

A word is reducible exactly when it is the leading word of some normal
S-word; :class:`Reducer` indexes a relation list so that the matching
normal word can be found without scanning every relation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import kernels
from .poly import MPoly
from .scalars import div
from .words import Word, enumerate_regular_words, key


@dataclass(frozen=True)
class SWordI:
    """``s . t1 . t2 ... tm`` with ``t`` ascending."""

    s: int
    tail: tuple = ()


@dataclass(frozen=True)
class SWordII:
    """``u . s`` with ``u`` an R-word."""

    u: tuple
    s: int


NormalSWord = Union[SWordI, SWordII]


def _neg_key(w: Word):
    return (-len(w), tuple(-x for x in w))


class Reducer:
    """Indexed snapshot of a list of monic relations.

    Relations may be appended with :meth:`add`; indices never change, so a
    reducer can be shared by a completion loop that only grows its basis.
    """

    def __init__(self, relations: Iterable[MPoly] = ()):
        self.polys: list = []
        self._rhead: dict = {}  # head -> [(index, tail)]
        self._letter: dict = {}  # leading letter -> first index
        self._zero: dict = {}  # leading (0)-letter -> first index
        self._lead0: list = []  # per relation: (0)-part terms or None
        self._cache: dict = {}
        for f in relations:
            self.add(f)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def add(self, f: MPoly) -> int:
        if not f:
            raise ValueError("cannot add the zero polynomial as a relation")
        lw, lc = f.leading()
        if lc != 1:
            raise ValueError("relations must be monic")
        i = len(self.polys)
        self.polys.append(f)
        if len(lw) > 1:
            self._rhead.setdefault(lw[0], []).append((i, lw[1:]))
        else:
            self._letter.setdefault(lw[0], i)
        p0 = [(w[0], c) for w, c in f.terms.items() if len(w) == 1]
        if p0:
            d = max(p0)[0]
            self._zero.setdefault(d, i)
            self._lead0.append((d, p0))
        else:
            self._lead0.append(None)
        return i

    # -- matching ----------------------------------------------------------

    def find(self, w: Word):
        """A normal S-word whose leading word is ``w``, or None.

        Relations are tried in index order and, for one relation, the
        ``s a1 ... an`` form before the ``u s`` form.
        """
        if len(w) == 1:
            i = self._letter.get(w[0])
            return None if i is None else SWordI(i, ())
        h = w[0]
        t = w[1:]
        best_i = None
        best = None
        for i, c in self._rhead.get(h, ()):
            d = kernels.tail_diff(t, c)
            if d is not None:
                best_i, best = i, SWordI(i, d)
                break
        i = self._letter.get(h)
        if i is not None and (best_i is None or i < best_i):
            best_i, best = i, SWordI(i, t)
        i = self._letter.get(t[0])
        if i is not None and (best_i is None or i < best_i):
            rest = t[1:]
            if not rest or rest[0] >= h:
                best_i, best = i, SWordI(i, (h,) + rest)
        if self._zero and len(t) >= 2:
            prev = None
            for d in t:
                if d == prev:
                    continue
                prev = d
                i = self._zero.get(d)
                if i is None or (best_i is not None and i >= best_i):
                    continue
                u = kernels.strict_remove(w, d)
                if u is not None and u != self.polys[i].lead_word:
                    best_i, best = i, SWordII(u, i)
        return best

    def is_irreducible(self, w: Word) -> bool:
        return self.find(w) is None

    # -- evaluation ----------------------------------------------------------

    def value(self, ns) -> MPoly:
        v = self._cache.get(ns)
        if v is not None:
            return v
        if isinstance(ns, SWordI):
            v = self.polys[ns.s].mul_tail(ns.tail)
        else:
            lz = self._lead0[ns.s]
            if lz is None:
                raise ValueError("u.s vanishes when s has no (0)-part")
            out: dict = {}
            for d, b in lz[1]:
                for x, sg in kernels.mul_word_tail(ns.u, (d,)):
                    y = out.get(x, 0) + (b if sg > 0 else -b)
                    if y:
                        out[x] = y
                    else:
                        out.pop(x, None)
            v = MPoly._wrap(out)
        if len(self._cache) > 200_000:
            self._cache.clear()
        self._cache[ns] = v
        return v

    def leading_of(self, ns) -> Word:
        """Closed-form leading word of a normal S-word (no expansion)."""
        check_normal(ns, self)
        s = self.polys[ns.s]
        sb = s.lead_word
        if isinstance(ns, SWordI):
            t = ns.tail
            if len(sb) > 1:
                return (sb[0],) + kernels.merge(sb[1:], t)
            c0 = sb[0]
            if not t:
                return sb
            if c0 > t[0]:
                return (c0,) + t
            return (t[0], c0) + t[1:]
        d = self._lead0[ns.s][0]
        return (ns.u[0],) + kernels.merge(ns.u[1:], (d,))

    # -- normal forms ----------------------------------------------------------

    def normal_form(self, f: MPoly, log: list | None = None) -> MPoly:
        """Fully reduce ``f``: the result is supported on S-irreducible words.

        When ``log`` is given, each step appends ``(coefficient, normal_word)``
        such that ``f - NF(f)`` equals the sum of coefficient times value.
        """
        terms = dict(f.terms)
        if not terms or not self.polys:
            return f
        heap = [(_neg_key(w), w) for w in terms]
        heapq.heapify(heap)
        result: dict = {}
        find = self.find
        value = self.value
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            _, w = pop(heap)
            c = terms.pop(w, 0)
            if not c:
                continue
            ns = find(w)
            if ns is None:
                result[w] = c
                continue
            val = value(ns)
            factor = div(c, val.terms[w])
            if log is not None:
                log.append((factor, ns))
            for u, a in val.terms.items():
                if u == w:
                    continue
                old = terms.get(u)
                if old is None:
                    terms[u] = -factor * a
                    push(heap, (_neg_key(u), u))
                else:
                    nv = old - factor * a
                    if nv:
                        terms[u] = nv
                    else:
                        del terms[u]
        return MPoly._wrap(result)

    def reduce_leading(self, f: MPoly) -> MPoly:
        """Reduce only while the leading word is reducible."""
        while f:
            w, c = f.leading()
            ns = self.find(w)
            if ns is None:
                return f
            val = self.value(ns)
            f = f - val.scale(div(c, val.terms[w]))
        return f


def as_reducer(S) -> Reducer:
    return S if isinstance(S, Reducer) else Reducer(S)


def check_normal(ns, S) -> None:
    """Raise ValueError unless ``ns`` satisfies the normal S-word conditions."""
    R = as_reducer(S)
    if not 0 <= ns.s < len(R):
        raise ValueError(f"relation index {ns.s} out of range")
    s = R.polys[ns.s]
    sb = s.lead_word
    if isinstance(ns, SWordI):
        t = ns.tail
        if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
            raise ValueError("tail of s a1 ... an must be ascending")
        if t and len(sb) == 1 and sb[0] == t[0]:
            raise ValueError("lead(s) equals the first tail letter")
        return
    u = ns.u
    if len(u) < 2 or not u[0] > u[1] or any(u[i] > u[i + 1] for i in range(1, len(u) - 1)):
        raise ValueError(f"{u} is not an R-word")
    if u == sb:
        raise ValueError("u equals lead(s)")
    if not s.has_part0():
        raise ValueError("u.s vanishes when s has no (0)-part")


def normal_sword_leading(ns, S) -> Word:
    return as_reducer(S).leading_of(ns)


def normal_sword_value(ns, S) -> MPoly:
    return as_reducer(S).value(ns)


def find_reducer(w: Word, S):
    return as_reducer(S).find(w)


def normal_form(f: MPoly, S, log: list | None = None) -> MPoly:
    return as_reducer(S).normal_form(f, log)


def is_irreducible(u: Word, S) -> bool:
    return as_reducer(S).find(u) is None


def irr_up_to(S, k: int, max_len: int):
    """S-irreducible words of length <= max_len over ``k`` generators.

    Returns ``(words, counts)`` where ``counts[l-1]`` is the number of
    irreducible words of length ``l``.
    """
    R = as_reducer(S)
    words = []
    counts = []
    for length in range(1, max_len + 1):
        row = [w for w in enumerate_regular_words(k, length) if R.find(w) is None]
        words.extend(row)
        counts.append(len(row))
    return words, counts


# -- rewriting arbitrary S-words into normal ones ----------------------------


def rewrite_sword(s: MPoly, factors: Sequence[Word]) -> list:
    """Write ``s . u1 . u2 ... un`` (left-normed) as a combination of normal
    ``s``-words.

    Normal words refer to ``s`` by index 0.  Returns a list of
    ``(coefficient, normal_word)`` with distinct normal words.
    """
    if not s or s.lead_coeff != 1:
        raise ValueError("s must be monic")
    rw = _Rewriter(s)
    acc = {SWordI(0, ()): 1}
    for u in factors:
        nxt: dict = {}
        for ns, c in acc.items():
            for ns2, c2 in rw.times_word(ns, u):
                v = nxt.get(ns2, 0) + c * c2
                if v:
                    nxt[ns2] = v
                else:
                    nxt.pop(ns2, None)
        acc = nxt
        if not acc:
            break
    return [(c, ns) for ns, c in sorted(acc.items(), key=lambda kv: _ns_sort_key(kv[0]))]


def _ns_sort_key(ns):
    if isinstance(ns, SWordI):
        return (0, ns.s, len(ns.tail), ns.tail)
    return (1, ns.s, len(ns.u), ns.u)


class _Rewriter:
    def __init__(self, s: MPoly):
        self.s = s
        self.sb = s.lead_word
        self.has0 = s.has_part0()
        self.lower = [(w, c) for w, c in s.terms.items() if w != self.sb]

    def s_tail(self, t: tuple):
        """``s . t`` for ascending ``t`` as normal words."""
        if not t or len(self.sb) > 1 or t[0] != self.sb[0]:
            return [(SWordI(0, t), 1)]
        # lead(s) = t1 is a letter: s.t1 = -sum c_v s.v over lower letters v
        out = []
        for v, c in self.lower:
            out.append((SWordI(0, (v[0],) + t[1:]), -c))
        return out

    def word_s(self, u: Word):
        """``u . s`` for a regular word ``u`` as normal words."""
        if len(u) == 1:
            # u.s = -(s.u)
            return [(ns, -c) for ns, c in self.s_tail(u)]
        if not self.has0:
            return []
        if u != self.sb:
            return [(SWordII(u, 0), 1)]
        # u = lead(s): u.s = (s - lower).s = -sum c_v v.s
        out = []
        for v, c in self.lower:
            for ns, c2 in self.word_s(v):
                out.append((ns, -c * c2))
        return out

    def times_word(self, ns, u: Word):
        if isinstance(ns, SWordI):
            t = ns.tail
            if len(u) > 1:
                if t:
                    return []  # product of two derived elements
                # s.u = -(u.s)
                return [(n2, -c) for n2, c in self.word_s(u)]
            a = u[0]
            if not t:
                return self.s_tail((a,))
            if a >= t[0]:
                return [(SWordI(0, kernels.merge(t, (a,))), 1)]
            # s t1 a t2..tn = s a t1 t2..tn - (t1 a t2 .. tn).s
            out = list(self.s_tail((a,) + t))
            v = (t[0], a) + t[1:]
            for n2, c in self.word_s(v):
                out.append((n2, -c))
            return out
        if len(u) > 1:
            return []
        # (v.s).a = (v.a).s
        out = []
        for x, sg in kernels.mul_word_tail(ns.u, u):
            for n2, c in self.word_s(x):
                out.append((n2, sg * c))
        return out
