"""Shirshov completion, basis checks, reduced bases and a rank oracle.

``shirshov_complete`` keeps a growing list of monic relations and a queue
of compositions ordered by ``(|w|, w, kind, params, seq)``.  Compositions
are taken one length at a time; each batch is reduced against a frozen
snapshot (optionally on a process pool) and then, in queue order, against
the live basis.  Every nonzero remainder is made monic, cleaned of (1)-part
words that strictly contain its leading (0)-letter, and adjoined.
"""

from __future__ import annotations

import heapq
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field as dc_field
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from . import kernels
from .compositions import CompositionInstance, pair_compositions
from .poly import MPoly, mul
from .reduction import Reducer, as_reducer
from .scalars import QQ, Field, div
from .words import Alphabet, enumerate_regular_words, key

log = logging.getLogger(__name__)

COMPLETE = "complete"
DEGREE_CAPPED = "degree_capped"


@dataclass
class Presentation:
    """Generators (ascending), relations and coefficient field."""

    alphabet: Alphabet
    relations: list
    field: Field = QQ
    origins: list = dc_field(default_factory=list)

    def __post_init__(self):
        if not isinstance(self.alphabet, Alphabet):
            self.alphabet = Alphabet(tuple(self.alphabet))
        k = len(self.alphabet)
        rels, origins = [], []
        src = list(self.origins) + [None] * (len(self.relations) - len(self.origins))
        for r, o in zip(self.relations, src):
            for w in r.terms:
                if any(not 0 <= g < k for g in w):
                    raise ValueError(f"relation references unknown generator rank in {w}")
            r = r.convert(self.field)
            if r:
                rels.append(r)
                origins.append(o)
        self.relations = rels
        self.origins = origins

    @property
    def k(self) -> int:
        return len(self.alphabet)

    def is_monomial(self) -> bool:
        return all(len(r) == 1 and len(r.lead_word) > 1 for r in self.relations)


@dataclass
class CompletionResult:
    basis: list
    status: str
    degree_bound: int
    stats: dict
    events: list = dc_field(default_factory=list)
    origins: list = dc_field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def leading_words(self) -> list:
        return sorted((f.lead_word for f in self.basis), key=key)


# -- (0)-letter cleanup ----------------------------------------------------------


def preprocess_lemma41(f: MPoly) -> MPoly:
    """Remove from the (1)-part every word strictly containing the leading
    (0)-letter ``d``, by subtracting multiples of ``u . f`` (u = word with
    one ``d`` deleted).  Returns f unchanged when it has no (0)-part."""
    l0 = f.lead0()
    if l0 is None:
        return f
    d, beta = l0
    while True:
        hit = None
        for w in f.terms:
            if len(w) > 2 and (hit is None or key(w) > key(hit)):
                if kernels.strict_remove(w, d) is not None:
                    hit = w
        if hit is None:
            return f
        u = kernels.strict_remove(hit, d)
        f = f - mul(MPoly.word(u), f).scale(div(f.terms[hit], beta))


def _settle(g: MPoly, R: Reducer) -> MPoly:
    """Normal form, monic, (0)-letter cleanup, repeated until stable."""
    while True:
        g = R.normal_form(g)
        if not g:
            return g
        g = g.make_monic()
        h = preprocess_lemma41(g)
        if h == g:
            return g
        if not h:
            return h
        g = h.make_monic()


# -- completion --------------------------------------------------------------


def _nf_batch(args):
    polys, values = args
    R = Reducer(polys)
    return [R.normal_form(v) for v in values]


class _Queue:
    def __init__(self):
        self.heap: list = []
        self.seq = 0

    def push_all(self, items: Sequence[CompositionInstance]):
        for c in items:
            heapq.heappush(self.heap, (c.sort_key(), self.seq, c))
            self.seq += 1

    def min_len(self):
        return len(self.heap[0][2].w) if self.heap else None

    def pop_length(self, n: int) -> list:
        out = []
        while self.heap and len(self.heap[0][2].w) == n:
            out.append(heapq.heappop(self.heap)[2])
        return out


def shirshov_complete(P: Presentation, max_word_degree: Optional[int] = None,
                      max_passes: Optional[int] = None, *, workers: int = 1,
                      strict: bool = False) -> CompletionResult:
    """Complete ``P`` to a Groebner-Shirshov basis (or stop at the cap).

    ``max_word_degree`` bounds the length of the composition words ``w``
    that are examined (default ``2 * |X|``).  ``max_passes`` bounds the
    number of length batches.  The result does not depend on ``workers``.
    """
    if P.k == 0:
        raise ValueError("empty generator set")
    cap = 2 * P.k if max_word_degree is None else max_word_degree
    k = P.k
    R = Reducer()
    origins: list = []
    events: list = []
    stats = {"examined": 0, "nontrivial": 0, "adjoined": 0, "passes": 0, "input": 0}
    queue = _Queue()

    def adjoin(g: MPoly, origin):
        j = R.add(g)
        origins.append(origin)
        new = []
        for i in range(j + 1):
            new.extend(pair_compositions(i, j, R, k, strict=strict))
        queue.push_all(new)
        return j

    for r, o in zip(P.relations, P.origins):
        g = _settle(r, R)
        if g:
            adjoin(g, o or "input")
            stats["input"] += 1

    status = COMPLETE
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while queue.heap:
            n = queue.min_len()
            if n > cap or (max_passes is not None and stats["passes"] >= max_passes):
                status = DEGREE_CAPPED
                break
            batch = queue.pop_length(n)
            stats["passes"] += 1
            values = [c.value for c in batch]
            if pool is not None and len(batch) > 1:
                snap = list(R.polys)
                chunk = max(1, -(-len(values) // workers))
                parts = [values[i:i + chunk] for i in range(0, len(values), chunk)]
                reduced = []
                for part in pool.map(_nf_batch, [(snap, p) for p in parts]):
                    reduced.extend(part)
            else:
                reduced = [R.normal_form(v) for v in values]
            for c, v in zip(batch, reduced):
                stats["examined"] += 1
                g = _settle(v, R) if v else v
                ev = {
                    "kind": c.kind, "f": c.f, "g": c.g, "params": list(c.params),
                    "w": list(c.w), "trivial": not g, "adjoined": None,
                }
                if g:
                    stats["nontrivial"] += 1
                    stats["adjoined"] += 1
                    j = adjoin(g, f"C_{c.kind}({c.f},{c.g})")
                    ev["adjoined"] = list(g.lead_word)
                    ev["index"] = j
                events.append(ev)
    finally:
        if pool is not None:
            pool.shutdown()
    log.debug("completion %s: %s", status, stats)
    return CompletionResult(list(R.polys), status, cap, stats, events, origins)


# -- checks ------------------------------------------------------------------


def all_compositions(S, k: int, *, max_w_len: Optional[int] = None,
                     strict: bool = False) -> list:
    R = as_reducer(S)
    out = []
    for j in range(len(R)):
        for i in range(j + 1):
            out.extend(pair_compositions(i, j, R, k, strict=strict))
    if max_w_len is not None:
        out = [c for c in out if len(c.w) <= max_w_len]
    out.sort(key=CompositionInstance.sort_key)
    return out


def is_gs_basis(S, k: int, *, max_w_len: Optional[int] = None, strict: bool = False):
    """``(True, None)`` when every composition reduces to zero, otherwise
    ``(False, first nontrivial composition)`` in queue order."""
    R = as_reducer([f.make_monic() for f in S]) if not isinstance(S, Reducer) else S
    for c in all_compositions(R, k, max_w_len=max_w_len, strict=strict):
        if c.value and R.normal_form(c.value):
            return False, c
    return True, None


def _covered(g: MPoly, R: Reducer, skip: int) -> bool:
    """True when every normal word of ``g`` is also a normal word of some
    other relation of ``R`` (index ``skip`` excluded)."""
    G = g.lead_word
    others = [i for i in range(len(R)) if i != skip]
    polys = R.polys
    lead_ok = False
    if len(G) == 1:
        lead_ok = any(polys[i].lead_word == G for i in others)
    else:
        h, t = G[0], G[1:]
        for i in others:
            L = polys[i].lead_word
            if len(L) == 1 and L[0] == h:
                lead_ok = True
            elif len(L) > 1 and L[0] == h and kernels.is_subword_tail(t, L[1:]):
                lead_ok = True
            else:
                l0 = polys[i].lead0()
                if l0 is not None and kernels.strict_remove(G, l0[0]) is not None:
                    lead_ok = True
            if lead_ok:
                break
    if not lead_ok:
        return False
    l0 = g.lead0()
    if l0 is None:
        return True
    for i in others:
        m = polys[i].lead0()
        if m is not None and m[0] == l0[0]:
            return True
    return False


def reduce_basis(S) -> list:
    """Drop redundant relations, then normal-form the lower terms of each
    survivor against the others.  Sorted by leading word."""
    polys = [f.make_monic() for f in S]
    order = sorted(range(len(polys)), key=lambda i: (key(polys[i].lead_word), i), reverse=True)
    alive = list(range(len(polys)))
    for i in order:
        R = Reducer([polys[j] for j in alive])
        pos = alive.index(i)
        if _covered(polys[i], R, pos):
            alive.remove(i)
    kept = [polys[j] for j in alive]
    kept.sort(key=lambda f: key(f.lead_word))
    for idx in range(len(kept)):
        f = kept[idx]
        if len(f) == 1:
            continue
        lw, lc = f.leading()
        R = Reducer([kept[j] for j in range(len(kept)) if j != idx])
        rest = MPoly._wrap({w: c for w, c in f.terms.items() if w != lw})
        kept[idx] = MPoly.word(lw, lc) + R.normal_form(rest)
    return kept


def monomial_complete(P: Presentation) -> CompletionResult:
    """Completion for relations that are single R-word monomials.

    For two words with the same head and different second letters, the
    word ``max min <rest>`` is formed from the two second letters and the
    set of the remaining letters (head included); it is added unless an
    existing word with that head has a tail contained in its tail.
    """
    words = []
    for r in P.relations:
        if len(r) != 1 or len(r.lead_word) < 2:
            raise ValueError("monomial_complete needs single R-word relations")
        if r.lead_word not in words:
            words.append(r.lead_word)
    by_head: dict = {}
    for i, w in enumerate(words):
        by_head.setdefault(w[0], []).append(i)
    stats = {"examined": 0, "nontrivial": 0, "adjoined": 0, "passes": 0, "input": len(words)}
    events = []
    i = 0
    # each pair is visited once, when its later member comes up
    while i < len(words):
        b = words[i]
        stats["passes"] += 1
        for ai in list(by_head[b[0]]):
            a = words[ai]
            if ai >= i or a[1] == b[1]:
                continue
            stats["examined"] += 1
            hi, lo = max(a[1], b[1]), min(a[1], b[1])
            rest = tuple(sorted({b[0], *a[2:], *b[2:]}))
            h = (hi, lo) + rest
            ht = h[1:]
            hit = any(kernels.is_subword_tail(ht, words[j][1:]) for j in by_head.get(h[0], ()))
            events.append({"pair": [list(a), list(b)], "h": list(h), "adjoined": not hit})
            if not hit:
                stats["nontrivial"] += 1
                stats["adjoined"] += 1
                by_head.setdefault(h[0], []).append(len(words))
                words.append(h)
        i += 1
    basis = [MPoly.word(w).convert(P.field) for w in words]
    origins = list(P.origins) + ["algorithm1"] * (len(basis) - len(P.origins))
    return CompletionResult(basis, COMPLETE, 0, stats, events, origins[: len(basis)])


# -- rank oracle -------------------------------------------------------------


class OracleTooLarge(RuntimeError):
    pass


def _ideal_products(r: MPoly, k: int, max_len: int):
    """Left-normed products ``r x1 x2 ... xm`` spanning the ideal of ``r``
    up to word length ``max_len``.  ``r x1`` is already in the derived
    algebra, so the later letters commute and run over ascending
    multisets."""
    top = max(len(w) for w in r.terms)
    yield r
    for a in range(k):
        p1 = mul(r, MPoly.letter(a))
        if not p1:
            continue
        yield p1
        for m in range(1, max_len - top):
            for t in combinations_with_replacement(range(k), m):
                yield p1.mul_tail(t)


def oracle_quotient_dims(P: Presentation, S: Sequence[MPoly] = (), max_len: int = 4, *,
                         slack: Optional[int] = None, size_cap: int = 200_000) -> list:
    """Per-length dimensions of the quotient by brute-force linear algebra.

    Spans the ideal with left-normed products of every relation (of ``P``
    and of ``S``) up to length ``max_len + slack``, eliminates with the
    deg-lex leading word as pivot, and returns ``#words - #pivots`` for
    each length ``1..max_len``.  Inhomogeneous relations can need products
    longer than ``max_len`` whose top parts cancel, hence ``slack``: 0 by
    default for homogeneous relation sets and 8 otherwise.
    """
    k = P.k
    rels = [r for r in list(P.relations) + list(S) if r]
    if slack is None:
        homog = all(len({len(w) for w in r.terms}) == 1 for r in rels)
        slack = 0 if homog else 8
    top = max_len + slack
    pivots: dict = {}
    count = 0
    for r in rels:
        for v in _ideal_products(r, k, top):
            if not v or max(len(w) for w in v.terms) > top:
                continue
            count += 1
            if count > size_cap:
                raise OracleTooLarge(f"more than {size_cap} spanning vectors")
            terms = dict(v.terms)
            while terms:
                w = max(terms, key=key)
                c = terms[w]
                p = pivots.get(w)
                if p is None:
                    pivots[w] = {u: div(a, c) for u, a in terms.items()}
                    break
                for u, a in p.items():
                    x = terms.get(u, 0) - c * a
                    if x:
                        terms[u] = x
                    else:
                        terms.pop(u, None)
    piv_by_len = [0] * (top + 1)
    for w in pivots:
        piv_by_len[len(w)] += 1
    return [len(enumerate_regular_words(k, n)) - piv_by_len[n] for n in range(1, max_len + 1)]


# -- Proposition 4.2 ---------------------------------------------------------


def _shift(f: MPoly, s: int) -> MPoly:
    return MPoly._wrap({tuple(g + s for g in w): c for w, c in f.terms.items()})


def check_prop42(P1: Presentation, P2: Presentation, max_word_degree: Optional[int] = None) -> bool:
    """Complete two presentations separately and check that the union of
    the bases is a Groebner-Shirshov basis over the joined generators
    (generators of ``P1`` below those of ``P2``)."""
    for P in (P1, P2):
        if any(r.has_part0() for r in P.relations):
            raise ValueError("relations must lie in the derived subalgebra")
    B1 = shirshov_complete(P1, max_word_degree).basis
    B2 = shirshov_complete(P2, max_word_degree).basis
    s = P1.k
    union = list(B1) + [_shift(f, s) for f in B2]
    ok, _ = is_gs_basis(union, P1.k + P2.k)
    return ok
