"""Presentations from graphs (circuits, trees, cubes) and from structure
constants, plus the expected answers used by the verification commands.

Graph text format: one ``u: v w ...`` line per vertex; the line order is
the vertex (generator) order, ascending.  Blank lines and ``#`` comments
are ignored; an edge may be listed from either end or both.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .completion import Presentation
from .poly import MPoly, bracket_left_normed
from .scalars import QQ, Field
from .words import Alphabet, enumerate_regular_words


@dataclass
class Graph:
    """Simple undirected graph; ``vertices`` doubles as the generator order."""

    vertices: list
    edges: set = field(default_factory=set)

    def __post_init__(self):
        self.vertices = list(self.vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex")
        vs = set(self.vertices)
        edges = set()
        for e in self.edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"loop at {u}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge {u}-{v} references an unknown vertex")
            edges.add(frozenset((u, v)))
        self.edges = edges

    def rank(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def neighbours(self, v) -> list:
        r = self.rank()
        out = [next(iter(e - {v})) for e in self.edges if v in e]
        return sorted(out, key=r.__getitem__)

    def sorted_edges(self) -> list:
        """Edges as ``(larger, smaller)`` rank pairs, ascending."""
        r = self.rank()
        out = []
        for e in self.edges:
            a, b = (r[x] for x in e)
            out.append((max(a, b), min(a, b)))
        return sorted(out, key=lambda p: (p[1], p[0]))


def parse_graph(text: str) -> Graph:
    order = []
    adj = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'vertex: neighbours'")
        head, rest = line.split(":", 1)
        head = head.strip()
        if not head:
            raise ValueError(f"line {lineno}: missing vertex name")
        order.append(head)
        for v in rest.split():
            adj.append((head, v, lineno))
    names = set(order)
    edges = set()
    for u, v, lineno in adj:
        if v not in names:
            raise ValueError(f"line {lineno}: unknown vertex {v!r}")
        if u == v:
            raise ValueError(f"line {lineno}: loop at {u!r}")
        edges.add(frozenset((u, v)))
    return Graph(order, edges)


def format_graph(G: Graph) -> str:
    r = G.rank()
    lines = []
    for v in G.vertices:
        # list each edge once, at its larger end
        lower = [u for u in G.neighbours(v) if r[u] < r[v]]
        lines.append(f"{v}: {' '.join(map(str, lower))}".rstrip())
    return "\n".join(lines) + "\n"


def graph_presentation(G: Graph, field: Field = QQ) -> Presentation:
    """One relation ``max . min`` per edge, generators in vertex order."""
    names = tuple(str(v) for v in G.vertices)
    rels = [MPoly.word(e) for e in G.sorted_edges()]
    return Presentation(Alphabet(names), rels, field)


# -- circuits ----------------------------------------------------------------


def circuit(n: int) -> Graph:
    if n < 3:
        raise ValueError("a circuit needs n >= 3")
    vs = [str(i) for i in range(n)]
    return Graph(vs, {frozenset((vs[i], vs[(i + 1) % n])) for i in range(n)})


def circuit_theorem_basis(n: int) -> list:
    """``[n-1,0]``, ``[i,i-1]`` for ``1 <= i < n`` and
    ``[j,0,j+1,...,n-1]`` for ``2 <= j <= n-2``."""
    if n < 3:
        raise ValueError("a circuit needs n >= 3")
    out = [bracket_left_normed([n - 1, 0])]
    out += [bracket_left_normed([i, i - 1]) for i in range(1, n)]
    out += [bracket_left_normed([j, 0] + list(range(j + 1, n))) for j in range(2, n - 1)]
    return out


# -- trees -------------------------------------------------------------------


def bfs_order(parent: Mapping, root) -> list:
    """Vertices by level, insertion order of ``parent`` within a level.

    Raises ValueError on a cycle or on vertices not reachable from root.
    """
    if root in parent:
        raise ValueError("root must not have a parent")
    children: dict = {}
    for v, p in parent.items():
        if v == p:
            raise ValueError(f"cycle detected at {v!r}")
        children.setdefault(p, []).append(v)
    order = [root]
    seen = {root}
    q = deque([root])
    while q:
        v = q.popleft()
        for c in children.get(v, ()):
            if c in seen:
                raise ValueError(f"cycle detected at {c!r}")
            seen.add(c)
            order.append(c)
            q.append(c)
    missing = [v for v in parent if v not in seen]
    if missing:
        raise ValueError(f"cycle detected: {missing[0]!r} is not reachable from the root")
    return order


def tree_presentation(parent: Mapping, root, field: Field = QQ) -> Presentation:
    """Generators in BFS level order; one relation child . parent each."""
    order = bfs_order(parent, root)
    r = {v: i for i, v in enumerate(order)}
    rels = [MPoly.word((r[c], r[parent[c]])) for c in order[1:]]
    return Presentation(Alphabet(tuple(str(v) for v in order)), rels, field)


def tree_parents(G: Graph, root=None) -> tuple:
    """``(parent map, root)`` of a graph that must be a tree."""
    if not G.vertices:
        raise ValueError("empty graph")
    root = G.vertices[0] if root is None else root
    if len(G.edges) != len(G.vertices) - 1:
        raise ValueError("cycle detected: a tree on n vertices has n-1 edges")
    parent = {}
    seen = {root}
    q = deque([root])
    while q:
        v = q.popleft()
        for u in G.neighbours(v):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                q.append(u)
    if len(seen) != len(G.vertices):
        raise ValueError("graph is not connected")
    return parent, root


def tree_graph(parent: Mapping, root) -> Graph:
    order = bfs_order(parent, root)
    return Graph(order, {frozenset((c, parent[c])) for c in order[1:]})


def tree_parent_ranks(P: Presentation) -> dict:
    """For a tree presentation: child rank -> parent rank."""
    return {r.lead_word[0]: r.lead_word[1] for r in P.relations}


def tree_word_irreducible(w, parent_rank: Mapping) -> bool:
    """Irreducibility of a word for a tree presentation: a letter always,
    an R-word unless the head's parent occurs in its tail."""
    if len(w) == 1:
        return True
    p = parent_rank.get(w[0])
    return p is None or p not in w[1:]


def random_tree(n: int, rng: random.Random) -> tuple:
    """Random labelled tree on ``n`` vertices: ``(parent map, root)``."""
    labels = [f"t{i}" for i in range(n)]
    rng.shuffle(labels)
    parent = {}
    for i in range(1, n):
        parent[labels[i]] = labels[rng.randrange(i)]
    items = list(parent.items())
    rng.shuffle(items)
    return dict(items), labels[0]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    vs = [f"g{i}" for i in range(n)]
    edges = {frozenset((vs[i], vs[j])) for i, j in itertools.combinations(range(n), 2)
             if rng.random() < p}
    return Graph(vs, edges)


# -- cubes -------------------------------------------------------------------


def cube_vertices(n: int) -> list:
    return sorted(itertools.product((0, 1), repeat=n))


def cube_name(t) -> str:
    return "v" + "".join(map(str, t))


def cube(n: int) -> Graph:
    """The n-cube: 0/1 tuples in lexicographic order, (0,...,0) first;
    edges join tuples at Hamming distance 1."""
    if n < 1:
        raise ValueError("n >= 1 required")
    vs = cube_vertices(n)
    edges = {frozenset((cube_name(a), cube_name(b))) for a, b in itertools.combinations(vs, 2)
             if sum(x != y for x, y in zip(a, b)) == 1}
    return Graph([cube_name(v) for v in vs], edges)


@dataclass(frozen=True)
class Family:
    name: str
    length: int
    pattern: str


def cu3_theorem_families() -> list:
    """Shapes of the 3-cube basis families, by leading word
    ``hi lo t1 t2 ...`` with ``(hi, lo)`` the head pair."""
    return [
        Family("R2", 2, "head pair at distance 1"),
        Family("R3", 3, "head pair at distance 2; tail vertex adjacent to both"),
        Family("R4", 4, "head pair (e,d) at distance 3; tail (m,c) with m~e and [m,d]c of shape R3"),
        Family("R5", 5, "head pair (d1,d2) at distance 2; tail (c,m1,m2) with [c,di]mi of shape R3"),
        Family("R5'", 5, "head pair (d1,d2) at distance 2; tail (c,m,m') with c~d1, "
                         "[c,d2]mm' of shape R4 and d(m,d1) != 1"),
    ]


def _dist(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))


def _r3(e, d, m) -> bool:
    return _dist(e, d) == 2 and _dist(m, e) == 1 and _dist(m, d) == 1


def _r4(e, d, tail) -> bool:
    if _dist(e, d) != 3:
        return False
    for x, y in itertools.permutations(tail):
        for ee, dd in ((e, d), (d, e)):
            if _dist(x, ee) == 1 and _r3(x, dd, y):
                return True
    return False


def _r5(d1, d2, tail) -> bool:
    if _dist(d1, d2) != 2:
        return False
    return any(_r3(c, d1, m1) and _r3(c, d2, m2) for c, m1, m2 in itertools.permutations(tail))


def _r5p(d1, d2, tail) -> bool:
    if _dist(d1, d2) != 2:
        return False
    for a, b in ((d1, d2), (d2, d1)):
        for c, m, m2 in itertools.permutations(tail):
            if _dist(c, a) == 1 and _r4(c, b, (m, m2)) and _dist(m, a) != 1:
                return True
    return False


def classify_cu3(words: Iterable, n: int = 3) -> dict:
    """Soft classification of leading words into the families above.

    Returns ``{"counts": {family: k}, "unmatched": [words]}``; a word that
    fits several families is counted in the first.
    """
    vs = cube_vertices(n)
    counts = {f.name: 0 for f in cu3_theorem_families()}
    unmatched = []
    for w in words:
        t = [vs[g] for g in w]
        hi, lo, tail = t[0], t[1], t[2:] if len(t) > 1 else []
        name = None
        if len(t) == 2 and _dist(hi, lo) == 1:
            name = "R2"
        elif len(t) == 3 and _r3(hi, lo, tail[0]):
            name = "R3"
        elif len(t) == 4 and _r4(hi, lo, tail):
            name = "R4"
        elif len(t) == 5 and _r5(hi, lo, tail):
            name = "R5"
        elif len(t) == 5 and _r5p(hi, lo, tail):
            name = "R5'"
        if name is None:
            unmatched.append(tuple(w))
        else:
            counts[name] += 1
    return {"counts": counts, "unmatched": unmatched}


# -- structure constants -------------------------------------------------------


def structure_constant_presentation(n_a: int, n_b: int, gamma: Mapping = None,
                                    delta: Mapping = None, field: Field = QQ,
                                    a_names=None, b_names=None) -> Presentation:
    """Presentation of a metabelian algebra ``A + B`` with ``A`` abelian.

    ``gamma[(i, j)]`` maps ``k`` to the coefficient of ``a_k`` in
    ``a_i b_j``; ``delta[(i, j)]`` (``i > j``) does the same for
    ``b_i b_j``.  Indices start at 0.  Generators are ordered
    ``b_0 < ... < b_{m-1} < a_0 < ... < a_{n-1}``.
    """
    gamma = dict(gamma or {})
    delta = dict(delta or {})
    a_names = list(a_names or [f"a{i + 1}" for i in range(n_a)])
    b_names = list(b_names or [f"b{j + 1}" for j in range(n_b)])
    if len(a_names) != n_a or len(b_names) != n_b:
        raise ValueError("inconsistent dimensions: name lists do not match n_a, n_b")
    if n_a + n_b == 0:
        raise ValueError("empty generator set")

    def A(i):
        return n_b + i

    def check(k, n, what):
        if not 0 <= k < n:
            raise ValueError(f"inconsistent dimensions: {what} index {k} out of range")

    for (i, j), row in gamma.items():
        check(i, n_a, "a")
        check(j, n_b, "b")
        for k in row:
            check(k, n_a, "a")
    for (i, j), row in delta.items():
        check(i, n_b, "b")
        check(j, n_b, "b")
        if not i > j:
            raise ValueError("delta keys need i > j")
        for k in row:
            check(k, n_a, "a")

    rels, origins = [], []
    for i in range(n_a):
        for j in range(n_b):
            r = MPoly.word((A(i), j))
            for k, c in sorted(gamma.get((i, j), {}).items()):
                r = r - MPoly.letter(A(k), c)
            rels.append(r)
            origins.append("m1")
    for i in range(n_b):
        for j in range(i):
            r = MPoly.word((i, j))
            for k, c in sorted(delta.get((i, j), {}).items()):
                r = r - MPoly.letter(A(k), c)
            rels.append(r)
            origins.append("m2")
    for i in range(n_a):
        for j in range(i):
            rels.append(MPoly.word((A(i), A(j))))
            origins.append("m3")
    return Presentation(Alphabet(tuple(b_names + a_names)), rels, field, origins)


def random_action_algebra(n_a: int, n_b: int, rng: random.Random, values=(-1, 0, 1)):
    """``(gamma, delta)`` for a valid metabelian algebra: the ``b_j`` act on
    the abelian ideal ``A`` by commuting (diagonal) matrices and
    ``delta = 0``, so the Jacobi identity holds."""
    gamma = {}
    for j in range(n_b):
        for i in range(n_a):
            c = rng.choice(values)
            if c:
                gamma[(i, j)] = {i: c}
    return gamma, {}


# -- random presentations ----------------------------------------------------


def random_presentation(rng: random.Random, *, gens=(2, 3), nrels=(1, 3), max_len: int = 3,
                        max_terms: int = 3, coeffs=(-1, 1), field: Field = QQ) -> Presentation:
    """Random presentation: each relation is a combination of 1..max_terms
    regular words of length <= max_len with coefficients from ``coeffs``."""
    k = rng.randint(*gens)
    names = tuple("xyzuvw"[:k])[::-1] if k <= 6 else tuple(f"x{i}" for i in range(k))
    pool = [w for n in range(1, max_len + 1) for w in enumerate_regular_words(k, n)]
    rels = []
    for _ in range(rng.randint(*nrels)):
        ws = rng.sample(pool, rng.randint(1, min(max_terms, len(pool))))
        rels.append(MPoly({w: rng.choice(coeffs) for w in ws}))
    return Presentation(Alphabet(names), rels, field)


def random_monic_poly(rng: random.Random, k: int, *, max_len: int = 4, max_terms: int = 4,
                      coeffs=(-2, -1, 1, 2)) -> MPoly:
    pool = [w for n in range(1, max_len + 1) for w in enumerate_regular_words(k, n)]
    ws = rng.sample(pool, rng.randint(1, min(max_terms, len(pool))))
    f = MPoly({w: rng.choice(coeffs) for w in ws})
    return f.make_monic()
