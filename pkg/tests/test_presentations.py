import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metabelian_gs.completion import is_gs_basis, reduce_basis, shirshov_complete
from metabelian_gs.poly import MPoly
from metabelian_gs.presentations import (
    Graph,
    bfs_order,
    circuit,
    circuit_theorem_basis,
    classify_cu3,
    cu3_theorem_families,
    cube,
    cube_vertices,
    format_graph,
    graph_presentation,
    parse_graph,
    random_action_algebra,
    random_graph,
    random_tree,
    structure_constant_presentation,
    tree_graph,
    tree_parent_ranks,
    tree_parents,
    tree_presentation,
    tree_word_irreducible,
)
from metabelian_gs.reduction import irr_up_to, is_irreducible
from metabelian_gs.words import enumerate_regular_words

W = MPoly.word
L = MPoly.letter


# -- graphs ------------------------------------------------------------------


def test_graph_validation():
    with pytest.raises(ValueError, match="loop"):
        Graph(["a"], [("a", "a")])
    with pytest.raises(ValueError, match="unknown vertex"):
        Graph(["a"], [("a", "b")])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(["a", "a"])


def test_parse_graph_format():
    G = parse_graph("# path\nr:\na: r\nb: a\n")
    assert G.vertices == ["r", "a", "b"]
    assert G.sorted_edges() == [(1, 0), (2, 1)]
    with pytest.raises(ValueError, match="unknown vertex"):
        parse_graph("a: b\n")
    with pytest.raises(ValueError, match="expected"):
        parse_graph("a b\n")


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_graph_round_trip(seed):
    rng = random.Random(seed)
    G = random_graph(rng.randint(1, 8), 0.4, rng)
    H = parse_graph(format_graph(G))
    assert H.vertices == G.vertices and H.edges == G.edges


def test_single_edge_presentation():
    P = graph_presentation(Graph(["y", "x"], [("x", "y")]))
    assert P.relations == [W((1, 0))]


def test_graph_relations_are_length_two_monomials():
    rng = random.Random(4)
    for _ in range(20):
        P = graph_presentation(random_graph(6, 0.5, rng))
        assert all(len(r) == 1 and len(r.lead_word) == 2 and r.lead_coeff == 1
                   for r in P.relations)


# -- circuits ----------------------------------------------------------------


def test_circ4_relations():
    P = graph_presentation(circuit(4))
    assert {r.lead_word for r in P.relations} == {(3, 0), (1, 0), (2, 1), (3, 2)}


def test_circuit_theorem_basis_examples():
    assert circuit_theorem_basis(4)[-1] == W((2, 0, 3))
    assert len(circuit_theorem_basis(4)) == 5
    assert len(circuit_theorem_basis(3)) == 3
    b5 = circuit_theorem_basis(5)
    assert len(b5) == 7
    assert W((2, 0, 3, 4)) in b5 and W((3, 0, 4)) in b5
    with pytest.raises(ValueError):
        circuit(2)
    with pytest.raises(ValueError):
        circuit_theorem_basis(2)


@pytest.mark.parametrize("n", range(3, 9))
def test_circuit_basis_size(n):
    assert len(circuit_theorem_basis(n)) == 2 * n - 3


# -- trees -------------------------------------------------------------------


def test_path_tree():
    P = tree_presentation({"a": "r", "b": "a"}, "r")
    assert P.alphabet.names == ("r", "a", "b")
    assert P.relations == [W((1, 0)), W((2, 1))]


def test_star_tree_heads_distinct():
    P = tree_presentation({f"l{i}": "c" for i in range(4)}, "c")
    assert len(P.relations) == 4
    heads = [r.lead_word[0] for r in P.relations]
    assert len(set(heads)) == 4


def test_tree_cycles_rejected():
    with pytest.raises(ValueError, match="cycle"):
        bfs_order({"a": "b", "b": "a"}, "r")
    with pytest.raises(ValueError, match="cycle"):
        bfs_order({"a": "a"}, "r")
    with pytest.raises(ValueError, match="cycle"):
        tree_parents(circuit(4))


def test_tree_graph_round_trip():
    parent, root = random_tree(9, random.Random(2))
    G = tree_graph(parent, root)
    p2, r2 = tree_parents(G, root)
    assert r2 == root and p2 == parent


@pytest.mark.parametrize("seed", range(10))
def test_trees_are_gs_bases(seed):
    rng = random.Random(seed)
    P = tree_presentation(*random_tree(rng.randint(2, 15), rng))
    assert is_gs_basis(P.relations, P.k) == (True, None)


@pytest.mark.parametrize("seed", range(5))
def test_tree_irreducibility_predicate(seed):
    rng = random.Random(100 + seed)
    P = tree_presentation(*random_tree(rng.randint(2, 8), rng))
    pr = tree_parent_ranks(P)
    for n in range(1, 5):
        for w in enumerate_regular_words(P.k, n):
            assert tree_word_irreducible(w, pr) == is_irreducible(w, P.relations)


# -- cubes -------------------------------------------------------------------


def test_cube_sizes():
    for n, e in ((1, 1), (2, 4), (3, 12), (4, 32)):
        G = cube(n)
        assert len(G.vertices) == 2 ** n and len(G.edges) == e
    assert cube(3).vertices[0] == "v000"


def test_cube_order_consistent_with_levels():
    vs = cube_vertices(4)
    assert vs[0] == (0, 0, 0, 0)
    assert all(vs.index((0,) * 4) < vs.index(v) for v in vs if sum(v) == 1)


def test_cu3_families():
    names = [f.name for f in cu3_theorem_families()]
    assert names == ["R2", "R3", "R4", "R5", "R5'"]
    P = graph_presentation(cube(3))
    assert classify_cu3([r.lead_word for r in P.relations])["counts"]["R2"] == 12


def test_cu3_classification_of_completion():
    P = graph_presentation(cube(3))
    res = shirshov_complete(P)
    B = reduce_basis(res.basis)
    report = classify_cu3(f.lead_word for f in B)
    assert report["unmatched"] == []
    assert sum(report["counts"].values()) == len(B)


# -- structure constants -----------------------------------------------------


def test_abelian_structure_constants():
    P = structure_constant_presentation(2, 2)
    assert all(len(r) == 1 for r in P.relations)
    _, counts = irr_up_to(P.relations, P.k, 3)
    assert counts == [4, 0, 0]


def test_heisenberg():
    P = structure_constant_presentation(1, 2, delta={(1, 0): {0: 1}})
    assert P.alphabet.names == ("b1", "b2", "a1")
    assert W((1, 0)) - L(2) in P.relations
    assert is_gs_basis(P.relations, P.k) == (True, None)
    _, counts = irr_up_to(P.relations, P.k, 3)
    assert counts == [3, 0, 0]


def test_structure_constant_errors():
    with pytest.raises(ValueError, match="inconsistent"):
        structure_constant_presentation(1, 1, gamma={(0, 0): {3: 1}})
    with pytest.raises(ValueError, match="inconsistent"):
        structure_constant_presentation(1, 1, a_names=["a", "b"])
    with pytest.raises(ValueError, match="i > j"):
        structure_constant_presentation(1, 2, delta={(0, 1): {0: 1}})


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_irr_is_generators(seed):
    rng = random.Random(seed)
    na, nb = rng.randint(1, 3), rng.randint(1, 3)
    gamma, delta = random_action_algebra(na, nb, rng)
    P = structure_constant_presentation(na, nb, gamma, delta)
    assert is_gs_basis(P.relations, P.k)[0]
    words, counts = irr_up_to(P.relations, P.k, 3)
    assert counts == [na + nb, 0, 0]
