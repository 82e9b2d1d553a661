import math
import random

from enforce_typing import enforce_types
import networkx as nx
import numpy as np
import pytest

from homenum.conftest_structures import _random_structure, _random_vocabulary
from homenum.structures.structure import (
    Structure,
    check_same_vocabulary,
    disjoint_union,
    empty_structure,
    gaifman_graph,
    index_gaifman_graph,
    induced_substructure,
)
from homenum.structures.vocabulary import Vocabulary
from homenum.util.errors import StructureError

VOCAB = Vocabulary([("E", 2), ("U", 1), ("T", 3)])


def _sample() -> Structure:
    return Structure(
        VOCAB,
        ["x", "y", "z", "w"],
        {"E": [("x", "y"), ("y", "x"), ("z", "z")], "T": [("x", "z", "w")]},
        "S",
    )


@enforce_types
def test_vocabulary():
    assert VOCAB.names == ["E", "U", "T"]
    assert VOCAB.arity("T") == 3
    assert VOCAB.max_arity == 3
    assert "U" in VOCAB and "Q" not in VOCAB
    assert str(VOCAB) == "Vocabulary(E/2, U/1, T/3)"
    assert VOCAB == Vocabulary([("E", 2), ("U", 1), ("T", 3)])
    assert VOCAB != Vocabulary([("U", 1), ("E", 2), ("T", 3)])

    with pytest.raises(StructureError):
        Vocabulary([("E", 2), ("E", 3)])
    with pytest.raises(StructureError):
        Vocabulary([("E", 0)])
    with pytest.raises(StructureError):
        Vocabulary([("bad:name", 1)])
    with pytest.raises(StructureError):
        VOCAB.arity("Q")


@enforce_types
def test_structure_basics():
    A = _sample()
    assert len(A) == 4
    assert A.num_tuples == 4
    assert A.index == {"x": 0, "y": 1, "z": 2, "w": 3}
    assert A.tables["U"] == ()
    assert A.int_tables["E"] == ((0, 1), (1, 0), (2, 2))
    assert list(A.tuples()) == [
        ("E", ("x", "y")),
        ("E", ("y", "x")),
        ("E", ("z", "z")),
        ("T", ("x", "z", "w")),
    ]
    assert A.has_tuple("E", ("z", "z"))
    assert not A.has_tuple("E", ("x", "z"))
    assert not A.has_tuple("E", ("x", "nope"))

    arr = A.table_array("T")
    assert arr.dtype == np.int64 and arr.shape == (1, 3)
    assert A.table_array("U").shape == (0, 1)
    assert A.codes("E").tolist() == sorted([0 * 4 + 1, 1 * 4 + 0, 2 * 4 + 2])

    inc = A.incidence()
    assert inc[2] == [("E", (2, 2)), ("T", (0, 2, 3))]
    assert inc[3] == [("T", (0, 2, 3))]

    assert "name=S" in str(A)


@enforce_types
def test_structure_equality_ignores_name():
    A, B = _sample(), _sample()
    B.name = "other"
    assert A == B
    assert hash(A) == hash(B)


@enforce_types
def test_structure_errors():
    with pytest.raises(StructureError):
        Structure(VOCAB, ["x", "x"], {}, "S")  # duplicate element
    with pytest.raises(StructureError):
        Structure(VOCAB, ["x"], {"Q": [("x",)]}, "S")  # unknown symbol
    with pytest.raises(StructureError):
        Structure(VOCAB, ["x"], {"E": [("x",)]}, "S")  # arity
    with pytest.raises(StructureError):
        Structure(VOCAB, ["x"], {"E": [("x", "y")]}, "S")  # unknown element
    with pytest.raises(StructureError):
        Structure(VOCAB, ["x"], {"E": [("x", "x"), ("x", "x")]}, "S")  # dup tuple
    with pytest.raises(StructureError):
        Structure(VOCAB, ["a b"], {}, "S")  # whitespace in id


@enforce_types
def test_induced_substructure():
    A = _sample()
    sub = induced_substructure(A, {"z", "x", "y"})
    assert sub.universe == ("x", "y", "z")
    assert sub.tables["E"] == (("x", "y"), ("y", "x"), ("z", "z"))
    assert sub.tables["T"] == ()
    assert sub.name == "S"

    assert len(induced_substructure(A, [], "none")) == 0
    with pytest.raises(StructureError):
        induced_substructure(A, ["x", "q"])


@enforce_types
def test_disjoint_union():
    A = _sample()
    B = Structure(VOCAB, ["p"], {"U": [("p",)]}, "P")
    C = disjoint_union(A, B)
    assert C.universe == ("x", "y", "z", "w", "p")
    assert C.num_tuples == 5
    assert C.name == "S+P"

    with pytest.raises(StructureError):
        disjoint_union(A, A)
    with pytest.raises(StructureError):
        disjoint_union(A, empty_structure(Vocabulary([("E", 2)])))


@enforce_types
def test_gaifman_graph():
    G = gaifman_graph(_sample())
    assert list(G.nodes) == ["x", "y", "z", "w"]
    assert sorted(tuple(sorted(e)) for e in G.edges) == [
        ("w", "x"),
        ("w", "z"),
        ("x", "y"),
        ("x", "z"),
    ]
    assert nx.number_of_selfloops(G) == 0


@enforce_types
def test_index_gaifman_graph():
    A = _sample()
    G = index_gaifman_graph(A)
    assert list(G.nodes) == [0, 1, 2, 3]
    assert G.number_of_edges() == 4

    # region {0,1,2}: the T tuple leaves the region, so it adds no edges
    G = index_gaifman_graph(A, region={0, 1, 2})
    assert sorted(G.edges) == [(0, 1)]

    # induced on free vertices {2, 3}, with T counted
    G = index_gaifman_graph(A, vertices={2, 3})
    assert list(G.nodes) == [2, 3]
    assert sorted(G.edges) == [(2, 3)]


@enforce_types
def test_check_same_vocabulary():
    A = _sample()
    check_same_vocabulary(A, A)
    with pytest.raises(StructureError):
        check_same_vocabulary(A, empty_structure(Vocabulary([("E", 2)])))


@enforce_types
def test_induced_substructure_is_monotone():
    rng = random.Random(5)
    for _ in range(100):
        A = _random_structure(rng, _random_vocabulary(rng), rng.randint(0, 5), 0.4)
        Y = [elem for elem in A.universe if rng.random() < 0.7]
        X = [elem for elem in Y if rng.random() < 0.6]
        AX, AY = induced_substructure(A, X), induced_substructure(A, Y)
        for rel, tup in AX.tuples():
            assert AY.has_tuple(rel, tup)


@enforce_types
def test_gaifman_graph_bounds():
    rng = random.Random(6)
    for _ in range(100):
        A = _random_structure(rng, _random_vocabulary(rng), rng.randint(0, 5), 0.3)
        G = gaifman_graph(A)
        assert nx.number_of_selfloops(G) == 0
        assert all(G.has_edge(b, a) for a, b in G.edges)
        bound = sum(math.comb(A.vocabulary.arity(rel), 2) for rel, _ in A.tuples())
        assert G.number_of_edges() <= bound
