from enforce_typing import enforce_types
import pytest

from homenum.structures.families import generate_family
from homenum.treewidth.decompose import decompose
from homenum.treewidth.tree_decomp import (
    TreeDecomposition,
    parse_decomposition,
    serialize_decomposition,
    sort_bags,
    validate,
)
from homenum.util.errors import ParseError

P3_TD = """\
# path v0-v1-v2-v3
bag r - v1 v2
bag x r v0 v1
bag y r v2 v3
"""


@enforce_types
def test_parse_and_validate():
    A = generate_family("path", 3)
    d = parse_decomposition(P3_TD)
    assert d.parents == [-1, 0, 0]
    assert d.bags == [("v1", "v2"), ("v0", "v1"), ("v2", "v3")]
    assert d.width == 1
    assert d.children() == [[1, 2], [], []]
    assert d.vertices == {"v0", "v1", "v2", "v3"}
    assert validate(A, d)


@enforce_types
def test_root_not_first_in_file():
    d = parse_decomposition("bag 1 0 a b\nbag 0 - b c\n")
    assert d.parents == [-1, 0]
    assert d.bags == [("b", "c"), ("a", "b")]


@enforce_types
def test_serialize_round_trip():
    d = parse_decomposition(P3_TD)
    text = serialize_decomposition(d)
    assert text.splitlines()[0] == "bag 0 - v1 v2"
    again = parse_decomposition(text)
    assert again.parents == d.parents and again.bags == d.bags


@enforce_types
def test_validate_rejects():
    A = generate_family("path", 3)
    # misses edge v1-v2
    assert not validate(A, TreeDecomposition([-1, 0], [("v0", "v1"), ("v2", "v3")]))
    # v1 occurs in two disconnected places
    assert not validate(
        A,
        TreeDecomposition(
            [-1, 0, 1], [("v0", "v1"), ("v0", "v2", "v3"), ("v1", "v2")]
        ),
    )
    # element missing entirely
    assert not validate(A, TreeDecomposition([-1], [("v0", "v1", "v2")]))
    # foreign element
    assert not validate(A, TreeDecomposition([-1], [("v0", "v1", "v2", "v3", "q")]))
    # not a tree
    assert not validate(A, TreeDecomposition([-1, 2, 1], [("v0",), ("v1",), ("v2",)]))


@enforce_types
def test_computed_decompositions_validate():
    for name, n in [("grid", 3), ("cycle", 7), ("clique_plus_loop", 4), ("path", 1)]:
        A = generate_family(name, n)
        d = decompose(A, len(A))
        assert d is not None
        assert validate(A, d), name


@enforce_types
def test_parse_errors():
    for text in [
        "",
        "bag 0\n",
        "node 0 - a\n",
        "bag 0 - a\nbag 0 0 b\n",
        "bag 0 - a a\n",
        "bag 0 - a\nbag 1 - b\n",
        "bag 0 - a\nbag 1 7 b\n",
        "bag 0 - a\nbag 1 2 b\nbag 2 1 c\n",
    ]:
        with pytest.raises(ParseError):
            parse_decomposition(text)


@enforce_types
def test_restrict_relabel_sort():
    d = parse_decomposition(P3_TD)
    r = d.restrict({"v1", "v3"})
    assert r.bags == [("v1",), ("v1",), ("v3",)]
    assert r.parents == d.parents

    idx = {"v0": 0, "v1": 1, "v2": 2, "v3": 3}
    rl = d.relabel(idx)
    assert rl.bags == [(1, 2), (0, 1), (2, 3)]

    s = sort_bags(d, ["v3", "v2", "v1", "v0"])
    assert s.bags == [("v2", "v1"), ("v1", "v0"), ("v3", "v2")]
