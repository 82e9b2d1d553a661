import random

from enforce_typing import enforce_types
import pytest

from homenum.conftest_structures import _random_pair
from homenum.extension.ext_query import ExtensionQuery, full_query
from homenum.extension.hom_ext import first_extension, homomorphism_ext
from homenum.oracle.brute import iter_brute_homs
from homenum.structures.assignment import PartialAssignment, is_homomorphism
from homenum.structures.families import generate_family
from homenum.structures.structure import induced_substructure
from homenum.util.errors import NotAHomomorphismError, WidthExceededError


def _q(A, B, fixed, region, seed: dict) -> ExtensionQuery:
    return ExtensionQuery(A, B, fixed, region, PartialAssignment(seed))


@enforce_types
def test_path_parity(path_abc, k2):
    abc = ["a", "b", "c"]
    same = _q(path_abc, k2, ["a", "c"], abc, {"a": "0", "c": "0"})
    assert homomorphism_ext(same, 1)
    assert first_extension(same, 1) == PartialAssignment({"a": "0", "b": "1", "c": "0"})

    differ = _q(path_abc, k2, ["a", "c"], abc, {"a": "0", "c": "1"})
    assert not homomorphism_ext(differ, 1)
    assert first_extension(differ, 1) is None


@enforce_types
def test_nothing_to_extend(path_abc, k2):
    abc = ["a", "b", "c"]
    good = _q(path_abc, k2, abc, abc, {"a": "1", "b": "0", "c": "1"})
    assert homomorphism_ext(good, 0)
    assert first_extension(good, 0) == good.seed

    with pytest.raises(NotAHomomorphismError):
        homomorphism_ext(_q(path_abc, k2, abc, abc, {"a": "1", "b": "1", "c": "0"}), 0)


@enforce_types
def test_seed_not_partial_hom(path_abc, k2):
    q = _q(path_abc, k2, ["a", "b"], ["a", "b", "c"], {"a": "0", "b": "0"})
    with pytest.raises(NotAHomomorphismError, match="E a b leaves K2"):
        homomorphism_ext(q, 1)
    with pytest.raises(NotAHomomorphismError):
        first_extension(q, 1)


@enforce_types
def test_width_exceeded(k3):
    K4 = generate_family("clique", 4)
    q = full_query(K4, k3)
    with pytest.raises(WidthExceededError) as excinfo:
        homomorphism_ext(q, 2)
    assert excinfo.value.k == 2
    assert not homomorphism_ext(q, 3)  # K4 is not 3-colourable

    # fixing one vertex leaves a triangle: width 2 suffices
    q = _q(K4, k3, ["v0"], K4.universe, {"v0": "0"})
    assert not homomorphism_ext(q, 2)


@enforce_types
def test_region_ignores_outside_tuples(k2):
    triangle = generate_family("clique", 3)
    # A[{v0, v1}] is one edge: 2-colourable, although the triangle is not
    q = _q(triangle, k2, ["v0"], ["v0", "v1"], {"v0": "1"})
    assert homomorphism_ext(q, 1)
    assert first_extension(q, 1) == PartialAssignment({"v0": "1", "v1": "0"})


@enforce_types
def test_edgeless_free_part(looped_k3):
    A = generate_family("padded_clique", 2)  # v0-v1 plus isolated p0, p1
    q = _q(A, looped_k3, ["v0", "v1"], A.universe, {"v0": "v1", "v1": "v2"})
    got = first_extension(q, 0)
    assert got == PartialAssignment({"v0": "v1", "v1": "v2", "p0": "v0", "p1": "v0"})


@enforce_types
def test_query_validation(path_abc, k2):
    with pytest.raises(ValueError):
        _q(path_abc, k2, ["a"], ["a", "zz"], {"a": "0"})  # region leaves A
    with pytest.raises(ValueError):
        _q(path_abc, k2, ["a", "b"], ["a"], {"a": "0", "b": "1"})  # X1 not in X2
    with pytest.raises(ValueError):
        _q(path_abc, k2, ["a", "b"], ["a", "b"], {"a": "0"})  # seed domain != X1
    with pytest.raises(ValueError):
        _q(path_abc, k2, ["a"], ["a"], {"a": "9"})  # value outside B

    q = full_query(path_abc, k2)
    assert q.fixed_set == frozenset() and q.free == frozenset({"a", "b", "c"})
    assert "ExtensionQuery" in str(q)


@enforce_types
def test_agrees_with_brute_force():
    rng = random.Random(2024)
    checked = 0
    while checked < 500:
        A, B = _random_pair(rng)
        region = [x for x in A.universe if rng.random() < 0.8]
        fixed = [x for x in region if rng.random() < 0.4]
        if not B.universe and fixed:
            continue
        seed = {x: rng.choice(B.universe) for x in fixed}
        q = _q(A, B, fixed, region, seed)
        sub = induced_substructure(A, region)
        if not is_homomorphism(q.seed, sub, B):
            with pytest.raises(NotAHomomorphismError):
                homomorphism_ext(q, 2)
            continue

        extensions = [
            h for h in iter_brute_homs(sub, B) if h.restrict(fixed) == q.seed
        ]
        assert homomorphism_ext(q, 2) == bool(extensions)
        witness = first_extension(q, 2)
        if not extensions:
            assert witness is None
        else:
            # least by universe order of free elements, then B order
            key = _lex_key(sub, B)
            assert witness == min(extensions, key=key)
            assert is_homomorphism(witness, sub, B)
        checked += 1


def _lex_key(A, B):
    def key(h):
        return tuple(B.index[h[x]] for x in A.universe)

    return key
