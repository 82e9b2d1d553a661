import random

from enforce_typing import enforce_types
import pytest

from homenum.conftest_structures import _loop_path_sequence, _random_structure
from homenum.endoseq.endo_sequence import validate_sequence
from homenum.kcore.brute_core import are_isomorphic, brute_force_core
from homenum.kcore.retraction import (
    Retraction,
    _colex_subsets,
    find_k_retraction,
    is_k_core,
    k_core,
    sequence_from_retractions,
)
from homenum.structures.assignment import PartialAssignment, is_homomorphism
from homenum.structures.families import generate_family, graph_vocabulary
from homenum.structures.structure import Structure
from homenum.util.errors import InvalidSequenceError, WidthExceededError


def _permuted(A: Structure, rng: random.Random) -> Structure:
    universe = list(A.universe)
    rng.shuffle(universe)
    tables = {rel: list(A.tables[rel]) for rel in A.vocabulary.names}
    return Structure(A.vocabulary, universe, tables, A.name)


@enforce_types
def test_colex_order():
    assert list(_colex_subsets(3, 3)) == [
        (0,), (1,), (0, 1), (2,), (0, 2), (1, 2), (0, 1, 2),
    ]
    assert list(_colex_subsets(3, 1)) == [(0,), (1,), (2,)]
    assert list(_colex_subsets(4, 2))[-3:] == [(0, 3), (1, 3), (2, 3)]


@enforce_types
def test_loop_path_folds_its_far_end():
    A = generate_family("loop_path_one_end", 4)
    r = find_k_retraction(A, 1)
    assert r is not None
    assert r.moved == ("v4",)
    assert r.mapping["v4"] == "v2"
    assert all(r.mapping[v] == v for v in ["v0", "v1", "v2", "v3"])
    assert is_homomorphism(r.mapping, A, A)
    assert r.image == frozenset(["v0", "v1", "v2", "v3"])
    assert "Retraction" in str(r)

    one = generate_family("loop_path_one_end", 1)
    r = find_k_retraction(one, 1)
    assert r is not None and r.mapping["v1"] == "v0"


@enforce_types
def test_no_retraction():
    both = generate_family("loop_path_both_ends", 4)
    assert find_k_retraction(both, 1) is None
    assert is_k_core(both, 1)

    dot = generate_family("looped_clique", 1)
    assert find_k_retraction(dot, 1) is None

    with pytest.raises(ValueError):
        find_k_retraction(dot, 0)


@enforce_types
def test_k_core_loop_path():
    for n in [1, 3, 6]:
        A = generate_family("loop_path_one_end", n)
        core, steps = k_core(A, 1)
        assert core.universe == ("v0",)
        assert core.has_tuple("E", ("v0", "v0"))
        assert len(steps) == n


@enforce_types
def test_k_core_depends_on_k():
    A = generate_family("clique_plus_loop", 3)
    core, steps = k_core(A, 3)
    assert core.universe == ("l",)
    assert len(steps) == 1 and steps[0].moved == ("c0", "c1", "c2")

    # two clique vertices cannot leave without the third
    core2, steps2 = k_core(A, 2)
    assert core2 == A and not steps2


@enforce_types
def test_core_is_its_own_k_core():
    K3 = generate_family("clique", 3)
    core, steps = k_core(K3, 3)
    assert core == K3 and steps == []


@enforce_types
def test_sequence_from_retractions():
    A = generate_family("loop_path_one_end", 3)
    _, steps = k_core(A, 1)
    seq = sequence_from_retractions(A, steps, 1)
    assert seq.n == 3
    assert validate_sequence(A, seq)
    ref = _loop_path_sequence(3)
    assert seq.levels == ref.levels
    assert seq.maps == ref.maps

    path = generate_family("path", 3)
    trivial = sequence_from_retractions(path, [], 1)
    assert trivial.n == 0 and validate_sequence(path, trivial)

    with pytest.raises(WidthExceededError):
        sequence_from_retractions(generate_family("clique", 4), [], 2)


@enforce_types
def test_broken_chains():
    A = generate_family("loop_path_one_end", 3)
    _, steps = k_core(A, 1)
    with pytest.raises(InvalidSequenceError):
        sequence_from_retractions(A, steps[1:], 1)  # skips the first step

    fold_two = Retraction(
        PartialAssignment({"v0": "v0", "v1": "v1", "v2": "v0", "v3": "v1"}), ("v2", "v3")
    )
    with pytest.raises(InvalidSequenceError):
        sequence_from_retractions(A, [fold_two], 1)  # moves 2 > 1
    assert sequence_from_retractions(A, [fold_two], 2).n == 1

    shift = Retraction(
        PartialAssignment({"v0": "v0", "v1": "v0", "v2": "v1", "v3": "v2"}), ("v1", "v2", "v3")
    )
    with pytest.raises(InvalidSequenceError):
        sequence_from_retractions(A, [shift], 3)  # not the identity on v1, v2


@enforce_types
def test_k_cores_agree_across_scan_orders():
    rng = random.Random(13)
    fixtures = [
        (generate_family("loop_path_one_end", 4), 1),
        (generate_family("clique_plus_loop", 3), 3),
        (generate_family("grid", 2), 1),
        (generate_family("padded_clique", 2), 2),
    ]
    for _ in range(4):
        A = _random_structure(rng, graph_vocabulary(), 6, 0.3, prefix="a", name="A")
        fixtures.append((A, 2))

    for A, k in fixtures:
        base, _ = k_core(A, k)
        for _ in range(20):
            B = _permuted(A, rng)
            core, steps = k_core(B, k)
            assert are_isomorphic(core, base), (A, k)
            assert len(steps) < len(A) or len(A) == 0


@enforce_types
def test_large_k_gives_the_core():
    rng = random.Random(19)
    for _ in range(25):
        n = rng.randint(1, 5)
        A = _random_structure(rng, graph_vocabulary(), n, rng.uniform(0.2, 0.6), prefix="a")
        core, _ = k_core(A, n)
        assert are_isomorphic(core, brute_force_core(A))
        assert is_k_core(core, n)
