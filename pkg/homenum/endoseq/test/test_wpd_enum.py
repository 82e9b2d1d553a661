import itertools
import random

from enforce_typing import enforce_types
import pytest

from homenum.conftest_structures import (
    _collapse_sequence,
    _collapsible_graph,
    _composites,
    _level_homs,
    _loop_path_sequence,
    _random_pair,
    _random_structure,
)
from homenum.endoseq.elementary import index_of, is_elementary
from homenum.endoseq.endo_sequence import EndoSequence, trivial_sequence
from homenum.endoseq.wpd_enum import WpdEnumerator, elementary_enum, enumerate_wpd, iter_wpd
from homenum.oracle.brute import brute_homs
from homenum.structures.assignment import PartialAssignment, compose, is_homomorphism
from homenum.structures.families import generate_family, graph_vocabulary
from homenum.structures.structure import empty_structure
from homenum.util.errors import InvalidSequenceError


def _collect(A, B, seq) -> list:
    out: list = []
    count = enumerate_wpd(A, B, seq, out.append)
    assert count == len(out)
    return out


@enforce_types
def test_k2_to_k3(k2, k3):
    got = _collect(k2, k3, trivial_sequence(k2, 1))
    assert len(got) == 6
    assert set(got) == brute_homs(k2, k3)


@enforce_types
def test_path_to_k3(k3):
    P = generate_family("path", 4)  # 5 vertices
    got = _collect(P, k3, trivial_sequence(P, 1))
    assert len(got) == len(set(got)) == 48


@enforce_types
def test_trivial_sequence_matches_brute_force():
    rng = random.Random(1)
    for _ in range(500):
        A, B = _random_pair(rng, max_a=6, max_b=4)
        got = list(iter_wpd(A, B, trivial_sequence(A, 2)))
        assert len(got) == len(set(got))
        assert set(got) == brute_homs(A, B)


@enforce_types
def test_collapse_sequences_match_brute_force():
    rng = random.Random(23)
    for _ in range(150):
        A = _collapsible_graph(rng, rng.randint(3, 6), rng.uniform(0.1, 0.5))
        B = _random_structure(rng, graph_vocabulary(), rng.randint(0, 3), rng.uniform(0.3, 0.8))
        seq = _collapse_sequence(A, 4)
        got = _collect(A, B, seq)
        assert len(got) == len(set(got))
        assert set(got) == brute_homs(A, B)


@enforce_types
def test_index_partitions_homomorphisms():
    rng = random.Random(29)
    for _ in range(120):
        A = _collapsible_graph(rng, rng.randint(3, 6), rng.uniform(0.1, 0.5))
        B = _random_structure(rng, graph_vocabulary(), rng.randint(1, 4), rng.uniform(0.3, 0.8))
        seq = _collapse_sequence(A, 4)
        comps = _composites(seq)
        homs = brute_homs(A, B)

        # h -> (t, psi): psi elementary at t, and psi after the first t maps is h
        keys = set()
        for h in homs:
            t, psi = index_of(h, seq, B)
            assert is_elementary(psi, t, seq, B)
            assert compose(psi, comps[t]) == h
            keys.add((t, psi))

        # and every elementary (t, psi) is hit
        elementary = {
            (t, psi)
            for t, level_homs in enumerate(_level_homs(seq, B))
            for psi in level_homs
            if is_elementary(psi, t, seq, B)
        }
        assert keys == elementary
        assert len(keys) == len(homs)


@enforce_types
def test_loop_path_matches_brute_force(looped_k3):
    for n in [1, 2, 5]:
        seq = _loop_path_sequence(n)
        got = _collect(seq.source, looped_k3, seq)
        assert len(got) == len(set(got))
        assert set(got) == brute_homs(seq.source, looped_k3)

    k2_loop = generate_family("clique_one_loop", 2)
    seq = _loop_path_sequence(2)
    assert set(_collect(seq.source, k2_loop, seq)) == brute_homs(seq.source, k2_loop)


@enforce_types
def test_long_loop_paths_stay_valid(looped_k3):
    for n in [10, 20]:
        seq = _loop_path_sequence(n)
        A = seq.source
        got = list(itertools.islice(iter_wpd(A, looped_k3, seq), 3000))
        assert len(got) == 3000
        assert len(set(got)) == len(got)
        for h in got[::50]:
            assert h.domain == frozenset(A.universe)
            assert is_homomorphism(h, A, looped_k3)


@enforce_types
def test_clique_plus_loop(c5_plus_loop):
    A = generate_family("clique_plus_loop", 3)
    fold = PartialAssignment({v: "l" for v in A.universe})
    seq = EndoSequence(A, [A.universe, ("l",)], [fold], 2)
    got = _collect(A, c5_plus_loop, seq)
    assert got == [fold]
    assert set(got) == brute_homs(A, c5_plus_loop)


@enforce_types
def test_empty_target(k2):
    B = empty_structure(k2.vocabulary)
    calls: list = []
    assert enumerate_wpd(k2, B, trivial_sequence(k2, 1), calls.append) == 0
    assert not calls


@enforce_types
def test_empty_source(k2):
    A = empty_structure(k2.vocabulary)
    got = _collect(A, k2, EndoSequence(A, [()], [], 0))
    assert got == [PartialAssignment({})]


@enforce_types
def test_invalid_sequence_rejected(looped_k3):
    A = generate_family("loop_path_one_end", 2)
    phi = PartialAssignment({"v0": "v0", "v1": "v0", "v2": "v0"})
    seq = EndoSequence(A, [A.universe, ("v0", "v1")], [phi], 1)  # not onto
    with pytest.raises(InvalidSequenceError):
        enumerate_wpd(A, looped_k3, seq, print)


@enforce_types
def test_elementary_enum(k2, k3, looped_k3):
    seq = trivial_sequence(k2, 1)
    out: list = []
    assert elementary_enum(0, 0, PartialAssignment({}), seq, k3, out.append) == 6
    assert set(out) == brute_homs(k2, k3)

    out = []
    start = PartialAssignment({"0": "2"})
    assert elementary_enum(0, 1, start, seq, k3, out.append) == 2
    assert all(h["0"] == "2" for h in out)

    lp = _loop_path_sequence(2)
    # the loop cannot land on the loop-free v1: nothing is emitted
    assert elementary_enum(2, 1, PartialAssignment({"v0": "v1"}), lp, looped_k3, print) == 0

    # a single looped vertex takes only the constant map
    looped = generate_family("looped_clique", 1)
    assert elementary_enum(2, 1, PartialAssignment({"v0": "v0"}), lp, looped, print) == 1
    with pytest.raises(ValueError):
        elementary_enum(0, 0, PartialAssignment({"v0": "v0"}), lp, looped, print)


@enforce_types
def test_elementary_enum_level_below_top(looped_k3):
    seq = _loop_path_sequence(2)  # A_1 = {v0, v1}
    A = seq.source
    psi = PartialAssignment({"v0": "v0", "v1": "v1"})
    out: list = []
    count = elementary_enum(0, 0, psi, seq, looped_k3, out.append)
    # elementary at level 0 means v2 is sent apart from v0
    expected = [h for h in brute_homs(A, looped_k3) if h.restrict(["v0", "v1"]) == psi]
    expected = [h for h in expected if h["v2"] != h["v0"]]
    assert count == len(expected)
    assert set(out) == set(expected)


@enforce_types
def test_every_node_is_checked_against_its_parent(looped_k3):
    # pytest.ini turns on HOMENUM_DEBUG, so parent checks run inside the walk
    seq = _loop_path_sequence(5)
    enum = WpdEnumerator(seq.source, looped_k3, seq)
    assert enum.check_parents
    got = list(enum)
    assert enum.num_nodes == len(got)
