from enforce_typing import enforce_types
import numpy as np
import pytest

from homenum.conftest_structures import _loop_path_sequence
from homenum.endoseq.endo_sequence import (
    EndoSequence,
    SequenceArrays,
    require_valid,
    sequence_violation,
    trivial_sequence,
    validate_sequence,
)
from homenum.structures.assignment import PartialAssignment
from homenum.structures.families import generate_family, graph_structure
from homenum.util.errors import InvalidSequenceError, WidthExceededError


@enforce_types
def test_loop_path_sequence_is_valid_width_0():
    for n in [1, 2, 5, 12]:
        seq = _loop_path_sequence(n)
        A = seq.source
        assert seq.n == n
        assert validate_sequence(A, seq)
        assert seq.level(n) == ("v0",)
        for i in range(n):
            assert len(seq.diff(i)) == 1
        assert seq.diff(n) == ("v0",)


@enforce_types
def test_trivial_sequence(path_abc):
    seq = trivial_sequence(path_abc, 1)
    assert seq.n == 0 and seq.levels == [("a", "b", "c")]
    assert validate_sequence(path_abc, seq)
    assert seq.diff(0) == ("a", "b", "c")

    K4 = generate_family("clique", 4)
    with pytest.raises(WidthExceededError):
        trivial_sequence(K4, 2)


@enforce_types
def test_blocks_follow_universe_order():
    seq = _loop_path_sequence(3)  # v0..v3
    assert seq.block(0, 0) == ("v0", "v1", "v2")
    assert seq.block(0, 1) == ("v0", "v1", "v2", "v3")
    assert seq.block(3, 0) == ()
    assert seq.block(3, 1) == ("v0",)

    # levels given out of order are normalized
    A = seq.source
    shuffled = EndoSequence(A, [("v3", "v1", "v0", "v2")], [], 0)
    assert shuffled.level(0) == A.universe


@enforce_types
def test_not_surjective():
    # v0 (looped) - v1 - v2; fold everything onto v0 but claim level {v0, v1}
    A = generate_family("loop_path_one_end", 2)
    phi = PartialAssignment({"v0": "v0", "v1": "v0", "v2": "v0"})
    seq = EndoSequence(A, [A.universe, ("v0", "v1")], [phi], 1)
    msg = sequence_violation(A, seq)
    assert msg is not None and msg.startswith("condition 2")
    assert not validate_sequence(A, seq)
    with pytest.raises(InvalidSequenceError):
        require_valid(A, seq)


@enforce_types
def test_not_homomorphism():
    A = generate_family("loop_path_one_end", 2)
    # v1 -> v2 sends edge (v0, v1) to (v0, v2): not an edge
    phi = PartialAssignment({"v0": "v0", "v1": "v2", "v2": "v2"})
    seq = EndoSequence(A, [A.universe, ("v0", "v2")], [phi], 1)
    msg = sequence_violation(A, seq)
    assert msg is not None and msg.startswith("condition 1")


@enforce_types
def test_width_conditions():
    # K4 plus a looped hub joined to everything; fold K4 onto the hub
    vs = ["h", "a", "b", "c", "d"]
    quad = ["a", "b", "c", "d"]
    edges = [(u, v) for i, u in enumerate(quad) for v in quad[i + 1 :]]
    edges += [("h", v) for v in quad]
    A = graph_structure(vs, edges, ["h"], "K4+hub")
    phi = PartialAssignment({v: "h" for v in vs})
    seq = EndoSequence(A, [A.universe, ("h",)], [phi], 2)
    msg = sequence_violation(A, seq)
    assert msg is not None and msg.startswith("condition 3")

    seq3 = EndoSequence(A, [A.universe, ("h",)], [phi], 3)
    assert validate_sequence(A, seq3)

    # no folding at all: the last level is K5
    top = EndoSequence(A, [A.universe], [], 3)
    msg = sequence_violation(A, top)
    assert msg is not None and msg.startswith("condition 4")


@enforce_types
def test_well_formedness():
    A = generate_family("loop_path_one_end", 2)
    same = PartialAssignment({v: v for v in A.universe})
    seq = EndoSequence(A, [A.universe, A.universe], [same], 1)
    msg = sequence_violation(A, seq)
    assert msg is not None and "strict subset" in msg

    partial = PartialAssignment({"v0": "v0", "v1": "v1"})
    seq = EndoSequence(A, [A.universe, ("v0", "v1")], [partial], 1)
    msg = sequence_violation(A, seq)
    assert msg is not None and "defined exactly" in msg

    outside = PartialAssignment({"v0": "v0", "v1": "v1", "v2": "v2"})
    seq = EndoSequence(A, [A.universe, ("v0", "v1")], [outside], 1)
    msg = sequence_violation(A, seq)
    assert msg is not None and "outside level 1" in msg

    other = generate_family("loop_path_one_end", 2)
    seq = EndoSequence(other, [other.universe], [], 1)
    assert validate_sequence(A, seq)  # equal structures are interchangeable


@enforce_types
def test_constructor_errors():
    A = generate_family("loop_path_one_end", 2)
    with pytest.raises(InvalidSequenceError):
        EndoSequence(A, [], [], 0)
    with pytest.raises(InvalidSequenceError):
        EndoSequence(A, [A.universe, ("v0",)], [], 0)
    with pytest.raises(InvalidSequenceError):
        EndoSequence(A, [A.universe], [], -1)
    with pytest.raises(InvalidSequenceError):
        EndoSequence(A, [("v0", "zz")], [], 0)
    with pytest.raises(InvalidSequenceError):
        EndoSequence(A, [("v0", "v0", "v1", "v2")], [], 0)


@enforce_types
def test_sequence_arrays():
    seq = _loop_path_sequence(3)
    arrays = SequenceArrays(seq)
    assert arrays.level_idx[0].tolist() == [0, 1, 2, 3]
    assert arrays.diff_idx[0].tolist() == [3]
    assert arrays.maps[1].tolist() == [0, 1, 2, 1]
    assert arrays.maps[2].tolist() == [0, 1, 0, -1]
    # v3 -> v1 -> v1 -> v0
    assert arrays.composite(3).tolist() == [0, 0, 0, 0]
    assert np.array_equal(arrays.composite(1), arrays.maps[1])
    assert arrays.composite(2).tolist() == [0, 1, 0, 1]
    for i in range(4):
        assert arrays.diff_decomposition(i) is not None


@enforce_types
def test_str():
    s = str(_loop_path_sequence(2))
    assert "EndoSequence" in s and "width" in s
