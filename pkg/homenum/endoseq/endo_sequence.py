"""
Width-k endomorphism sequences A = A_0 ⊋ A_1 ⊋ ... ⊋ A_n with level maps
phi_i : A[A_{i-1}] -> A[A_i].

A sequence is valid when
  condition 0: it is well formed (A_0 = A, strict chain, nonempty A_n,
    phi_i total on A_{i-1} with values in A_i);
  condition 1: each phi_i is a homomorphism A[A_{i-1}] -> A[A_i];
  condition 2: each phi_i maps onto A_i;
  condition 3: tw(G[A_i \\ A_{i+1}]) <= k for 0 <= i < n, G the Gaifman graph of A;
  condition 4: tw(A[A_n]) <= k.

A_{i,j} is A_{i+1} plus the first j elements of A_i \\ A_{i+1}, in the
universe order of A. For i = n it is the first j elements of A_n.
"""
import logging
from typing import List, Optional

from enforce_typing import enforce_types
import numpy as np

from homenum.structures.assignment import PartialAssignment, is_hom_array
from homenum.structures.structure import Structure, index_gaifman_graph
from homenum.treewidth.decompose import decompose, decompose_graph
from homenum.treewidth.tree_decomp import TreeDecomposition
from homenum.util.errors import InvalidSequenceError, WidthExceededError
from homenum.util.strutil import StrMixin

logger = logging.getLogger(__name__)


class EndoSequence(StrMixin):
    """Levels A_0..A_n (element ids, universe order) and maps phi_1..phi_n.

    maps[i-1] is phi_i. Well-formedness beyond matching lengths and known
    elements is left to validate_sequence().
    """

    __STR_OMIT__ = ["source", "levels", "maps", "ordering"]

    @enforce_types
    def __init__(
        self,
        source: Structure,
        levels: List[tuple],
        maps: List[PartialAssignment],
        width: int,
    ):
        if not levels:
            raise InvalidSequenceError("condition 0: a sequence needs at least level 0")
        if len(maps) != len(levels) - 1:
            raise InvalidSequenceError(
                f"condition 0: {len(levels)} levels need {len(levels) - 1} maps, "
                f"got {len(maps)}"
            )
        if width < 0:
            raise InvalidSequenceError(f"width must be >= 0, got {width}")
        norm: List[tuple] = []
        for i, level in enumerate(levels):
            unknown = sorted(set(level) - set(source.index))
            if unknown:
                raise InvalidSequenceError(
                    f"condition 0: level {i} has non-elements {unknown}"
                )
            if len(set(level)) != len(level):
                raise InvalidSequenceError(f"condition 0: level {i} repeats an element")
            norm.append(tuple(sorted(level, key=source.index.__getitem__)))

        self.source = source
        self.levels = norm
        self.maps = list(maps)
        self.width = width

    @property
    def n(self) -> int:
        return len(self.maps)

    @property
    def ordering(self) -> tuple:
        return self.source.universe

    def level(self, i: int) -> tuple:
        return self.levels[i]

    def phi(self, i: int) -> PartialAssignment:
        """phi_i, 1 <= i <= n"""
        assert 1 <= i <= self.n, i
        return self.maps[i - 1]

    def diff(self, i: int) -> tuple:
        """A_i \\ A_{i+1} in universe order; all of A_n for i = n"""
        if i == self.n:
            return self.levels[i]
        below = set(self.levels[i + 1])
        return tuple(x for x in self.levels[i] if x not in below)

    def block(self, i: int, j: int) -> tuple:
        """A_{i,j}, in universe order"""
        d = self.diff(i)
        assert 0 <= j <= len(d), (i, j)
        keep = set(d[:j]) | (set(self.levels[i + 1]) if i < self.n else set())
        return tuple(x for x in self.levels[i] if x in keep)


@enforce_types
def sequence_violation(A: Structure, seq: EndoSequence) -> Optional[str]:
    """
    @description
      Check conditions 0-4 in order.

    @arguments
      A -- structure the sequence claims to be for
      seq -- EndoSequence

    @return
      msg -- None if valid, else a message naming the first violated condition
    """
    # pylint: disable=too-many-return-statements
    if seq.source != A:
        return "condition 0: sequence was built for a different structure"
    if seq.levels[0] != A.universe:
        return "condition 0: level 0 must be the whole universe"
    for i in range(1, seq.n + 1):
        upper, lower = set(seq.levels[i - 1]), set(seq.levels[i])
        if not lower < upper:
            return f"condition 0: level {i} is not a strict subset of level {i - 1}"
    if A.universe and not seq.levels[-1]:
        return f"condition 0: last level {seq.n} is empty"
    for i in range(1, seq.n + 1):
        phi, upper, lower = seq.phi(i), seq.levels[i - 1], set(seq.levels[i])
        if phi.domain != frozenset(upper):
            return f"condition 0: map {i} is not defined exactly on level {i - 1}"
        outside = sorted({dst for _, dst in phi.items() if dst not in lower})
        if outside:
            return f"condition 0: map {i} sends elements outside level {i}: {outside}"

    arrays = SequenceArrays(seq)
    for i in range(1, seq.n + 1):
        # values are elements of A: A plays both source and target
        if not is_hom_array(arrays.maps[i], A, A):
            return f"condition 1: map {i} is not a homomorphism of level {i - 1} to level {i}"
        image = set(arrays.maps[i][arrays.level_idx[i - 1]].tolist())
        if image != set(arrays.level_idx[i].tolist()):
            return f"condition 2: map {i} is not onto level {i}"

    k = seq.width
    for i in range(seq.n):
        if arrays.diff_decomposition(i) is None:
            return f"condition 3: tree width of level {i} minus level {i + 1} exceeds {k}"
    if arrays.diff_decomposition(seq.n) is None:
        return f"condition 4: tree width of the last level {seq.n} exceeds {k}"
    return None


@enforce_types
def validate_sequence(A: Structure, seq: EndoSequence) -> bool:
    msg = sequence_violation(A, seq)
    if msg is not None:
        logger.info("invalid endomorphism sequence: %s", msg)
    return msg is None


@enforce_types
def require_valid(A: Structure, seq: EndoSequence):
    """Raise InvalidSequenceError naming the first violated condition"""
    msg = sequence_violation(A, seq)
    if msg is not None:
        raise InvalidSequenceError(msg)


@enforce_types
def trivial_sequence(A: Structure, k: int) -> EndoSequence:
    """The n = 0 sequence. Raises WidthExceededError if tw(A) > k."""
    if decompose(A, k) is None:
        raise WidthExceededError(k, A.name)
    return EndoSequence(A, [A.universe], [], k)


class SequenceArrays:
    """Index-array form of a well-formed sequence (condition 0 holds).

    level_idx[i]: sorted element indices of A_i.
    maps[i]: phi_i over A's indices, -1 off A_{i-1}. maps[0] is unused.
    composite(i): phi_i ∘ ... ∘ phi_1, total on A.
    """

    def __init__(self, seq: EndoSequence):
        A = seq.source
        self.seq = seq
        self.size = len(A)
        self.level_idx: List[np.ndarray] = [
            np.array([A.index[x] for x in level], dtype=np.int64) for level in seq.levels
        ]
        self.diff_idx: List[np.ndarray] = [
            np.array([A.index[x] for x in seq.diff(i)], dtype=np.int64)
            for i in range(seq.n + 1)
        ]
        self.maps: List[np.ndarray] = [np.arange(self.size, dtype=np.int64)]
        for i in range(1, seq.n + 1):
            arr = np.full(self.size, -1, dtype=np.int64)
            for src, dst in seq.phi(i).items():
                arr[A.index[src]] = A.index[dst]
            self.maps.append(arr)
        self._composites: List[np.ndarray] = [np.arange(self.size, dtype=np.int64)]
        self._tds: dict = {}

    def composite(self, i: int) -> np.ndarray:
        while len(self._composites) <= i:
            t = len(self._composites)
            self._composites.append(self.maps[t][self._composites[t - 1]])
        return self._composites[i]

    def diff_decomposition(self, i: int) -> Optional[TreeDecomposition]:
        """Width-k decomposition over element indices of G[A_i \\ A_{i+1}]
        (i < n) or of A[A_n] (i = n); None past the width"""
        if i not in self._tds:
            A = self.seq.source
            verts = set(self.diff_idx[i].tolist())
            if i < self.seq.n:
                G = index_gaifman_graph(A, vertices=verts)
            else:
                G = index_gaifman_graph(A, region=verts)
            self._tds[i] = decompose_graph(G, self.seq.width)
        return self._tds[i]
