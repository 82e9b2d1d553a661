"""
Enumerate all homomorphisms A -> B along a valid endomorphism sequence.

Every homomorphism h factors uniquely as h = psi ∘ phi_t ∘ ... ∘ phi_1 with
psi elementary at level t (its index). Elementary homomorphisms form a tree:
the parent of psi at level t < n is the factor of psi restricted to A_{t+1},
pushed down as far as it goes. The enumerator walks that tree depth first,
building each node position by position over A_t \\ A_{t+1} and pruning with
ElementaryExt, so every prefix it keeps has an output below it.

Nodes at even depth are emitted before their children and nodes at odd
depth after them, which keeps the gap between two outputs bounded by a
constant number of tree steps.
"""
import logging
import sys
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from homenum.endoseq.elementary import ElementaryExt, parent_array
from homenum.endoseq.endo_sequence import EndoSequence, SequenceArrays, require_valid
from homenum.structures.assignment import (
    PartialAssignment,
    from_index_array,
    to_index_dict,
)
from homenum.structures.structure import Structure, check_same_vocabulary
from homenum.util.env import debug_mode

logger = logging.getLogger(__name__)

_UNKNOWN_PARENT = object()

ParentRef = Optional[Tuple[int, np.ndarray]]


class WpdEnumerator:
    """Depth-first walk over the tree of elementary homomorphisms"""

    def __init__(self, A: Structure, B: Structure, seq: EndoSequence):
        check_same_vocabulary(A, B)
        require_valid(A, seq)
        self.A = A
        self.B = B
        self.seq = seq
        self.arrays = SequenceArrays(seq)
        self.ctx = ElementaryExt(seq, B, self.arrays)
        self.check_parents = debug_mode()
        self.num_nodes = 0

        # nesting is one generator pair per level
        need = 4 * (seq.n + 1) + 1000
        if sys.getrecursionlimit() < need:
            sys.setrecursionlimit(need)

    def __iter__(self) -> Iterator[PartialAssignment]:
        n = self.seq.n
        logger.debug(
            "enumerating %s -> %s: %d levels, width %d",
            self.A.name, self.B.name, n + 1, self.seq.width,
        )
        if not self.ctx.ext(n, {}, touching=()):
            return
        yield from self.walk(n, 0, {}, 0, None)

    def walk(
        self, i: int, j: int, psi: Dict[int, int], depth: int, parent: Any
    ) -> Iterator[PartialAssignment]:
        """Outputs of every elementary homomorphism of level i extending psi,
        which is defined on A_{i,j} and known to extend elementarily."""
        diff = self.arrays.diff_idx[i].tolist()
        m, nB = len(diff), len(self.B)
        stack: List[Tuple[Dict[int, int], int]] = [(psi, 0)]
        while stack:
            pos = j + len(stack) - 1
            cur, b = stack[-1]
            if pos == m:
                stack.pop()
                yield from self._node(i, cur, depth, parent)
                continue
            if b == nB:
                stack.pop()
                continue
            stack[-1] = (cur, b + 1)
            x = diff[pos]
            nxt = dict(cur)
            nxt[x] = b
            if self.ctx.ext(i, nxt, touching=[x]):
                stack.append((nxt, 0))

    def _node(
        self, i: int, psi: Dict[int, int], depth: int, parent: Any
    ) -> Iterator[PartialAssignment]:
        self.num_nodes += 1
        psi_arr = np.full(self.arrays.size, -1, dtype=np.int64)
        if psi:
            psi_arr[list(psi)] = list(psi.values())
        if self.check_parents and parent is not _UNKNOWN_PARENT:
            self._check_parent(psi_arr, i, parent)

        if depth % 2 == 0:
            yield self._output(psi_arr, i)
            yield from self._children(psi_arr, i, depth)
        else:
            yield from self._children(psi_arr, i, depth)
            yield self._output(psi_arr, i)

    def _output(self, psi_arr: np.ndarray, i: int) -> PartialAssignment:
        return from_index_array(psi_arr[self.arrays.composite(i)], self.A, self.B)

    def _children(
        self, psi_arr: np.ndarray, i: int, depth: int
    ) -> Iterator[PartialAssignment]:
        arrays = self.arrays
        h = psi_arr
        for child in range(i - 1, -1, -1):
            # h = psi ∘ phi_i ∘ ... ∘ phi_{child+2}, on A_{child+1}
            if child < i - 1:
                src = arrays.level_idx[child + 1]
                nh = np.full(arrays.size, -1, dtype=np.int64)
                nh[src] = h[arrays.maps[child + 2][src]]
                h = nh
            g = {x: int(h[x]) for x in arrays.level_idx[child + 1].tolist()}
            if self.ctx.ext(child, g, touching=()):
                yield from self.walk(child, 0, g, depth + 1, (i, psi_arr))

    def _check_parent(self, psi_arr: np.ndarray, i: int, parent: ParentRef):
        found = parent_array(psi_arr, i, self.arrays, self.A, self.B)
        if parent is None:
            assert found is None, f"level {i} node should be a root"
            return
        assert found is not None, f"level {i} node lost its parent"
        assert found[0] == parent[0], (found[0], parent[0])
        assert np.array_equal(found[1], parent[1]), "parent factor mismatch"


def iter_wpd(A: Structure, B: Structure, seq: EndoSequence) -> Iterator[PartialAssignment]:
    """All homomorphisms A -> B, each once. Raises InvalidSequenceError
    up front if seq is not a valid sequence of A."""
    return iter(WpdEnumerator(A, B, seq))


def enumerate_wpd(A: Structure, B: Structure, seq: EndoSequence, sink: Callable) -> int:
    """
    @description
      Feed every homomorphism A -> B to sink, without repetition.

    @arguments
      A -- source structure
      B -- target structure, same vocabulary
      seq -- valid endomorphism sequence of A
      sink -- called once per homomorphism, with a PartialAssignment

    @return
      count -- number of homomorphisms emitted; 0 means there are none
    """
    count = 0
    for h in iter_wpd(A, B, seq):
        sink(h)
        count += 1
    logger.info("emitted %d homomorphisms %s -> %s", count, A.name, B.name)
    return count


def elementary_enum(
    i: int,
    j: int,
    psi: PartialAssignment,
    seq: EndoSequence,
    B: Structure,
    sink: Callable,
) -> int:
    """
    @description
      Emit the outputs of every elementary homomorphism of level i that
      extends psi, together with all their descendants.

    @arguments
      i -- level
      j -- position; psi is defined exactly on A_{i,j}
      psi -- partial map A_{i,j} -> B
      seq -- valid endomorphism sequence
      B -- target structure
      sink -- called once per output

    @return
      count -- number of outputs; 0 if psi does not extend elementarily
    """
    A = seq.source
    enum = WpdEnumerator(A, B, seq)
    if psi.domain != frozenset(seq.block(i, j)):
        raise ValueError(f"psi must be defined exactly on block ({i}, {j})")
    g = to_index_dict(psi, A, B)
    if not enum.ctx.ext(i, g):
        return 0
    count = 0
    for h in enum.walk(i, j, g, 0, None if i == seq.n else _UNKNOWN_PARENT):
        sink(h)
        count += 1
    return count
