"""
Conjunctive-query evaluation over a bounded tree width source.

Enumerates the distinct restrictions h|Y of homomorphisms h: A -> B, in
lexicographic order (Y's order, then B's universe order). Values for
y_1, y_2, ... are tried one position at a time and kept only if the prefix
still extends to a homomorphism of all of A, so every kept prefix has an
output below it and the search only backs up after an output.
"""
import logging
from typing import Dict, Iterator, List, Optional, Union

from enforce_typing import enforce_types

from homenum.extension.ext_solver import ExtensionSolver
from homenum.structures.assignment import PartialAssignment
from homenum.structures.structure import Structure, check_same_vocabulary, index_gaifman_graph
from homenum.treewidth.decompose import decompose_graph
from homenum.treewidth.tree_decomp import TreeDecomposition
from homenum.util.errors import WidthExceededError
from homenum.util.strutil import StrMixin

logger = logging.getLogger(__name__)


class CqeInstance(StrMixin):
    """Source A, target B and the ordered projection list Y"""

    __STR_OMIT__ = ["source", "target"]

    @enforce_types
    def __init__(self, source: Structure, target: Structure, projection: Union[list, tuple]):
        check_same_vocabulary(source, target)
        Y = tuple(projection)
        if len(set(Y)) != len(Y):
            raise ValueError(f"projection repeats an element: {Y}")
        unknown = [y for y in Y if y not in source.index]
        if unknown:
            raise ValueError(f"projection names non-elements of {source.name}: {unknown}")
        self.source = source
        self.target = target
        self.projection = Y

    @property
    def ell(self) -> int:
        return len(self.projection)


class CqeTrace:
    """Backtracking bookkeeping: per_output[i] is the number of times the
    prefix got shorter between output i-1 and output i (the step right after
    an output not counted); `tail` counts those after the last output."""

    def __init__(self):
        self.per_output: List[int] = []
        self.tail = 0

    def backtrack(self):
        self.tail += 1

    def emitted(self):
        self.per_output.append(self.tail)
        self.tail = 0

    @property
    def max_charge(self) -> int:
        return max(self.per_output + [self.tail])


def iter_cqe(
    inst: CqeInstance,
    k: int,
    trace: Optional[CqeTrace] = None,
    td: Optional[TreeDecomposition] = None,
) -> Iterator[PartialAssignment]:
    """
    Yield each extendible map Y -> B once, lexicographically.

    Raises WidthExceededError up front if tw(A) > k. A caller-supplied td
    must be a valid decomposition of A over element indices, of width <= k.
    """
    A, B, Y = inst.source, inst.target, inst.projection
    if td is None:
        td = decompose_graph(index_gaifman_graph(A), k)
        if td is None:
            raise WidthExceededError(k, A.name)
    elif td.width > k:
        raise WidthExceededError(k, f"the decomposition given for {A.name}")
    solver = ExtensionSolver(A, B, range(len(A)))
    yidx = [A.index[y] for y in Y]
    ell, nB = len(Y), len(B)
    logger.debug("cqe %s -> %s, |Y|=%d, k=%d", A.name, B.name, ell, k)

    if ell == 0:
        if solver.decide({}, k, td):
            yield PartialAssignment({})
        return

    phi: Dict[int, int] = {}
    cursor = [0] * ell
    m = 0
    while m >= 0:
        if m == ell:
            yield PartialAssignment({Y[p]: B.universe[phi[yidx[p]]] for p in range(ell)})
            if trace is not None:
                trace.emitted()
            m -= 1
            continue
        y = yidx[m]
        phi.pop(y, None)
        found = False
        while cursor[m] < nB:
            phi[y] = cursor[m]
            cursor[m] += 1
            if solver.decide(phi, k, td, touching=[y]):
                found = True
                break
            del phi[y]
        if found:
            m += 1
            if m < ell:
                cursor[m] = 0
        else:
            m -= 1
            if trace is not None:
                trace.backtrack()


def cqe_enumerate(
    inst: CqeInstance,
    k: int,
    sink,
    trace: Optional[CqeTrace] = None,
    td: Optional[TreeDecomposition] = None,
) -> int:
    """Feed every answer of inst to sink; return how many there were"""
    count = 0
    for answer in iter_cqe(inst, k, trace, td):
        sink(answer)
        count += 1
    logger.info("cqe: %d answers", count)
    return count
