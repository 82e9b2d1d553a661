"""
Index, factors and elementary homomorphisms of an endomorphism sequence.

A homomorphism psi of A[A_t] is reducible when psi = psi' ∘ phi_{t+1} for a
homomorphism psi' of A[A_{t+1}], ie psi is constant on every fiber of
phi_{t+1} and the induced psi' is a homomorphism. Otherwise (and always at
the last level n) it is elementary.

ElementaryExt decides whether a partial map extends to an elementary
homomorphism: an extension is elementary iff it breaks fiber constancy
(two elements of one fiber apart) or makes psi' miss a tuple of A[A_{t+1}]
(the image of that tuple then has a bad prefix). Each way of doing so is
pinned as extra fixed points and handed to the extension solver.
"""
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from enforce_typing import enforce_types
import numpy as np

from homenum.endoseq.bad_prefix import bad_prefix_index
from homenum.endoseq.endo_sequence import EndoSequence, SequenceArrays, require_valid
from homenum.extension.ext_solver import ExtensionSolver
from homenum.structures.assignment import (
    PartialAssignment,
    from_index_array,
    is_hom_array,
    is_homomorphism,
    to_index_array,
    to_index_dict,
)
from homenum.structures.structure import (
    Structure,
    check_same_vocabulary,
    index_gaifman_graph,
)
from homenum.treewidth.decompose import decompose_graph
from homenum.treewidth.tree_decomp import TreeDecomposition
from homenum.util.errors import NotAHomomorphismError, WidthExceededError
from homenum.util.mathutil import encode_rows

logger = logging.getLogger(__name__)


def push_down(
    psi: np.ndarray, t: int, arrays: SequenceArrays, A: Structure, B: Structure
) -> Optional[np.ndarray]:
    """The factor psi' with psi = psi' ∘ phi_{t+1} on A_t, if psi is constant
    on the fibers of phi_{t+1} and psi' is a homomorphism; else None"""
    src = arrays.level_idx[t]
    dst = arrays.maps[t + 1][src]
    out = np.full(arrays.size, -1, dtype=np.int64)
    out[dst] = psi[src]
    if (out[dst] != psi[src]).any():
        return None
    if not is_hom_array(out, A, B):
        return None
    return out


def factor_scan(
    psi: np.ndarray, start: int, arrays: SequenceArrays, A: Structure, B: Structure
) -> Tuple[int, np.ndarray]:
    """Push psi (a homomorphism of A[A_start]) down as far as it factors"""
    t = start
    while t < arrays.seq.n:
        lower = push_down(psi, t, arrays, A, B)
        if lower is None:
            break
        psi, t = lower, t + 1
    return t, psi


def parent_array(
    psi: np.ndarray, t: int, arrays: SequenceArrays, A: Structure, B: Structure
) -> Optional[Tuple[int, np.ndarray]]:
    """Parent (level, factor) of an elementary psi at level t < n; None at level n"""
    if t == arrays.seq.n:
        return None
    lower = np.full(arrays.size, -1, dtype=np.int64)
    below = arrays.level_idx[t + 1]
    lower[below] = psi[below]
    return factor_scan(lower, t + 1, arrays, A, B)


def _check_hom_on(psi: PartialAssignment, level: tuple, A: Structure, B: Structure):
    if psi.domain != frozenset(level):
        raise ValueError("map must be defined exactly on the level")
    if not is_homomorphism(psi, A, B):
        raise NotAHomomorphismError(f"{psi} is not a homomorphism to {B.name}")


@enforce_types
def index_of(
    phi: PartialAssignment, seq: EndoSequence, B: Structure
) -> Tuple[int, PartialAssignment]:
    """
    @description
      Index of a homomorphism phi: A -> B, ie the largest t with
      phi = psi ∘ phi_t ∘ ... ∘ phi_1 for a homomorphism psi of A[A_t].

    @arguments
      phi -- homomorphism A -> B
      seq -- endomorphism sequence of A, well formed
      B -- target structure

    @return
      t -- index, 0..n
      psi -- the unique factor, defined on A_t
    """
    A = seq.source
    _check_hom_on(phi, A.universe, A, B)
    arrays = SequenceArrays(seq)
    t, psi = factor_scan(to_index_array(phi, A, B), 0, arrays, A, B)
    return t, from_index_array(psi, A, B)


@enforce_types
def is_elementary(psi: PartialAssignment, t: int, seq: EndoSequence, B: Structure) -> bool:
    """True iff the homomorphism psi of A[A_t] does not factor through
    phi_{t+1}. Homomorphisms of the last level are elementary."""
    A = seq.source
    _check_hom_on(psi, seq.level(t), A, B)
    if t == seq.n:
        return True
    arrays = SequenceArrays(seq)
    return push_down(to_index_array(psi, A, B), t, arrays, A, B) is None


@enforce_types
def parent_of(
    psi: PartialAssignment, t: int, seq: EndoSequence, B: Structure
) -> Optional[Tuple[int, PartialAssignment]]:
    """Parent of an elementary homomorphism psi at level t < n: the factor of
    psi restricted to A_{t+1}, pushed down as far as it goes. None at level n."""
    A = seq.source
    _check_hom_on(psi, seq.level(t), A, B)
    arrays = SequenceArrays(seq)
    found = parent_array(to_index_array(psi, A, B), t, arrays, A, B)
    if found is None:
        return None
    level, factor = found
    return level, from_index_array(factor, A, B)


class ElementaryExt:
    """Elementary-extension decisions at every level of one valid sequence"""

    def __init__(self, seq: EndoSequence, B: Structure, arrays: Optional[SequenceArrays] = None):
        check_same_vocabulary(seq.source, B)
        self.seq = seq
        self.A = seq.source
        self.B = B
        self.arrays = arrays if arrays is not None else SequenceArrays(seq)
        self.bad = bad_prefix_index(B)
        self._solvers: Dict[int, ExtensionSolver] = {}
        self._fibers: Dict[int, Dict[int, List[int]]] = {}
        self._lower: Dict[int, List[Tuple[str, np.ndarray]]] = {}

    def solver(self, t: int) -> ExtensionSolver:
        if t not in self._solvers:
            region = self.arrays.level_idx[t].tolist()
            self._solvers[t] = ExtensionSolver(self.A, self.B, region)
        return self._solvers[t]

    def fibers(self, t: int) -> Dict[int, List[int]]:
        """Fibers of phi_{t+1}: z in A_{t+1} -> ascending x in A_t with phi(x) = z"""
        if t not in self._fibers:
            phi = self.arrays.maps[t + 1]
            fib: Dict[int, List[int]] = {}
            for x in self.arrays.level_idx[t].tolist():
                fib.setdefault(int(phi[x]), []).append(x)
            self._fibers[t] = fib
        return self._fibers[t]

    def lower_tuples(self, t: int) -> List[Tuple[str, np.ndarray]]:
        """Tuples of A[A_{t+1}], per symbol, as index arrays"""
        if t not in self._lower:
            inside = np.zeros(self.arrays.size, dtype=bool)
            inside[self.arrays.level_idx[t + 1]] = True
            out = []
            for rel in self.A.vocabulary.names:
                rows = self.A.table_array(rel)
                if rows.shape[0]:
                    rows = rows[inside[rows].all(axis=1)]
                if rows.shape[0]:
                    out.append((rel, rows))
            self._lower[t] = out
        return self._lower[t]

    def ext(
        self,
        t: int,
        g: Dict[int, int],
        td: Optional[TreeDecomposition] = None,
        touching: Optional[Iterable[int]] = None,
    ) -> bool:
        """
        True iff g (element index -> target index, inside A_t) extends to an
        elementary homomorphism of A[A_t].

        td must cover A_t minus g's domain; by default the decomposition of
        level t's difference set, which does whenever g's domain holds A_{t+1}.
        `touching` limits the seed check, as in ExtensionSolver.seed_ok().
        """
        k = self.seq.width
        if td is None:
            td = self.arrays.diff_decomposition(t)
            assert td is not None, "sequence was validated"
        solver = self.solver(t)
        if not solver.seed_ok(g, touching):
            return False
        if not solver.decide(g, k, td, touching=()):
            return False
        if t == self.seq.n:
            return True

        branches = self._branches(t, g)
        if branches is None:
            return True
        for pins in branches:
            seed = dict(g)
            seed.update(pins)
            if solver.decide(seed, k, td, touching=list(pins)):
                return True
        return False

    def _branches(self, t: int, g: Dict[int, int]) -> Optional[List[Dict[int, int]]]:
        """Pin sets, one per way an extension of g can turn out elementary.
        None when every homomorphic extension of g is elementary already."""
        # pylint: disable=too-many-branches,too-many-locals
        size, nB = self.arrays.size, len(self.B)
        phi = self.arrays.maps[t + 1]

        # fiber values fixed by g; two different ones lock non-constancy in
        val = np.full(size, -1, dtype=np.int64)
        if g:
            keys = np.fromiter(g.keys(), dtype=np.int64, count=len(g))
            vals = np.fromiter(g.values(), dtype=np.int64, count=len(g))
            z = phi[keys]
            val[z] = vals
            if (val[z] != vals).any():
                return None

        # a tuple of A[A_{t+1}] whose fixed fiber values already leave B
        open_rows: List[Tuple[str, np.ndarray]] = []
        for rel, rows in self.lower_tuples(t):
            img = val[rows]
            full = (img >= 0).all(axis=1)
            if full.any():
                if not np.isin(encode_rows(img[full], max(nB, 1)), self.B.codes(rel)).all():
                    return None
            if not full.all():
                open_rows.append((rel, rows[~full]))

        branches: List[Dict[int, int]] = []
        seen: Set[FrozenSet[Tuple[int, int]]] = set()

        def add(pins: Dict[int, int]):
            key = frozenset(pins.items())
            if key not in seen:
                seen.add(key)
                branches.append(pins)

        # (a) two elements of one fiber get different values
        groups: Dict[int, List[int]] = {}
        for x in self.arrays.level_idx[t].tolist():
            if x not in g:
                groups.setdefault(int(phi[x]), []).append(x)
        for zz in sorted(groups):
            ys, c = groups[zz], int(val[zz])
            if c >= 0:
                for y in ys:
                    for v in range(nB):
                        if v != c:
                            add({y: v})
            else:
                x0 = ys[0]
                for y in ys[1:]:
                    for u in range(nB):
                        for v in range(nB):
                            if u != v:
                                add({x0: u, y: v})

        # (b) the induced map sends a tuple of A[A_{t+1}] onto a bad prefix
        fibers = self.fibers(t)
        for rel, rows in open_rows:
            for row in rows.tolist():
                for prefix in self.bad[rel]:
                    pins: Dict[int, int] = {}
                    ok = True
                    for zz, b in zip(row, prefix):
                        c = int(val[zz])
                        if c >= 0:
                            ok = c == b
                        else:
                            rep = fibers[zz][0]
                            ok = pins.setdefault(rep, b) == b
                        if not ok:
                            break
                    if ok:
                        if not pins:
                            return None  # already bad whatever the rest does
                        add(pins)
        return branches


@enforce_types
def elementary_ext(
    t: int,
    X: list,
    g0: PartialAssignment,
    seq: EndoSequence,
    B: Structure,
) -> bool:
    """
    @description
      Decide whether g0 extends to an elementary homomorphism of A[A_t].

    @arguments
      t -- level, 0..n
      X -- subset of A_t, the domain of g0
      g0 -- partial map X -> B
      seq -- valid width-k endomorphism sequence of A
      B -- target structure

    @return
      verdict -- bool

    @notes
      Raises WidthExceededError if the Gaifman graph of A[A_t] on A_t \\ X
      has tree width above k, NotAHomomorphismError if g0 is not a partial
      homomorphism.
    """
    A = seq.source
    require_valid(A, seq)
    level = seq.level(t)
    if not set(X) <= set(level):
        raise ValueError(f"X is not a subset of level {t}")
    if g0.domain != frozenset(X):
        raise ValueError("g0 must be defined exactly on X")

    ctx = ElementaryExt(seq, B)
    g = to_index_dict(g0, A, B)
    if not ctx.solver(t).seed_ok(g):
        raise NotAHomomorphismError(f"{g0} is not a partial homomorphism to {B.name}")
    region = set(ctx.arrays.level_idx[t].tolist())
    free = region - set(g)
    td = decompose_graph(index_gaifman_graph(A, region=region, vertices=free), seq.width)
    if td is None:
        raise WidthExceededError(seq.width, f"level {t} minus X")
    return ctx.ext(t, g, td, touching=())
