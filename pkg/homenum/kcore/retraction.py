"""
k-retractions and k-cores.

A k-retraction of A is an endomorphism that is the identity on its image
and moves at most k elements. Moved elements land outside the moved set,
so a search only has to map a candidate set S into A \\ S and check the
tuples that touch S. A k-core is reached by applying k-retractions until
only the identity is left; all k-cores of A are isomorphic, so the order
of the scan only fixes which one we get.
"""
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from enforce_typing import enforce_types

from homenum.endoseq.endo_sequence import EndoSequence, sequence_violation
from homenum.structures.assignment import PartialAssignment
from homenum.structures.structure import Structure, induced_substructure
from homenum.treewidth.decompose import decompose
from homenum.util.errors import InvalidSequenceError, WidthExceededError
from homenum.util.strutil import StrMixin

logger = logging.getLogger(__name__)

IntTuple = Tuple[int, ...]


class Retraction(StrMixin):
    """A retraction of one structure: `mapping` is total on its universe,
    `moved` lists the elements it does not fix, in universe order"""

    __STR_OMIT__ = ["mapping"]

    @enforce_types
    def __init__(self, mapping: PartialAssignment, moved: tuple):
        self.mapping = mapping
        self.moved = moved

    @property
    def image(self) -> frozenset:
        return frozenset(dst for _, dst in self.mapping.items())


def _colex_subsets(n: int, k: int) -> Iterator[IntTuple]:
    """Nonempty subsets of range(n) with at most k elements, ascending tuples,
    in increasing bitmask order"""

    def below(m: int, size: int) -> Iterator[IntTuple]:
        yield ()
        if size == 0:
            return
        for top in range(m):
            for rest in below(top, size - 1):
                yield rest + (top,)

    for top in range(n):
        for rest in below(top, k - 1):
            yield rest + (top,)


def _assign_outside(A: Structure, S: IntTuple) -> Optional[Dict[int, int]]:
    """Least map S -> A \\ S (S in order, targets ascending) that makes the
    identity-elsewhere extension an endomorphism; None if there is none"""
    inside = set(S)
    outside = [y for y in range(len(A)) if y not in inside]
    if not outside:
        return None
    pos = {x: p for p, x in enumerate(S)}

    # tuples touching S, filed under the last S position they contain
    checks: List[List[Tuple[str, IntTuple]]] = [[] for _ in S]
    inc = A.incidence()
    seen = set()
    for x in S:
        for rel, tup in inc[x]:
            if (rel, tup) in seen:
                continue
            seen.add((rel, tup))
            last = max(pos[y] for y in tup if y in inside)
            checks[last].append((rel, tup))

    g: Dict[int, int] = {}

    def search(p: int) -> bool:
        if p == len(S):
            return True
        x = S[p]
        for y in outside:
            g[x] = y
            if all(
                tuple(g.get(z, z) for z in tup) in A.int_sets[rel] for rel, tup in checks[p]
            ):
                if search(p + 1):
                    return True
        del g[x]
        return False

    return dict(g) if search(0) else None


@enforce_types
def find_k_retraction(A: Structure, k: int) -> Optional[Retraction]:
    """
    @description
      First non-identity k-retraction of A in scan order: moved sets in
      increasing bitmask order over universe indices, then targets in
      universe order.

    @arguments
      A -- structure
      k -- bound on the number of moved elements, >= 1

    @return
      retraction -- Retraction, or None if A is a k-core
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    for S in _colex_subsets(len(A), k):
        g = _assign_outside(A, S)
        if g is None:
            continue
        values = {x: A.universe[g.get(i, i)] for i, x in enumerate(A.universe)}
        moved = tuple(A.universe[i] for i in S)
        logger.debug("%s: %d-retraction moving %s", A.name, k, moved)
        return Retraction(PartialAssignment(values), moved)
    return None


@enforce_types
def k_core(A: Structure, k: int) -> Tuple[Structure, List[Retraction]]:
    """Apply k-retractions until none is left. Returns the k-core and the
    steps; step i is a retraction of the structure left after step i-1."""
    current = A
    steps: List[Retraction] = []
    while True:
        r = find_k_retraction(current, k)
        if r is None:
            break
        steps.append(r)
        current = induced_substructure(current, r.image, f"{A.name}.core")
    logger.info(
        "%s: %d-core has %d of %d elements after %d steps",
        A.name, k, len(current), len(A), len(steps),
    )
    return current, steps


@enforce_types
def is_k_core(A: Structure, k: int) -> bool:
    return find_k_retraction(A, k) is None


@enforce_types
def sequence_from_retractions(A: Structure, steps: List[Retraction], k: int) -> EndoSequence:
    """
    @description
      Turn a k-retraction chain of A into a width-k endomorphism sequence:
      A_i is the image after i steps and phi_i is step i.

    @arguments
      A -- structure the chain starts from
      steps -- retractions, each of the structure the previous one left
      k -- width

    @return
      seq -- valid EndoSequence

    @notes
      Raises InvalidSequenceError for a broken chain and WidthExceededError
      if the last structure has tree width above k.
    """
    levels: List[tuple] = [A.universe]
    for i, r in enumerate(steps, start=1):
        upper = levels[-1]
        if r.mapping.domain != frozenset(upper):
            raise InvalidSequenceError(f"step {i} is not defined exactly on level {i - 1}")
        if len(r.moved) > k:
            raise InvalidSequenceError(f"step {i} moves {len(r.moved)} > {k} elements")
        image = r.image
        if any(r.mapping[x] != x for x in image):
            raise InvalidSequenceError(f"step {i} is not the identity on its image")
        levels.append(tuple(x for x in upper if x in image))

    last = induced_substructure(A, levels[-1])
    if decompose(last, k) is None:
        raise WidthExceededError(k, f"the final structure of {A.name}")
    seq = EndoSequence(A, levels, [r.mapping for r in steps], k)
    msg = sequence_violation(A, seq)
    if msg is not None:
        raise InvalidSequenceError(msg)
    return seq
