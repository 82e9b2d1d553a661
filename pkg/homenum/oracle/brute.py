"""
Exponential-time reference implementations. Test and debugging use only.

Every routine has a hard size guard and raises SizeGuardError past it;
nothing here ever samples.
"""
import itertools
import logging
from typing import Iterator, List, Set, Union

from enforce_typing import enforce_types
import networkx as nx
import numpy as np

from homenum.structures.assignment import PartialAssignment, from_index_array
from homenum.structures.structure import Structure, check_same_vocabulary
from homenum.util.constants import BRUTE_TW_MAX
from homenum.util.env import oracle_max_maps
from homenum.util.errors import SizeGuardError
from homenum.util.mathutil import encode_rows

logger = logging.getLogger(__name__)

CHUNK = 1 << 16  # maps checked per numpy batch


def iter_brute_homs(A: Structure, B: Structure) -> Iterator[PartialAssignment]:
    """All homomorphisms A -> B in lexicographic order: A's first element is
    the most significant digit, values in B's universe order"""
    if len(A) == 0:
        check_same_vocabulary(A, B)
        yield PartialAssignment({})
        return
    for block in iter_hom_blocks(A, B):
        for row in block:
            yield from_index_array(row, A, B)


def iter_hom_blocks(A: Structure, B: Structure) -> Iterator[np.ndarray]:
    """Homomorphisms A -> B as rows of int arrays over A's indices, in the
    order of iter_brute_homs(), one array per batch of CHUNK candidate maps.
    Nothing is yielded for an empty A."""
    check_same_vocabulary(A, B)
    nA, nB = len(A), len(B)
    if nA == 0 or nB == 0:
        return
    total = nB**nA
    if total > oracle_max_maps():
        raise SizeGuardError(
            f"brute force over {nB}^{nA} = {total} maps exceeds "
            f"HOMENUM_ORACLE_MAX_MAPS={oracle_max_maps()}"
        )
    logger.debug("brute force over %d maps %s -> %s", total, A.name, B.name)

    for start in range(0, total, CHUNK):
        rem = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        maps = np.empty((rem.shape[0], nA), dtype=np.int64)
        for x in reversed(range(nA)):
            maps[:, x] = rem % nB
            rem = rem // nB
        ok = np.ones(maps.shape[0], dtype=bool)
        for rel in A.vocabulary.names:
            targets = B.codes(rel)
            for tup in A.table_array(rel):
                ok &= np.isin(encode_rows(maps[:, tup], nB), targets)
        if ok.any():
            yield maps[ok]


@enforce_types
def brute_homs(A: Structure, B: Structure) -> Set[PartialAssignment]:
    """
    @description
      Exact set of homomorphisms A -> B, by checking all |B|^|A| maps.

    @arguments
      A -- source structure
      B -- target structure, same vocabulary

    @return
      homs -- set of PartialAssignment, each total on A

    @notes
      Raises SizeGuardError if |B|^|A| > HOMENUM_ORACLE_MAX_MAPS.
    """
    return set(iter_brute_homs(A, B))


@enforce_types
def brute_projections(
    A: Structure, B: Structure, Y: Union[list, tuple]
) -> Set[PartialAssignment]:
    """{h restricted to Y : h a homomorphism A -> B}"""
    return {h.restrict(Y) for h in iter_brute_homs(A, B)}


@enforce_types
def brute_treewidth(G: nx.Graph) -> int:
    """Tree width as the best elimination ordering over all permutations.
    -1 for the empty graph. Self-loops are ignored."""
    n = G.number_of_nodes()
    if n > BRUTE_TW_MAX:
        raise SizeGuardError(f"brute tree width: {n} vertices > {BRUTE_TW_MAX}")
    if n == 0:
        return -1
    nodes = list(G.nodes)
    adj = {v: {u for u in G[v] if u != v} for v in nodes}
    best = n - 1
    for order in itertools.permutations(nodes):
        best = min(best, _order_width(adj, list(order)))
        if best == 0:
            break
    return best


def _order_width(adj: dict, order: List) -> int:
    work = {v: set(nbrs) for v, nbrs in adj.items()}
    width = 0
    for v in order:
        nbrs = work.pop(v)
        width = max(width, len(nbrs))
        for a in nbrs:
            work[a] |= nbrs - {a}
            work[a].discard(v)
    return width
