"""
Exhaustive cores and isomorphism checks, for small structures only.
"""
import itertools
import logging

from enforce_typing import enforce_types
import numpy as np

from homenum.oracle.brute import iter_hom_blocks
from homenum.structures.structure import Structure, induced_substructure
from homenum.util.constants import BRUTE_CORE_MAX
from homenum.util.errors import SizeGuardError

logger = logging.getLogger(__name__)


@enforce_types
def brute_force_core(A: Structure) -> Structure:
    """
    @description
      A core of A: the image of an endomorphism with the fewest distinct
      values. Among ties, the first endomorphism in lexicographic order.

    @arguments
      A -- structure with at most BRUTE_CORE_MAX elements

    @return
      core -- induced substructure of A, a core
    """
    n = len(A)
    if n > BRUTE_CORE_MAX:
        raise SizeGuardError(f"brute core: {n} elements > {BRUTE_CORE_MAX}")
    if n == 0:
        return A

    best_size, best_row = n + 1, None
    for block in iter_hom_blocks(A, A):
        srt = np.sort(block, axis=1)
        sizes = 1 + (np.diff(srt, axis=1) != 0).sum(axis=1)
        i = int(np.argmin(sizes))
        if sizes[i] < best_size:
            best_size, best_row = int(sizes[i]), block[i]
        if best_size == 1:
            break
    assert best_row is not None, "the identity is always an endomorphism"
    image = {A.universe[int(x)] for x in best_row}
    logger.debug("%s: core of size %d", A.name, best_size)
    return induced_substructure(A, image, f"{A.name}.core")


@enforce_types
def are_isomorphic(A: Structure, B: Structure) -> bool:
    """Brute-force bijection search; at most BRUTE_CORE_MAX elements"""
    if A.vocabulary != B.vocabulary or len(A) != len(B):
        return False
    if len(A) > BRUTE_CORE_MAX:
        raise SizeGuardError(f"isomorphism: {len(A)} elements > {BRUTE_CORE_MAX}")
    names = A.vocabulary.names
    if any(len(A.int_sets[rel]) != len(B.int_sets[rel]) for rel in names):
        return False
    for perm in itertools.permutations(range(len(B))):
        # equal table sizes: an injective tuple map is onto
        if all(
            tuple(perm[x] for x in tup) in B.int_sets[rel]
            for rel in names
            for tup in A.int_sets[rel]
        ):
            return True
    return False
