"""
Public entry points for homomorphism extension.

Both operations check the width precondition on the Gaifman graph of
A[region] induced on the free elements, and reject seeds that are not
partial homomorphisms.
"""
import logging
from typing import Optional, Tuple

from enforce_typing import enforce_types

from homenum.extension.ext_query import ExtensionQuery
from homenum.extension.ext_solver import ExtensionSolver
from homenum.structures.assignment import (
    PartialAssignment,
    from_index_dict,
    to_index_array,
    to_index_dict,
    violated_tuple,
)
from homenum.structures.structure import index_gaifman_graph
from homenum.treewidth.decompose import decompose_graph
from homenum.treewidth.tree_decomp import TreeDecomposition
from homenum.util.errors import NotAHomomorphismError, WidthExceededError

logger = logging.getLogger(__name__)


@enforce_types
def homomorphism_ext(q: ExtensionQuery, k: int) -> bool:
    """
    @description
      Decide whether q.seed extends to a homomorphism A[region] -> B.

    @arguments
      q -- ExtensionQuery
      k -- width bound on the free part of the region

    @return
      verdict -- bool

    @notes
      Raises WidthExceededError if tw(G[region \\ fixed]) > k, and
      NotAHomomorphismError if the seed already breaks a tuple.
    """
    solver, seed, td = _prepare(q, k)
    return solver.decide(seed, k, td)


@enforce_types
def first_extension(q: ExtensionQuery, k: int) -> Optional[PartialAssignment]:
    """Least extending homomorphism on the region (free elements in universe
    order, each taking the least possible target value), or None"""
    solver, seed, td = _prepare(q, k)
    found = solver.first(seed, k, td)
    if found is None:
        return None
    return from_index_dict(found, q.source, q.target)


def _prepare(q: ExtensionQuery, k: int) -> Tuple[ExtensionSolver, dict, TreeDecomposition]:
    A, B = q.source, q.target
    region = {A.index[x] for x in q.region}
    free = {A.index[x] for x in q.free}
    seed = to_index_dict(q.seed, A, B)

    solver = ExtensionSolver(A, B, region)
    if not solver.seed_ok(seed):
        bad = violated_tuple(to_index_array(q.seed, A, B), A, B)
        where = "" if bad is None else f": {bad[0]} {' '.join(bad[1])} leaves {B.name}"
        raise NotAHomomorphismError(
            f"seed {q.seed} is not a homomorphism of {A.name}[fixed set] to {B.name}{where}"
        )

    td = decompose_graph(index_gaifman_graph(A, region=region, vertices=free), k)
    if td is None:
        raise WidthExceededError(k, f"the free part of the region of {A.name}")
    logger.debug("extension: %d free elements, td width %d", len(free), td.width)
    return solver, seed, td
