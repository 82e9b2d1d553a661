"""
Exact tree decompositions of bounded width.

decompose_graph(G, k) answers "tw(G) <= k?" exactly and, when yes, builds
a decomposition of width <= k from an elimination ordering:

1. per connected component, eliminate vertices that are simplicial or
   almost simplicial with degree <= k (eliminating those keeps the rest a
   minor of the original graph, so no answer is lost);
2. reject if the degeneracy of what is left exceeds k;
3. search the remaining kernel over sets S of already-eliminated vertices:
   v may go next iff |Q(S, v)| <= k, where Q(S, v) is the set of vertices
   outside S ∪ {v} reachable from v through S. Dead sets are memoized.
"""
import logging
from typing import Dict, Hashable, List, Optional, Set

from enforce_typing import enforce_types
import networkx as nx

from homenum.structures.structure import Structure, gaifman_graph
from homenum.treewidth.tree_decomp import TreeDecomposition
from homenum.util.env import tw_max_exact
from homenum.util.errors import SizeGuardError

logger = logging.getLogger(__name__)


@enforce_types
def decompose(A: Structure, k: int) -> Optional[TreeDecomposition]:
    """
    @description
      Exact bounded-width decomposition of A's Gaifman graph.

    @arguments
      A -- structure
      k -- width bound, >= 0

    @return
      d -- TreeDecomposition of width <= k over element ids, bags sorted
        in universe order, root at node 0; or None if tw(A) > k
    """
    return decompose_graph(gaifman_graph(A), k)


@enforce_types
def treewidth(A: Structure) -> int:
    """Exact tree width of A (-1 for the empty structure)"""
    G = gaifman_graph(A)
    for k in range(max(len(A), 1)):
        d = decompose_graph(G, k)
        if d is not None:
            return d.width
    raise AssertionError("unreachable: one bag of everything has width |A|-1")


@enforce_types
def decompose_graph(G: nx.Graph, k: int) -> Optional[TreeDecomposition]:
    """decompose() on a plain graph. Bags are sorted by G's node order.
    Self-loops are ignored. Returns None iff tw(G) > k."""
    assert k >= 0
    nodes = list(G.nodes)
    if not nodes:
        return TreeDecomposition([-1], [()])
    pos = {v: i for i, v in enumerate(nodes)}

    H = nx.Graph()
    H.add_nodes_from(nodes)
    H.add_edges_from((u, v) for u, v in G.edges if u != v)

    order: List[Hashable] = []
    comps = sorted(nx.connected_components(H), key=lambda c: min(pos[v] for v in c))
    for comp in comps:
        comp_order = _elimination_order(H.subgraph(comp).copy(), k, pos)
        if comp_order is None:
            logger.debug("tw > %d on a component of %d vertices", k, len(comp))
            return None
        order += comp_order

    d = _decomposition_from_order(H, order, pos)
    assert d.width <= k, (d.width, k)
    return d


def _elimination_order(W: nx.Graph, k: int, pos: Dict) -> Optional[List[Hashable]]:
    """Elimination ordering of width <= k for connected W, or None. Mutates W."""
    prefix: List[Hashable] = []

    # safe reductions
    progress = True
    while progress and len(W) > k + 1:
        progress = False
        for v in sorted(W, key=pos.__getitem__):
            nbrs = list(W[v])
            if _is_clique(W, nbrs):
                if len(nbrs) > k:
                    return None  # clique of size deg+1 > k+1
            elif len(nbrs) > k or not _almost_simplicial(W, v):
                continue
            _eliminate(W, v)
            prefix.append(v)
            progress = True
            break

    if len(W) <= k + 1:
        return prefix + sorted(W, key=pos.__getitem__)

    if max(nx.core_number(W).values()) > k:
        return None  # degeneracy is a lower bound on tree width

    if len(W) > tw_max_exact():
        raise SizeGuardError(
            f"exact tree width search: {len(W)}-vertex kernel exceeds "
            f"HOMENUM_TW_MAX_EXACT={tw_max_exact()}"
        )

    rest = _subset_search(W, k, pos)
    if rest is None:
        return None
    return prefix + rest


def _subset_search(W: nx.Graph, k: int, pos: Dict) -> Optional[List[Hashable]]:
    verts = sorted(W, key=pos.__getitem__)
    n = len(verts)
    bit = {v: i for i, v in enumerate(verts)}
    nbr_mask = [0] * n
    for v in verts:
        for u in W[v]:
            nbr_mask[bit[v]] |= 1 << bit[u]

    def q_size(S: int, i: int) -> int:
        comp = 1 << i
        reach = 0
        stack = [i]
        while stack:
            x = stack.pop()
            nb = nbr_mask[x]
            reach |= nb & ~S
            inside = nb & S & ~comp
            comp |= inside
            while inside:
                low = inside & -inside
                stack.append(low.bit_length() - 1)
                inside ^= low
        reach &= ~(1 << i)
        return bin(reach).count("1")

    dead: Set[int] = set()

    def search(S: int, count: int) -> Optional[List[int]]:
        if n - count <= k + 1:
            return [i for i in range(n) if not S >> i & 1]
        if S in dead:
            return None
        cands = []
        for i in range(n):
            if S >> i & 1:
                continue
            q = q_size(S, i)
            if q <= k:
                cands.append((q, i))
        for _, i in sorted(cands):
            rest = search(S | (1 << i), count + 1)
            if rest is not None:
                return [i] + rest
        dead.add(S)
        return None

    found = search(0, 0)
    if found is None:
        return None
    return [verts[i] for i in found]


def _decomposition_from_order(
    H: nx.Graph, order: List[Hashable], pos: Dict
) -> TreeDecomposition:
    """One bag {v} ∪ later-neighbours(v) per vertex; parent = earliest-eliminated
    later neighbour. Bags contained in their parent are merged away."""
    G = H.copy()
    position = {v: i for i, v in enumerate(order)}
    bags: Dict[Hashable, Set] = {}
    parent: Dict[Hashable, Optional[Hashable]] = {}
    for v in order:
        nbrs = list(G[v])
        bags[v] = {v} | set(nbrs)
        parent[v] = min(nbrs, key=position.__getitem__) if nbrs else None
        _eliminate(G, v)

    # component roots hang under the last-eliminated vertex
    root = order[-1]
    for v in order:
        if parent[v] is None and v != root:
            parent[v] = root

    children: Dict[Hashable, List] = {v: [] for v in order}
    for v in order:
        if parent[v] is not None:
            children[parent[v]].append(v)

    alive = set(order)
    for v in order:
        p = parent[v]
        if p is not None and bags[v] <= bags[p]:
            for c in children[v]:
                parent[c] = p
                children[p].append(c)
            children[p].remove(v)
            alive.discard(v)

    # BFS from the root: node 0 is the root
    new_id: Dict[Hashable, int] = {root: 0}
    seq = [root]
    for v in seq:
        for c in sorted(children[v], key=position.__getitem__):
            if c in alive:
                new_id[c] = len(seq)
                seq.append(c)
    parents = [-1] + [new_id[parent[v]] for v in seq[1:]]  # type: ignore[index]
    tbags = [tuple(sorted(bags[v], key=pos.__getitem__)) for v in seq]
    return TreeDecomposition(parents, tbags)


def _is_clique(G: nx.Graph, vs: List) -> bool:
    for i, a in enumerate(vs):
        for b in vs[i + 1 :]:
            if b not in G[a]:
                return False
    return True


def _almost_simplicial(G: nx.Graph, v) -> bool:
    nbrs = list(G[v])
    return any(_is_clique(G, [w for w in nbrs if w != u]) for u in nbrs)


def _eliminate(G: nx.Graph, v):
    nbrs = list(G[v])
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1 :]:
            G.add_edge(a, b)
    G.remove_node(v)
