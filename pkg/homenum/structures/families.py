"""
Deterministic instance families for tests and benchmarks.

Graph families use the single binary symbol E and store both orientations
of every edge; a loop at v is the tuple (v, v). A path with parameter n
has n edges, on vertices v0..vn.
"""
from typing import List, Tuple

from enforce_typing import enforce_types

from homenum.structures.structure import Structure, disjoint_union
from homenum.structures.vocabulary import Vocabulary
from homenum.util.constants import CAND_FAMILIES, EDGE


def graph_vocabulary() -> Vocabulary:
    return Vocabulary([(EDGE, 2)])


@enforce_types
def graph_structure(
    vertices: List[str],
    edges: List[Tuple[str, str]],
    loops: List[str],
    name: str,
) -> Structure:
    """Undirected graph as a structure: each edge both ways, loops as (v, v)"""
    tuples: List[Tuple[str, ...]] = []
    for u, v in edges:
        tuples += [(u, v), (v, u)]
    tuples += [(v, v) for v in loops]
    return Structure(graph_vocabulary(), vertices, {EDGE: tuples}, name)


@enforce_types
def generate_family(name: str, n: int) -> Structure:
    """
    @description
      Build member n of a named family.

    @arguments
      name -- one of CAND_FAMILIES
      n -- size parameter, >= 1 (cycle: >= 3)

    @return
      A -- Structure

    @notes
      path: v0..vn, n edges.  cycle: C_n.  clique: loop-free K_n.
      looped_clique: K_n with every loop.  clique_one_loop: K_n, loop at v0.
      grid: n x n grid.  loop_path_one_end / loop_path_both_ends: path with
      loops at v0 / at v0 and vn.  clique_plus_loop: K_n ⊕ one looped vertex.
      padded_clique: K_n plus n isolated vertices.  multicolored_clique: the
      hardness gadget, see multicolored_clique().
    """
    if name not in CAND_FAMILIES:
        raise ValueError(f"unknown family '{name}', pick one of {CAND_FAMILIES}")
    if n < 1:
        raise ValueError(f"family size must be >= 1, got {n}")

    fullname = f"{name}_{n}"
    if name in ["path", "loop_path_one_end", "loop_path_both_ends"]:
        vs = _names("v", n + 1)
        loops = {"path": [], "loop_path_one_end": [vs[0]]}.get(name, [vs[0], vs[-1]])
        return graph_structure(vs, _path_edges(vs), loops, fullname)
    if name == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        vs = _names("v", n)
        return graph_structure(vs, _path_edges(vs) + [(vs[-1], vs[0])], [], fullname)
    if name in ["clique", "looped_clique", "clique_one_loop"]:
        vs = _names("v", n)
        loops = {"clique": [], "clique_one_loop": [vs[0]]}.get(name, vs)
        return graph_structure(vs, _clique_edges(vs), loops, fullname)
    if name == "grid":
        return _grid(n, fullname)
    if name == "clique_plus_loop":
        clique = graph_structure(_names("c", n), _clique_edges(_names("c", n)), [], "K")
        loop = graph_structure(["l"], [], ["l"], "L")
        return disjoint_union(clique, loop, fullname)
    if name == "padded_clique":
        vs = _names("v", n)
        return independent_padding(graph_structure(vs, _clique_edges(vs), [], fullname))
    return multicolored_clique(n)


@enforce_types
def independent_padding(A: Structure) -> Structure:
    """A plus |A| isolated elements p0, p1, ... (ids made unique if needed)"""
    taken = set(A.universe)
    pads: List[str] = []
    i = 0
    while len(pads) < len(A):
        cand = f"p{i}"
        i += 1
        if cand not in taken:
            pads.append(cand)
    tables = {rel: list(A.tables[rel]) for rel in A.vocabulary.names}
    return Structure(A.vocabulary, list(A.universe) + pads, tables, f"{A.name}_padded")


@enforce_types
def multicolored_clique(n: int) -> Structure:
    """
    Adversarial family for projection queries: a red relation R on a0..a{n-1}
    holding every pair (loops included), blue edges B between a_i and y_i,
    unary colour predicates Red and Blue. Its k-core is tiny but its own tree
    width is n-1, so projection onto the y's gets no help from k-cores.
    """
    a_s, y_s = _names("a", n), _names("y", n)
    vocab = Vocabulary([("R", 2), ("B", 2), ("Red", 1), ("Blue", 1)])
    tables = {
        "R": [(a, b) for a in a_s for b in a_s],
        "B": [t for a, y in zip(a_s, y_s) for t in [(a, y), (y, a)]],
        "Red": [(a,) for a in a_s],
        "Blue": [(y,) for y in y_s],
    }
    return Structure(vocab, a_s + y_s, tables, f"multicolored_clique_{n}")


def _names(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(n)]


def _path_edges(vs: List[str]) -> List[Tuple[str, str]]:
    return list(zip(vs[:-1], vs[1:]))


def _clique_edges(vs: List[str]) -> List[Tuple[str, str]]:
    return [(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]]


def _grid(n: int, name: str) -> Structure:
    vs = [f"g{r}_{c}" for r in range(n) for c in range(n)]
    edges = []
    for r in range(n):
        for c in range(n):
            if c + 1 < n:
                edges.append((f"g{r}_{c}", f"g{r}_{c + 1}"))
            if r + 1 < n:
                edges.append((f"g{r}_{c}", f"g{r + 1}_{c}"))
    return graph_structure(vs, edges, [], name)
