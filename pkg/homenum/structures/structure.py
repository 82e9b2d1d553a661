"""
Finite relational structures.

A Structure keeps the file order of its universe and of every table: that
order is the canonical order all enumerations follow. Internally, elements
are mapped to dense indices 0..|A|-1 in universe order, and the
per-symbol tables are kept both as index tuples and as numpy arrays.
"""
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple, Union

from enforce_typing import enforce_types
import networkx as nx
import numpy as np

from homenum.structures.vocabulary import Vocabulary, valid_element_id
from homenum.util.errors import StructureError
from homenum.util.mathutil import encode_rows

IntTuple = Tuple[int, ...]


class Structure:
    """Vocabulary + ordered universe + ordered, duplicate-free tuple tables.

    Immutable after construction.
    """

    # pylint: disable=too-many-instance-attributes
    @enforce_types
    def __init__(
        self,
        vocabulary: Vocabulary,
        universe: List[str],
        tables: Dict[str, List[Tuple[str, ...]]],
        name: str = "A",
    ):
        # universe
        index: Dict[str, int] = {}
        for elem in universe:
            if not valid_element_id(elem):
                raise StructureError(f"bad element id '{elem}'")
            if elem in index:
                raise StructureError(f"duplicate element '{elem}'")
            index[elem] = len(index)

        # tables
        for rel in tables:
            if rel not in vocabulary:
                raise StructureError(f"table for unknown relation symbol '{rel}'")

        str_tables: Dict[str, Tuple[Tuple[str, ...], ...]] = {}
        int_tables: Dict[str, Tuple[IntTuple, ...]] = {}
        int_sets: Dict[str, FrozenSet[IntTuple]] = {}
        for rel, arity in vocabulary.symbols:
            rows = tables.get(rel, [])
            seen: Set[IntTuple] = set()
            int_rows: List[IntTuple] = []
            for tup in rows:
                if len(tup) != arity:
                    raise StructureError(
                        f"tuple {rel} {' '.join(tup)} has {len(tup)} entries, "
                        f"arity of {rel} is {arity}"
                    )
                for elem in tup:
                    if elem not in index:
                        raise StructureError(
                            f"tuple {rel} {' '.join(tup)}: unknown element '{elem}'"
                        )
                itup = tuple(index[elem] for elem in tup)
                if itup in seen:
                    raise StructureError(f"duplicate tuple {rel} {' '.join(tup)}")
                seen.add(itup)
                int_rows.append(itup)
            str_tables[rel] = tuple(tuple(t) for t in rows)
            int_tables[rel] = tuple(int_rows)
            int_sets[rel] = frozenset(int_rows)

        self.vocabulary = vocabulary
        self.name = name
        self.universe: Tuple[str, ...] = tuple(universe)
        self.index: Dict[str, int] = index
        self.tables = str_tables
        self.int_tables = int_tables
        self.int_sets = int_sets

        self._arrays: Dict[str, np.ndarray] = {}
        self._codes: Dict[str, np.ndarray] = {}
        self._incidence: Optional[List[List[Tuple[str, IntTuple]]]] = None

    def __len__(self) -> int:
        return len(self.universe)

    @property
    def num_tuples(self) -> int:
        return sum(len(rows) for rows in self.int_tables.values())

    def tuples(self) -> Iterator[Tuple[str, Tuple[str, ...]]]:
        """(symbol, tuple) pairs in canonical order: vocabulary, then table"""
        for rel in self.vocabulary.names:
            for tup in self.tables[rel]:
                yield rel, tup

    def int_tuples(self) -> Iterator[Tuple[str, IntTuple]]:
        for rel in self.vocabulary.names:
            for tup in self.int_tables[rel]:
                yield rel, tup

    def has_tuple(self, rel: str, tup: Tuple[str, ...]) -> bool:
        if any(elem not in self.index for elem in tup):
            return False
        return tuple(self.index[elem] for elem in tup) in self.int_sets[rel]

    def table_array(self, rel: str) -> np.ndarray:
        """Table of rel as an int64 array of shape (#tuples, arity)"""
        if rel not in self._arrays:
            arity = self.vocabulary.arity(rel)
            arr = np.array(self.int_tables[rel], dtype=np.int64)
            self._arrays[rel] = arr.reshape(len(self.int_tables[rel]), arity)
        return self._arrays[rel]

    def codes(self, rel: str) -> np.ndarray:
        """Tuples of rel encoded as ints, base |A|. Used for fast membership."""
        if rel not in self._codes:
            self._codes[rel] = np.sort(
                encode_rows(self.table_array(rel), max(len(self), 1))
            )
        return self._codes[rel]

    def incidence(self) -> List[List[Tuple[str, IntTuple]]]:
        """Per element index: the (symbol, index tuple) pairs that contain it"""
        if self._incidence is None:
            inc: List[List[Tuple[str, IntTuple]]] = [[] for _ in self.universe]
            for rel, tup in self.int_tuples():
                for x in set(tup):
                    inc[x].append((rel, tup))
            self._incidence = inc
        return self._incidence

    def __eq__(self, other) -> bool:
        """Same vocabulary, universe order and tables. The name is ignored."""
        return (
            isinstance(other, Structure)
            and self.vocabulary == other.vocabulary
            and self.universe == other.universe
            and self.tables == other.tables
        )

    def __hash__(self) -> int:
        return hash((self.vocabulary, self.universe))

    def __str__(self) -> str:
        return (
            f"Structure={{name={self.name}, {self.vocabulary}, "
            f"|universe|={len(self)}, #tuples={self.num_tuples}}}"
        )

    __repr__ = __str__


@enforce_types
def empty_structure(vocabulary: Vocabulary, name: str = "empty") -> Structure:
    return Structure(vocabulary, [], {}, name)


@enforce_types
def induced_substructure(
    A: Structure, X: Union[list, tuple, set, frozenset], name: str = ""
) -> Structure:
    """
    @description
      A[X]: universe X, each table restricted to tuples with all entries
      in X. Universe and table orders are inherited from A, whatever
      the order of X.

    @arguments
      A -- structure
      X -- collection of elements of A
      name -- name of the result; default A.name

    @return
      A[X] -- Structure
    """
    keep = set(X)
    unknown = keep - set(A.universe)
    if unknown:
        raise StructureError(f"not elements of {A.name}: {sorted(unknown)}")
    universe = [elem for elem in A.universe if elem in keep]
    tables = {
        rel: [tup for tup in A.tables[rel] if all(elem in keep for elem in tup)]
        for rel in A.vocabulary.names
    }
    return Structure(A.vocabulary, universe, tables, name or A.name)


@enforce_types
def disjoint_union(A: Structure, B: Structure, name: str = "") -> Structure:
    """A ⊕ B: universe A then B, tables concatenated. Element ids must not clash."""
    if A.vocabulary != B.vocabulary:
        raise StructureError("disjoint union needs equal vocabularies")
    clash = set(A.universe) & set(B.universe)
    if clash:
        raise StructureError(f"disjoint union: shared element ids {sorted(clash)}")
    tables = {
        rel: list(A.tables[rel]) + list(B.tables[rel]) for rel in A.vocabulary.names
    }
    universe = list(A.universe) + list(B.universe)
    return Structure(A.vocabulary, universe, tables, name or f"{A.name}+{B.name}")


@enforce_types
def gaifman_graph(A: Structure) -> nx.Graph:
    """
    Gaifman (primal) graph: vertices = universe, in universe order; an edge
    {a,b} iff a != b and some tuple contains both. Never has loops.
    """
    G = nx.Graph()
    G.add_nodes_from(A.universe)
    for _, tup in A.tuples():
        elems = list(dict.fromkeys(tup))
        for i, a in enumerate(elems):
            for b in elems[i + 1 :]:
                G.add_edge(a, b)
    return G


def index_gaifman_graph(
    A: Structure,
    region: Optional[Set[int]] = None,
    vertices: Optional[Set[int]] = None,
) -> nx.Graph:
    """Gaifman graph over element indices.

    Only tuples lying entirely inside `region` count (default: all), and the
    graph is induced on `vertices` (default: region). Nodes are added in
    ascending index order.
    """
    if region is None:
        region = set(range(len(A)))
    if vertices is None:
        vertices = region
    G = nx.Graph()
    G.add_nodes_from(sorted(vertices))
    for _, tup in A.int_tuples():
        if not all(x in region for x in tup):
            continue
        elems = sorted({x for x in tup if x in vertices})
        for i, a in enumerate(elems):
            for b in elems[i + 1 :]:
                G.add_edge(a, b)
    return G


def check_same_vocabulary(A: Structure, B: Structure):
    if A.vocabulary != B.vocabulary:
        raise StructureError(
            f"vocabularies differ: {A.name} has {A.vocabulary}, "
            f"{B.name} has {B.vocabulary}"
        )
