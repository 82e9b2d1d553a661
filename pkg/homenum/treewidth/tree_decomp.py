"""
Rooted tree decompositions: the data type, validation and the `bag` file
format.

    bag <nodeid> <parentid|-> <elem>...

`-` marks the root. After parsing, nodes are renumbered so the root is 0.
"""
from collections import deque
from typing import Dict, Hashable, List, Optional, Union

from enforce_typing import enforce_types

from homenum.structures.structure import Structure
from homenum.util.errors import ParseError
from homenum.util.strutil import StrMixin, decode_utf8


class TreeDecomposition(StrMixin):
    """Rooted tree of bags. Node 0 is the root; parents[0] == -1.

    Vertices are whatever the decomposed graph used: element ids for
    structures, element indices inside the solvers. Bags are sorted by
    the vertex order given at construction.
    """

    @enforce_types
    def __init__(self, parents: List[int], bags: List[tuple]):
        assert len(parents) == len(bags) >= 1
        assert parents[0] == -1, "node 0 must be the root"
        self.parents = parents
        self.bags = bags

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max(len(bag) for bag in self.bags) - 1

    @property
    def vertices(self) -> set:
        return set().union(*[set(bag) for bag in self.bags])

    def children(self) -> List[List[int]]:
        kids: List[List[int]] = [[] for _ in self.bags]
        for node, parent in enumerate(self.parents):
            if parent >= 0:
                kids[parent].append(node)
        return kids

    def is_tree(self) -> bool:
        """Parent links form one tree rooted at 0"""
        n = self.num_nodes
        if any(not -1 <= p < n for p in self.parents):
            return False
        if self.parents.count(-1) != 1:
            return False
        seen = {0}
        todo = deque([0])
        kids = self.children()
        while todo:
            for child in kids[todo.popleft()]:
                if child in seen:
                    return False
                seen.add(child)
                todo.append(child)
        return len(seen) == n

    def restrict(self, keep, key=None) -> "TreeDecomposition":
        """Same tree with every bag intersected with `keep`. Still valid for
        the induced subgraph on `keep`; width never grows."""
        keep = set(keep)
        bags = [tuple(v for v in bag if v in keep) for bag in self.bags]
        if key is not None:
            bags = [tuple(sorted(bag, key=key)) for bag in bags]
        return TreeDecomposition(list(self.parents), bags)

    def relabel(self, mapping, key=None) -> "TreeDecomposition":
        bags = [tuple(mapping[v] for v in bag) for bag in self.bags]
        if key is not None:
            bags = [tuple(sorted(bag, key=key)) for bag in bags]
        return TreeDecomposition(list(self.parents), bags)


@enforce_types
def validate(A: Structure, d: TreeDecomposition) -> bool:
    """
    @description
      Check that d is a tree decomposition of A: every element lies in a
      bag, every tuple's entries lie together in some bag, and for every
      element the nodes holding it form a connected subtree.

    @arguments
      A -- structure
      d -- decomposition whose bags hold element ids of A

    @return
      ok -- bool
    """
    if not d.is_tree():
        return False
    bag_sets = [set(bag) for bag in d.bags]
    if any(v not in A.index for bag in bag_sets for v in bag):
        return False

    # every element covered, and its nodes connected: exactly one node
    # holding v has a parent not holding v
    tops: Dict[Hashable, int] = {}
    for node, bag in enumerate(bag_sets):
        parent = d.parents[node]
        for v in bag:
            if parent < 0 or v not in bag_sets[parent]:
                tops[v] = tops.get(v, 0) + 1
    if any(tops.get(v, 0) != 1 for v in A.universe):
        return False

    for _, tup in A.tuples():
        need = set(tup)
        if not any(need <= bag for bag in bag_sets):
            return False
    return True


@enforce_types
def parse_decomposition(text: Union[str, bytes]) -> TreeDecomposition:
    """Parse `bag` lines; bags keep file order of their elements."""
    text = decode_utf8(text)
    ids: List[str] = []
    parent_ids: List[Optional[str]] = []
    bags: List[tuple] = []
    linenos: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] != "bag" or len(toks) < 3:
            raise ParseError(lineno, "expected 'bag <nodeid> <parentid|-> <elem>...'")
        if toks[1] in ids:
            raise ParseError(lineno, f"duplicate node id '{toks[1]}'")
        if len(set(toks[3:])) != len(toks[3:]):
            raise ParseError(lineno, "element repeated within a bag")
        ids.append(toks[1])
        parent_ids.append(None if toks[2] == "-" else toks[2])
        bags.append(tuple(toks[3:]))
        linenos.append(lineno)

    if not ids:
        raise ParseError(0, "no bags")
    roots = [i for i, p in enumerate(parent_ids) if p is None]
    if len(roots) != 1:
        raise ParseError(linenos[-1], f"need exactly one root '-', got {len(roots)}")
    for i, p in enumerate(parent_ids):
        if p is not None and p not in ids:
            raise ParseError(linenos[i], f"unknown parent node '{p}'")

    # renumber: BFS from the root, so the root is node 0
    kids: Dict[int, List[int]] = {i: [] for i in range(len(ids))}
    for i, p in enumerate(parent_ids):
        if p is not None:
            kids[ids.index(p)].append(i)
    order: List[int] = []
    todo = deque([roots[0]])
    while todo:
        node = todo.popleft()
        if node in order:
            raise ParseError(linenos[node], "parent links contain a cycle")
        order.append(node)
        todo.extend(kids[node])
    if len(order) != len(ids):
        raise ParseError(linenos[-1], "parent links do not form one tree")
    new_id = {old: new for new, old in enumerate(order)}
    parents = [-1] + [new_id[ids.index(parent_ids[old])] for old in order[1:]]  # type: ignore[arg-type]
    return TreeDecomposition(parents, [bags[old] for old in order])


@enforce_types
def serialize_decomposition(d: TreeDecomposition) -> str:
    lines = []
    for node, bag in enumerate(d.bags):
        parent = "-" if d.parents[node] < 0 else str(d.parents[node])
        lines.append(" ".join(["bag", str(node), parent] + [str(v) for v in bag]))
    return "\n".join(lines) + "\n"


def sort_bags(d: TreeDecomposition, order: Union[list, tuple]) -> TreeDecomposition:
    """Sort every bag by position in `order`"""
    pos = {v: i for i, v in enumerate(order)}
    return TreeDecomposition(
        list(d.parents), [tuple(sorted(bag, key=pos.__getitem__)) for bag in d.bags]
    )