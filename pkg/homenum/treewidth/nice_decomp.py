"""
Nice tree decompositions: every node is a leaf (empty bag), an introduce
node (child bag plus one vertex), a forget node (child bag minus one vertex)
or a join node (two children with the same bag). The root bag is empty.
"""
from typing import Callable, List, Optional

from homenum.treewidth.tree_decomp import TreeDecomposition

LEAF = "leaf"
INTRODUCE = "introduce"
FORGET = "forget"
JOIN = "join"


class NiceDecomposition:
    def __init__(self):
        self.kinds: List[str] = []
        self.bags: List[tuple] = []
        self.vertex: List[Optional[object]] = []  # introduced / forgotten vertex
        self.children: List[List[int]] = []
        self.root: int = -1

    @property
    def num_nodes(self) -> int:
        return len(self.kinds)

    @property
    def width(self) -> int:
        return max(len(bag) for bag in self.bags) - 1

    def add(self, kind: str, bag: tuple, children: List[int], vertex=None) -> int:
        self.kinds.append(kind)
        self.bags.append(bag)
        self.vertex.append(vertex)
        self.children.append(children)
        return len(self.kinds) - 1

    def postorder(self) -> List[int]:
        """Children before parents, iteratively (trees can be deep)"""
        out: List[int] = []
        stack = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                out.append(node)
                continue
            stack.append((node, True))
            for child in reversed(self.children[node]):
                stack.append((child, False))
        return out

    def __str__(self) -> str:
        return (
            f"NiceDecomposition={{#nodes={self.num_nodes}, width={self.width}, "
            f"root={self.root}}}"
        )


def make_nice(d: TreeDecomposition, key: Optional[Callable] = None) -> NiceDecomposition:
    """
    @description
      Convert a rooted decomposition into a nice one of the same width.

    @arguments
      d -- tree decomposition
      key -- sort key for vertices inside bags; default natural order

    @return
      nice -- NiceDecomposition with an empty root bag
    """
    nice = NiceDecomposition()
    sort_key = key if key is not None else (lambda v: v)

    def _bag(vs) -> tuple:
        return tuple(sorted(vs, key=sort_key))

    def _transition(top: int, frm: tuple, to: tuple) -> int:
        cur = list(frm)
        for v in frm:
            if v not in to:
                cur.remove(v)
                top = nice.add(FORGET, _bag(cur), [top], v)
        for v in to:
            if v not in frm:
                cur.append(v)
                top = nice.add(INTRODUCE, _bag(cur), [top], v)
        return top

    kids = d.children()
    tops: List[int] = [-1] * d.num_nodes

    # iterative postorder over d
    order: List[int] = []
    stack = [0]
    while stack:
        node = stack.pop()
        order.append(node)
        stack.extend(kids[node])
    for node in reversed(order):
        bag = _bag(d.bags[node])
        if not kids[node]:
            leaf = nice.add(LEAF, (), [])
            tops[node] = _transition(leaf, (), bag)
            continue
        converted = [
            _transition(tops[c], _bag(d.bags[c]), bag) for c in kids[node]
        ]
        top = converted[0]
        for other in converted[1:]:
            top = nice.add(JOIN, bag, [top, other])
        tops[node] = top

    nice.root = _transition(tops[0], _bag(d.bags[0]), ())
    return nice
