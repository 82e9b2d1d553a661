"""
Extension of partial maps over one region of a source structure.

Works on element indices. Tuples of A[region] that touch free elements are
compiled into constraints on their free entries, with the seed's values
substituted in; one-variable constraints shrink domains. Satisfiability is
decided by a dynamic program over a nice tree decomposition of the free
part; the lexicographically least witness fixes free elements in index
order, each to the least value that keeps the instance satisfiable.
"""
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from homenum.structures.structure import Structure, check_same_vocabulary
from homenum.treewidth.decompose import decompose_graph
from homenum.treewidth.nice_decomp import (
    FORGET,
    INTRODUCE,
    JOIN,
    LEAF,
    NiceDecomposition,
    make_nice,
)
from homenum.treewidth.tree_decomp import TreeDecomposition
from homenum.util.errors import WidthExceededError

logger = logging.getLogger(__name__)

IntTuple = Tuple[int, ...]
Constraint = Tuple[IntTuple, FrozenSet[IntTuple]]  # (scope, allowed value tuples)


class ReducedProblem:
    """Free elements, their domains and the constraints left after seeding"""

    def __init__(
        self,
        free: List[int],
        domains: Dict[int, List[int]],
        constraints: List[Constraint],
    ):
        self.free = free
        self.domains = domains
        self.constraints = constraints

    def primal_graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.free)
        for scope, _ in self.constraints:
            for i, a in enumerate(scope):
                for b in scope[i + 1 :]:
                    G.add_edge(a, b)
        return G


class ExtensionSolver:
    """Decide / witness extensions of seeds over A[region] into B.

    One solver per (A, B, region); seeds vary per call.
    """

    def __init__(self, A: Structure, B: Structure, region: Iterable[int]):
        check_same_vocabulary(A, B)
        self.A = A
        self.B = B
        self.region: FrozenSet[int] = frozenset(region)
        self.tuples: List[Tuple[str, IntTuple]] = [
            (rel, tup)
            for rel, tup in A.int_tuples()
            if all(x in self.region for x in tup)
        ]
        self.incidence: Dict[int, List[int]] = {x: [] for x in self.region}
        for tid, (_, tup) in enumerate(self.tuples):
            for x in set(tup):
                self.incidence[x].append(tid)

    def seed_ok(self, seed: Dict[int, int], touching: Optional[Iterable[int]] = None) -> bool:
        """Tuples of A[region] lying inside seed's domain map into B.
        With `touching`, only tuples containing one of those elements are checked."""
        if touching is None:
            tids: Iterable[int] = range(len(self.tuples))
        else:
            tids = sorted({tid for x in touching for tid in self.incidence.get(x, [])})
        for tid in tids:
            rel, tup = self.tuples[tid]
            if all(x in seed for x in tup):
                if tuple(seed[x] for x in tup) not in self.B.int_sets[rel]:
                    return False
        return True

    def reduce(self, seed: Dict[int, int]) -> Optional[ReducedProblem]:
        """Compile the free part. None if some constraint is already unsatisfiable."""
        free = sorted(x for x in self.region if x not in seed)
        domains: Dict[int, Set[int]] = {v: set(range(len(self.B))) for v in free}
        merged: Dict[IntTuple, Set[IntTuple]] = {}
        tids = sorted({tid for v in free for tid in self.incidence[v]})
        for tid in tids:
            rel, tup = self.tuples[tid]
            scope = tuple(sorted({x for x in tup if x not in seed}))
            allowed: Set[IntTuple] = set()
            for row in self.B.int_tables[rel]:
                vals: Dict[int, int] = {}
                ok = True
                for x, b in zip(tup, row):
                    if x in seed:
                        if seed[x] != b:
                            ok = False
                            break
                    elif vals.setdefault(x, b) != b:
                        ok = False
                        break
                if ok:
                    allowed.add(tuple(vals[x] for x in scope))
            if not allowed:
                return None
            if len(scope) == 1:
                domains[scope[0]] &= {vals_[0] for vals_ in allowed}
                if not domains[scope[0]]:
                    return None
            elif scope in merged:
                merged[scope] &= allowed
                if not merged[scope]:
                    return None
            else:
                merged[scope] = allowed
        if any(not dom for dom in domains.values()):
            return None  # empty target
        return ReducedProblem(
            free,
            {v: sorted(dom) for v, dom in domains.items()},
            [(scope, frozenset(allowed)) for scope, allowed in merged.items()],
        )

    def decide(
        self,
        seed: Dict[int, int],
        k: int,
        td: Optional[TreeDecomposition] = None,
        touching: Optional[Iterable[int]] = None,
    ) -> bool:
        """
        True iff some homomorphism A[region] -> B extends seed.

        td, if given, must be a decomposition of a graph on a superset of the
        free elements whose edges cover every constraint scope (eg the
        Gaifman graph of A[region] on the free part). Without td, the
        constraint graph is decomposed here and WidthExceededError raised
        past k. `touching` limits the seed check, see seed_ok().
        """
        return self.first(seed, k, td, touching, witness=False) is not None

    def first(
        self,
        seed: Dict[int, int],
        k: int,
        td: Optional[TreeDecomposition] = None,
        touching: Optional[Iterable[int]] = None,
        witness: bool = True,
    ) -> Optional[Dict[int, int]]:
        """Least extension (by element index, then target index), or None.
        With witness=False only satisfiability is computed; a non-None
        return is then just the seed."""
        if not self.seed_ok(seed, touching):
            return None
        red = self.reduce(seed)
        if red is None:
            return None
        if not red.free:
            return dict(seed)
        if not red.constraints:
            if not witness:
                return dict(seed)
            return {**seed, **{v: red.domains[v][0] for v in red.free}}

        nice = self._nice(red, k, td)
        sat = _Dp(red, nice)
        if not sat.run(red.domains):
            return None
        if not witness:
            return dict(seed)

        domains = dict(red.domains)
        for v in red.free:
            for b in domains[v]:
                trial = dict(domains)
                trial[v] = [b]
                if sat.run(trial):
                    domains = trial
                    break
            else:
                raise AssertionError(f"satisfiable, but no value for {v} survives")
        return {**seed, **{v: domains[v][0] for v in red.free}}

    def _nice(
        self, red: ReducedProblem, k: int, td: Optional[TreeDecomposition]
    ) -> NiceDecomposition:
        if td is None:
            td = decompose_graph(red.primal_graph(), k)
            if td is None:
                raise WidthExceededError(k, "the constraint graph of the free region")
        else:
            assert set(red.free) <= td.vertices, "td must cover every free element"
            td = td.restrict(red.free, key=int)
        return make_nice(td)


class _Dp:
    """Bottom-up table DP over a nice decomposition; reusable across domains"""

    def __init__(self, red: ReducedProblem, nice: NiceDecomposition):
        self.nice = nice
        self.order = nice.postorder()
        by_var: Dict[int, List[Constraint]] = {v: [] for v in red.free}
        for scope, allowed in red.constraints:
            for v in scope:
                by_var[v].append((scope, allowed))

        # constraints to check at each introduce node: those containing the
        # introduced vertex whose scope fits in the bag
        self.checks: Dict[int, List[Tuple[IntTuple, FrozenSet[IntTuple]]]] = {}
        for node in self.order:
            if nice.kinds[node] != INTRODUCE:
                continue
            bag = nice.bags[node]
            bagset = set(bag)
            self.checks[node] = [
                (tuple(bag.index(x) for x in scope), allowed)
                for scope, allowed in by_var[nice.vertex[node]]  # type: ignore[index]
                if set(scope) <= bagset
            ]

    def run(self, domains: Dict[int, List[int]]) -> bool:
        nice = self.nice
        tables: Dict[int, Set[IntTuple]] = {}
        for node in self.order:
            kind = nice.kinds[node]
            kids = nice.children[node]
            if kind == LEAF:
                table: Set[IntTuple] = {()}
            elif kind == INTRODUCE:
                v = nice.vertex[node]
                p = nice.bags[node].index(v)
                checks = self.checks[node]
                table = set()
                for s in tables.pop(kids[0]):
                    for b in domains[v]:  # type: ignore[index]
                        t = s[:p] + (b,) + s[p:]
                        if all(tuple(t[i] for i in poss) in allowed for poss, allowed in checks):
                            table.add(t)
            elif kind == FORGET:
                p = nice.bags[kids[0]].index(nice.vertex[node])
                table = {s[:p] + s[p + 1 :] for s in tables.pop(kids[0])}
            else:
                assert kind == JOIN
                table = tables.pop(kids[0]) & tables.pop(kids[1])
            if not table:
                return False
            tables[node] = table
        return bool(tables[nice.root])
