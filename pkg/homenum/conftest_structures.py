"""Shared structures and random instance generators for tests.

Each test/conftest.py re-exports this module, so the fixtures are visible
everywhere; property tests call the underscore helpers directly.
"""
import random
from typing import List, Tuple

import pytest

from homenum.endoseq.endo_sequence import EndoSequence
from homenum.oracle.brute import brute_homs
from homenum.structures.assignment import PartialAssignment, compose, identity_assignment
from homenum.structures.families import generate_family, graph_structure, graph_vocabulary
from homenum.structures.structure import Structure, disjoint_union, induced_substructure
from homenum.structures.vocabulary import Vocabulary
from homenum.util.constants import EDGE


@pytest.fixture()
def k2():
    return _k2()


def _k2() -> Structure:
    """K2 on elements 0 and 1"""
    return graph_structure(["0", "1"], [("0", "1")], [], "K2")


@pytest.fixture()
def k3():
    return _k3()


def _k3() -> Structure:
    return graph_structure(["0", "1", "2"], [("0", "1"), ("1", "2"), ("0", "2")], [], "K3")


@pytest.fixture()
def path_abc():
    return _path_abc()


def _path_abc() -> Structure:
    return graph_structure(["a", "b", "c"], [("a", "b"), ("b", "c")], [], "P")


@pytest.fixture()
def looped_k3():
    return _looped_k3()


def _looped_k3() -> Structure:
    """K3 with a loop on v0: the looped 3-element target"""
    return generate_family("clique_one_loop", 3)


@pytest.fixture()
def c5_plus_loop():
    return _c5_plus_loop()


def _c5_plus_loop() -> Structure:
    """Triangle-free C5 plus a separate looped vertex `l`"""
    loop = graph_structure(["l"], [], ["l"], "L")
    return disjoint_union(generate_family("cycle", 5), loop, "C5+L")


def _random_vocabulary(rng: random.Random, max_arity: int = 3) -> Vocabulary:
    nsym = rng.randint(1, 2)
    return Vocabulary([(f"R{i}", rng.randint(1, max_arity)) for i in range(nsym)])


def _random_structure(
    rng: random.Random,
    vocab: Vocabulary,
    n: int,
    density: float,
    prefix: str = "b",
    name: str = "B",
) -> Structure:
    """Each possible tuple is present with probability `density`"""
    universe = [f"{prefix}{i}" for i in range(n)]
    tables = {}
    for rel, arity in vocab.symbols:
        rows: List[Tuple[str, ...]] = []
        for code in range(n**arity):
            if rng.random() < density:
                tup = []
                for _ in range(arity):
                    tup.append(universe[code % n])
                    code //= n
                rows.append(tuple(reversed(tup)))
        tables[rel] = rows
    return Structure(vocab, universe, tables, name)


def _random_low_tw_structure(
    rng: random.Random,
    vocab: Vocabulary,
    n: int,
    num_tuples: int,
    k: int = 2,
    prefix: str = "a",
    name: str = "A",
) -> Structure:
    """Random structure of tree width <= k: elements join a random partial
    k-tree, and every tuple draws its entries from one of its bags"""
    universe = [f"{prefix}{i}" for i in range(n)]
    bags: List[List[str]] = [[universe[0]]] if n else []
    for elem in universe[1:]:
        host = rng.choice(bags)
        keep = rng.sample(host, rng.randint(0, min(k, len(host))))
        bags.append(keep + [elem])

    tables = {rel: [] for rel in vocab.names}  # type: ignore[var-annotated]
    seen = set()
    for _ in range(num_tuples if n else 0):
        rel = rng.choice(vocab.names)
        bag = rng.choice(bags)
        tup = tuple(rng.choice(bag) for _ in range(vocab.arity(rel)))
        if (rel, tup) not in seen:
            seen.add((rel, tup))
            tables[rel].append(tup)
    return Structure(vocab, universe, tables, name)


def _random_pair(rng: random.Random, max_a: int = 6, max_b: int = 4):
    """(A, B): A of tree width <= 2 with up to max_a elements, B dense-ish"""
    vocab = _random_vocabulary(rng)
    A = _random_low_tw_structure(rng, vocab, rng.randint(1, max_a), rng.randint(0, 7))
    B = _random_structure(rng, vocab, rng.randint(0, max_b), rng.uniform(0.3, 0.8))
    return A, B


def _loop_path_sequence(n: int) -> EndoSequence:
    """Width-0 sequence of loop_path_one_end(n): step i drops the far end
    v_{n-i+1}, folding it onto v_{n-i-1} (onto the looped v0 at the end)"""
    A = generate_family("loop_path_one_end", n)
    vs = list(A.universe)
    levels = [tuple(vs[: n + 1 - i]) for i in range(n + 1)]
    maps = []
    for i in range(1, n + 1):
        far = n + 1 - i
        values = {v: v for v in vs[:far]}
        values[vs[far]] = vs[max(far - 2, 0)]
        maps.append(PartialAssignment(values))
    return EndoSequence(A, levels, maps, 0)


def _collapsible_graph(rng: random.Random, n: int, density: float) -> Structure:
    """Random digraph on v0..v{n-1}, n >= 3, that keeps the loop at v0 and
    both edges v0-v1, so everything folds onto v1 and then onto v0"""
    vs = [f"v{i}" for i in range(n)]
    tuples = {("v0", "v0"), ("v0", "v1"), ("v1", "v0")}
    for a in vs:
        for b in vs:
            if rng.random() < density:
                tuples.add((a, b))
    return Structure(graph_vocabulary(), vs, {EDGE: sorted(tuples)}, "A")


def _collapse_sequence(A: Structure, k: int) -> EndoSequence:
    """A ⊋ {v0, v1} ⊋ {v0} for a _collapsible_graph"""
    phi1 = {v: ("v1" if v == "v1" else "v0") for v in A.universe}
    phi2 = {"v0": "v0", "v1": "v0"}
    return EndoSequence(
        A,
        [A.universe, ("v0", "v1"), ("v0",)],
        [PartialAssignment(phi1), PartialAssignment(phi2)],
        k,
    )


def _composites(seq: EndoSequence) -> List[PartialAssignment]:
    """phi_t ∘ ... ∘ phi_1 for t = 0..n"""
    out = [identity_assignment(seq.source.universe)]
    for t in range(1, seq.n + 1):
        out.append(compose(seq.phi(t), out[-1]))
    return out


def _level_homs(seq: EndoSequence, B: Structure) -> List[List[PartialAssignment]]:
    """Per level t, every homomorphism A[A_t] -> B, by brute force"""
    A = seq.source
    return [sorted(brute_homs(induced_substructure(A, lv), B), key=str) for lv in seq.levels]
