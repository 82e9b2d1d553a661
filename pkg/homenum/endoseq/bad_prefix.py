"""
Bad prefixes of a relation R^B of arity r: tuples (b_1..b_s), 1 <= s <= r,
that no tuple of R^B extends although (b_1..b_{s-1}) is extended by some.
Every non-tuple of B^r has exactly one bad prefix as a prefix, and there
are at most |R^B|·(|B|-1)·r of them.
"""
from typing import Dict, List, Set, Tuple

from enforce_typing import enforce_types

from homenum.structures.structure import Structure

IntTuple = Tuple[int, ...]


class BadPrefix:
    @enforce_types
    def __init__(self, symbol: str, prefix: tuple):
        assert len(prefix) >= 1
        self.symbol = symbol
        self.prefix = prefix

    @property
    def s(self) -> int:
        return len(self.prefix)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BadPrefix)
            and self.symbol == other.symbol
            and self.prefix == other.prefix
        )

    def __hash__(self) -> int:
        return hash((self.symbol, self.prefix))

    def __str__(self) -> str:
        return f"BadPrefix({self.symbol}: {' '.join(self.prefix)})"

    __repr__ = __str__


def int_bad_prefixes(B: Structure, symbol: str) -> List[IntTuple]:
    """Bad prefixes over B's indices, ordered by length, then lexicographically"""
    rows = B.int_tables[symbol]
    arity = B.vocabulary.arity(symbol)
    if not rows:
        return []
    out: List[IntTuple] = []
    alive: Set[IntTuple] = {()}
    for s in range(1, arity + 1):
        nxt = {row[:s] for row in rows}
        for p in sorted(alive):
            for b in range(len(B)):
                if p + (b,) not in nxt:
                    out.append(p + (b,))
        alive = nxt
    return out


@enforce_types
def bad_prefixes(B: Structure, symbol: str) -> List[BadPrefix]:
    """
    @description
      Complete, duplicate-free list of bad prefixes of symbol's table in B.

    @arguments
      B -- target structure
      symbol -- relation symbol of B's vocabulary

    @return
      prefixes -- list of BadPrefix, shortest first, then in B's universe order.
        Empty if R^B is empty or full.
    """
    return [
        BadPrefix(symbol, tuple(B.universe[b] for b in p))
        for p in int_bad_prefixes(B, symbol)
    ]


def bad_prefix_index(B: Structure) -> Dict[str, List[IntTuple]]:
    return {rel: int_bad_prefixes(B, rel) for rel in B.vocabulary.names}
