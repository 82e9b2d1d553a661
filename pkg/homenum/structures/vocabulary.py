from typing import Dict, List, Tuple

from enforce_typing import enforce_types

from homenum.util.errors import StructureError


class Vocabulary:
    """Ordered list of relation symbols with their arities.

    The list order is canonical: serialization and every per-symbol loop
    follow it.
    """

    @enforce_types
    def __init__(self, symbols: List[Tuple[str, int]]):
        names = [name for name, _ in symbols]
        if len(set(names)) != len(names):
            dups = sorted({name for name in names if names.count(name) > 1})
            raise StructureError(f"duplicate relation symbol(s) {dups}")
        for name, arity in symbols:
            if not _valid_token(name):
                raise StructureError(f"bad relation symbol name '{name}'")
            if arity < 1:
                raise StructureError(f"symbol {name} has arity {arity}, need >= 1")

        self.symbols: List[Tuple[str, int]] = list(symbols)
        self._arity: Dict[str, int] = dict(symbols)

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.symbols]

    def arity(self, name: str) -> int:
        if name not in self._arity:
            raise StructureError(f"unknown relation symbol '{name}'")
        return self._arity[name]

    @property
    def max_arity(self) -> int:
        return max((arity for _, arity in self.symbols), default=0)

    def __contains__(self, name) -> bool:
        return name in self._arity

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vocabulary) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(tuple(self.symbols))

    def __str__(self) -> str:
        return "Vocabulary(" + ", ".join(f"{n}/{a}" for n, a in self.symbols) + ")"

    __repr__ = __str__


def _valid_token(s: str) -> bool:
    """Identifiers and element ids: nonempty, no whitespace, no ':' or '#'"""
    return bool(s) and not any(c.isspace() or c in ":#" for c in s)


def valid_element_id(s: str) -> bool:
    return _valid_token(s)
