from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from enforce_typing import enforce_types
import numpy as np

from homenum.structures.structure import Structure, check_same_vocabulary
from homenum.util.mathutil import encode_rows


class PartialAssignment:
    """A map from some elements of a source universe to a target universe.

    Values are defined exactly on `domain`. Hashable and immutable, so
    solution sets can be plain python sets.
    """

    @enforce_types
    def __init__(self, values: dict):
        for src, dst in values.items():
            assert isinstance(src, str) and isinstance(dst, str), (src, dst)
        self._values: Dict[str, str] = dict(values)
        self._hash: Optional[int] = None

    @property
    def domain(self) -> FrozenSet[str]:
        return frozenset(self._values)

    @property
    def values(self) -> Dict[str, str]:
        return dict(self._values)

    def __getitem__(self, src: str) -> str:
        return self._values[src]

    def get(self, src: str, default=None):
        return self._values.get(src, default)

    def __contains__(self, src) -> bool:
        return src in self._values

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[str]:
        return iter(self._values)

    def items(self):
        return self._values.items()

    def restrict(self, X) -> "PartialAssignment":
        """Restriction to X ∩ domain"""
        keep = set(X)
        return PartialAssignment(
            {src: dst for src, dst in self._values.items() if src in keep}
        )

    def extend(self, more: dict) -> "PartialAssignment":
        """Union with `more`. Raises ValueError on a conflicting value."""
        values = dict(self._values)
        for src, dst in more.items():
            if src in values and values[src] != dst:
                raise ValueError(f"conflict at {src}: {values[src]} vs {dst}")
            values[src] = dst
        return PartialAssignment(values)

    def as_line(self, order) -> str:
        """`src:dst` pairs, space-separated, following `order` (domain only)"""
        return " ".join(f"{src}:{self._values[src]}" for src in order if src in self)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialAssignment) and self._values == other._values

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._values.items()))
        return self._hash

    def __str__(self) -> str:
        return "{" + ", ".join(f"{s}->{d}" for s, d in self._values.items()) + "}"

    __repr__ = __str__


# A homomorphism is a PartialAssignment whose domain is the whole source universe
Homomorphism = PartialAssignment


@enforce_types
def identity_assignment(elems: Union[list, tuple]) -> PartialAssignment:
    return PartialAssignment({elem: elem for elem in elems})


@enforce_types
def is_homomorphism(f: PartialAssignment, A: Structure, B: Structure) -> bool:
    """
    @description
      True iff f is a homomorphism from A[f.domain] to B: every tuple of A
      whose entries all lie in f's domain maps to a tuple of B.

    @arguments
      f -- partial map from A's universe to B's universe
      A -- source structure
      B -- target structure, same vocabulary

    @return
      verdict -- bool

    @notes
      Raises ValueError if f's domain leaves A or its values leave B.
    """
    check_same_vocabulary(A, B)
    outside = [src for src in f.domain if src not in A.index]
    if outside:
        raise ValueError(f"not elements of {A.name}: {sorted(outside)}")
    bad_values = sorted({dst for _, dst in f.items() if dst not in B.index})
    if bad_values:
        raise ValueError(f"not elements of {B.name}: {bad_values}")
    return is_hom_array(to_index_array(f, A, B), A, B)


def to_index_array(f: PartialAssignment, A: Structure, B: Structure) -> np.ndarray:
    """f as an int array over A's indices; -1 where f is undefined"""
    g = np.full(len(A), -1, dtype=np.int64)
    for src, dst in f.items():
        g[A.index[src]] = B.index[dst]
    return g


def from_index_array(g: np.ndarray, A: Structure, B: Structure) -> PartialAssignment:
    return PartialAssignment(
        {A.universe[x]: B.universe[int(g[x])] for x in range(len(A)) if g[x] >= 0}
    )


def from_index_dict(g: Dict[int, int], A: Structure, B: Structure) -> PartialAssignment:
    return PartialAssignment(
        {A.universe[x]: B.universe[g[x]] for x in sorted(g)}
    )


def to_index_dict(f: PartialAssignment, A: Structure, B: Structure) -> Dict[int, int]:
    return {A.index[src]: B.index[dst] for src, dst in f.items()}


def is_hom_array(
    g: np.ndarray, A: Structure, B: Structure, rels: Optional[List[str]] = None
) -> bool:
    """Vectorized check: tuples of A fully inside g's support map into B.

    g is an int array over A's indices, -1 = undefined.
    """
    base = max(len(B), 1)
    for rel in rels if rels is not None else A.vocabulary.names:
        rows = A.table_array(rel)
        if rows.shape[0] == 0:
            continue
        img = g[rows]
        img = img[(img >= 0).all(axis=1)]
        if img.shape[0] == 0:
            continue
        if not np.isin(encode_rows(img, base), B.codes(rel)).all():
            return False
    return True


def violated_tuple(
    g: np.ndarray, A: Structure, B: Structure
) -> Optional[Tuple[str, Tuple[str, ...]]]:
    """First tuple of A (canonical order) inside g's support whose image leaves B"""
    for rel, tup in A.int_tuples():
        img = tuple(int(g[x]) for x in tup)
        if min(img, default=0) < 0:
            continue
        if img not in B.int_sets[rel]:
            return rel, tuple(A.universe[x] for x in tup)
    return None


@enforce_types
def compose(outer: PartialAssignment, inner: PartialAssignment) -> PartialAssignment:
    """outer ∘ inner, defined on inner's domain. The image of inner must
    lie in outer's domain, else ValueError."""
    values = {}
    for src, mid in inner.items():
        if mid not in outer:
            raise ValueError(f"compose: {src}->{mid}, but {mid} not in outer's domain")
        values[src] = outer[mid]
    return PartialAssignment(values)
