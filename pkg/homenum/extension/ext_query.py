from typing import Optional, Union

from enforce_typing import enforce_types

from homenum.structures.assignment import PartialAssignment
from homenum.structures.structure import Structure, check_same_vocabulary
from homenum.util.strutil import StrMixin


class ExtensionQuery(StrMixin):
    """Can `seed`, defined on fixed_set, extend to a homomorphism A[region] -> B?

    fixed_set ⊆ region ⊆ A.universe, and seed is defined exactly on fixed_set.
    Whether seed is itself a partial homomorphism is checked when solving.
    """

    __STR_OMIT__ = ["source", "target"]

    @enforce_types
    def __init__(
        self,
        source: Structure,
        target: Structure,
        fixed_set: Union[list, tuple, set, frozenset],
        region: Union[list, tuple, set, frozenset],
        seed: PartialAssignment,
    ):
        check_same_vocabulary(source, target)
        fixed, reg = frozenset(fixed_set), frozenset(region)
        outside = reg - set(source.universe)
        if outside:
            raise ValueError(f"region has non-elements of {source.name}: {sorted(outside)}")
        if not fixed <= reg:
            raise ValueError(f"fixed set not inside region: {sorted(fixed - reg)}")
        if seed.domain != fixed:
            raise ValueError(
                f"seed must be defined exactly on the fixed set; "
                f"domain {sorted(seed.domain)} vs {sorted(fixed)}"
            )
        bad = sorted({dst for _, dst in seed.items() if dst not in target.index})
        if bad:
            raise ValueError(f"seed values not elements of {target.name}: {bad}")

        self.source = source
        self.target = target
        self.fixed_set = fixed
        self.region = reg
        self.seed = seed

    @property
    def free(self) -> frozenset:
        return self.region - self.fixed_set


@enforce_types
def full_query(
    A: Structure, B: Structure, seed: Optional[PartialAssignment] = None
) -> ExtensionQuery:
    """Query over the whole of A; fixed set = the seed's domain (default empty)"""
    if seed is None:
        seed = PartialAssignment({})
    return ExtensionQuery(A, B, seed.domain, A.universe, seed)
