import os
from typing import List, Optional

from enforce_typing import enforce_types

from homenum.util.constants import CAND_BENCH_MODES, CAND_FAMILIES
from homenum.util.strutil import StrMixin


@enforce_types
class BenchSS(StrMixin):
    """User-controllable strategy params of a delay benchmark"""

    def __init__(
        self,
        family: str,  # source family, eg "loop_path_one_end"
        ns: List[int],  # family sizes, eg [25, 50, 100]
        target: str,  # structure file of the target
        mode: str = "kcore",  # "kcore" or "tw"
        k: int = 1,  # width bound
        limit: Optional[int] = 1000,  # outputs timed per size
        csv: Optional[str] = None,  # where the sweep table goes, if anywhere
    ):
        if family not in CAND_FAMILIES:
            raise ValueError(f"family '{family}' not in {CAND_FAMILIES}")
        if mode not in CAND_BENCH_MODES:
            raise ValueError(f"bench mode '{mode}' not in {CAND_BENCH_MODES}")
        if not ns or min(ns) < 1:
            raise ValueError(f"ns must be a nonempty list of sizes >= 1, got {ns}")
        if k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        if limit is not None and limit < 0:
            raise ValueError(f"limit must be >= 0, got {limit}")
        if not os.path.exists(target):
            raise FileNotFoundError(target)

        self.family = family
        self.ns = sorted(set(ns))
        self.target = target
        self.mode = mode
        self.k = k
        self.limit = limit
        self.csv = csv


@enforce_types
def bench_ss_from_dict(d: dict) -> BenchSS:
    """From the `bench_ss` section of a ppss.yaml"""
    return BenchSS(
        family=d["family"],
        ns=[int(n) for n in d["ns"]],
        target=d["target"],
        mode=d.get("mode", "kcore"),
        k=int(d.get("k", 1)),
        limit=None if d.get("limit") is None else int(d["limit"]),
        csv=d.get("csv"),
    )
