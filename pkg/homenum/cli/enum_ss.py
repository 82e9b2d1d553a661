import logging
import os
from typing import Iterator, Optional

from enforce_typing import enforce_types

from homenum.endoseq.endo_sequence import EndoSequence, trivial_sequence
from homenum.endoseq.seqio import read_sequence_file
from homenum.endoseq.wpd_enum import iter_wpd
from homenum.kcore.retraction import k_core, sequence_from_retractions
from homenum.structures.assignment import PartialAssignment
from homenum.structures.structure import Structure
from homenum.util.constants import CAND_ENUM_MODES
from homenum.util.strutil import StrMixin

logger = logging.getLogger(__name__)


@enforce_types
class EnumSS(StrMixin):
    """User-controllable strategy params of one enumeration run"""

    def __init__(
        self,
        mode: str,  # "endoseq", "kcore" or "tw"
        k: Optional[int] = None,  # width bound. endoseq mode: None = the file's
        limit: Optional[int] = None,  # stop after this many outputs
        endoseq: Optional[str] = None,  # sequence file, endoseq mode only
    ):
        if mode not in CAND_ENUM_MODES:
            raise ValueError(f"mode '{mode}' not in {CAND_ENUM_MODES}")
        if k is None and mode != "endoseq":
            raise ValueError(f"mode '{mode}' needs a width k")
        if k is not None and k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        if limit is not None and limit < 0:
            raise ValueError(f"limit must be >= 0, got {limit}")
        if mode == "endoseq":
            if endoseq is None:
                raise ValueError("endoseq mode needs a sequence file")
            if not os.path.exists(endoseq):
                raise FileNotFoundError(endoseq)
        elif endoseq is not None:
            raise ValueError(f"a sequence file only goes with endoseq mode, not '{mode}'")

        self.mode = mode
        self.k = k
        self.limit = limit
        self.endoseq = endoseq


@enforce_types
def enum_ss_from_dict(d: dict) -> EnumSS:
    """From the `enum_ss` section of a ppss.yaml, possibly with overrides"""
    return EnumSS(
        mode=d["mode"],
        k=None if d.get("k") is None else int(d["k"]),
        limit=None if d.get("limit") is None else int(d["limit"]),
        endoseq=d.get("endoseq"),
    )


@enforce_types
def build_sequence(A: Structure, ss: EnumSS) -> EndoSequence:
    """The endomorphism sequence that ss's mode prescribes for A"""
    if ss.mode == "endoseq":
        assert ss.endoseq is not None
        seq = read_sequence_file(ss.endoseq, A, ss.k)
    elif ss.mode == "kcore":
        assert ss.k is not None
        _, steps = k_core(A, ss.k)
        seq = sequence_from_retractions(A, steps, ss.k)
    else:
        assert ss.k is not None
        seq = trivial_sequence(A, ss.k)
    logger.info("%s mode: sequence of length %d, width %d", ss.mode, seq.n, seq.width)
    return seq


def iter_homs(A: Structure, B: Structure, ss: EnumSS) -> Iterator[PartialAssignment]:
    """All homomorphisms A -> B via ss's pipeline. Lazy: the sequence is
    only built on the first next(), so delay timing covers it."""
    seq = build_sequence(A, ss)
    yield from iter_wpd(A, B, seq)
