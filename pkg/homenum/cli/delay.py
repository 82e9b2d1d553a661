"""
Delay instrumentation for a solution stream.

The clock starts before the stream's first next(), so any preprocessing
the enumerator does lazily (decompositions, retraction search) counts
towards first_ms. If nothing is emitted, first_ms is the time to the "no".
"""
import json
import logging
from typing import Callable, Iterable, List, Optional

from enforce_typing import enforce_types
import numpy as np

from homenum.util.strutil import StrMixin
from homenum.util.timeutil import current_ms

logger = logging.getLogger(__name__)

REPORT_KEYS = ["first_ms", "max_gap_ms", "count", "per_gap"]


class DelayReport(StrMixin):
    """Observables of one enumeration run. per_gap has max(count-1, 0) entries."""

    __STR_OMIT__ = ["per_gap"]

    @enforce_types
    def __init__(self, first_ms: float, max_gap_ms: float, count: int, per_gap: List[float]):
        assert count >= 0
        assert len(per_gap) == max(count - 1, 0), (count, len(per_gap))
        assert first_ms >= 0.0 and max_gap_ms >= 0.0
        self.first_ms = first_ms
        self.max_gap_ms = max_gap_ms
        self.count = count
        self.per_gap = per_gap

    def to_dict(self) -> dict:
        return {key: getattr(self, key) for key in REPORT_KEYS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def measure_delay(
    stream: Iterable,
    sink: Optional[Callable] = None,
    limit: Optional[int] = None,
) -> DelayReport:
    """
    @description
      Drain stream (at most `limit` items), timestamping each emission.

    @arguments
      stream -- iterable of solutions; lazy setup is timed too
      sink -- called with each solution after it is timestamped
      limit -- stop after this many emissions; None for no limit

    @return
      report -- DelayReport
    """
    assert limit is None or limit >= 0
    start = current_ms()
    stamps: List[float] = []
    if limit != 0:
        for item in stream:
            stamps.append(current_ms())
            if sink is not None:
                sink(item)
            if limit is not None and len(stamps) >= limit:
                break
    done = current_ms()

    if not stamps:
        return DelayReport(float(max(done - start, 0.0)), 0.0, 0, [])
    gaps = np.diff(np.array(stamps, dtype=float))
    max_gap = float(gaps.max()) if gaps.size else 0.0
    report = DelayReport(
        float(max(stamps[0] - start, 0.0)),
        max(max_gap, 0.0),
        len(stamps),
        [float(g) for g in gaps],
    )
    logger.info(
        "delay: count=%d first_ms=%.3f max_gap_ms=%.3f",
        report.count,
        report.first_ms,
        report.max_gap_ms,
    )
    return report
