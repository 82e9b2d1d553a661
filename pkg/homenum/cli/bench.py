"""
Delay benchmarks over a structure family.

run_bench times one family member against the target; run_sweep does that
for every size in BenchSS.ns and tabulates the results, one row per size.
"""
import logging
from typing import Dict

from enforce_typing import enforce_types
import pandas as pd

from homenum.cli.bench_ss import BenchSS
from homenum.cli.delay import DelayReport, measure_delay
from homenum.cli.enum_ss import EnumSS, iter_homs
from homenum.structures.families import generate_family
from homenum.structures.structio import read_structure_file
from homenum.util.mathutil import loglog_slope
from homenum.util.timeutil import current_ms, elapsed_ms

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["n", "size", "first_ms", "max_gap_ms", "count"]
TIME_FLOOR_MS = 0.001  # timer resolution; keeps logs finite


@enforce_types
def run_bench(ss: BenchSS, n: int) -> DelayReport:
    """Time the enumeration of homs from family member n into the target"""
    A = generate_family(ss.family, n)
    B = read_structure_file(ss.target)
    enum_ss = EnumSS(ss.mode, ss.k, ss.limit)
    logger.info("bench %s -> %s, |A|=%d, limit=%s", A.name, B.name, len(A), ss.limit)
    return measure_delay(iter_homs(A, B, enum_ss), limit=ss.limit)


@enforce_types
def run_sweep(ss: BenchSS) -> pd.DataFrame:
    """One run_bench per size in ss.ns. Writes ss.csv if set."""
    rows = []
    for n in ss.ns:
        start = current_ms()
        report = run_bench(ss, n)
        logger.info("sweep: n=%d took %.1f ms", n, elapsed_ms(start))
        rows.append(
            {
                "n": n,
                "size": len(generate_family(ss.family, n)),
                "first_ms": report.first_ms,
                "max_gap_ms": report.max_gap_ms,
                "count": report.count,
            }
        )
    df = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    if ss.csv is not None:
        df.to_csv(ss.csv, index=False)
        logger.info("wrote %d rows to %s", df.shape[0], ss.csv)
    return df


@enforce_types
def sweep_slopes(df: pd.DataFrame) -> Dict[str, float]:
    """
    @description
      Empirical polynomial degree of first_ms and max_gap_ms in the
      structure size, by least squares on log-log axes.

    @arguments
      df -- table from run_sweep, >= 2 rows

    @return
      slopes -- dict with keys "first_ms" and "max_gap_ms"
    """
    xs = [float(x) for x in df["size"]]
    slopes = {}
    for col in ["first_ms", "max_gap_ms"]:
        ys = [max(float(y), TIME_FLOOR_MS) for y in df[col]]
        slopes[col] = loglog_slope(xs, ys)
    return slopes
