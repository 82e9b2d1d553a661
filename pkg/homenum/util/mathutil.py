from typing import List

from enforce_typing import enforce_types
import numpy as np


INT64_CODE_LIMIT = 2**63


def codes_fit_int64(base: int, width: int) -> bool:
    """True if every base-`base` code of `width` digits fits in an int64"""
    return base**width <= INT64_CODE_LIMIT


def encode_rows(rows: np.ndarray, base: int) -> np.ndarray:
    """Map each row of a 2d int array to one code, base-`base` digits.
    Rows must hold values in [0, base). An (m, 0) array encodes to zeros.

    Codes are int64 when base^width fits, else exact Python ints in an
    object array; np.isin and np.sort are exact on both."""
    dtype = np.int64 if codes_fit_int64(base, rows.shape[1]) else object
    codes = np.zeros(rows.shape[0], dtype=dtype)
    for col in range(rows.shape[1]):
        codes = codes * base + rows[:, col].astype(dtype)
    return codes


@enforce_types
def loglog_slope(xs: List[float], ys: List[float]) -> float:
    """
    @description
      Fit log(y) = a*log(x) + b by least squares and return a, ie
      the empirical polynomial degree of y in x.

    @arguments
      xs -- sizes, all > 0
      ys -- measurements, all > 0

    @return
      slope -- float
    """
    assert len(xs) == len(ys) >= 2
    assert min(xs) > 0 and min(ys) > 0
    slope, _ = np.polyfit(np.log(np.array(xs)), np.log(np.array(ys)), 1)
    return float(slope)


@enforce_types
def within_poly_growth(
    y_small: float,
    y_large: float,
    n_small: int,
    n_large: int,
    degree: int,
    noise: float = 3.0,
    floor: float = 0.001,
) -> bool:
    """True if y_large / y_small <= (n_large / n_small)^degree * noise.
    Both ys are clamped below at floor, for timer resolution."""
    assert 0 < n_small < n_large
    y_small, y_large = max(y_small, floor), max(y_large, floor)
    return y_large / y_small <= (n_large / n_small) ** degree * noise
