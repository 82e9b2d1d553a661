import time

from enforce_typing import enforce_types


@enforce_types
def current_ms() -> float:
    """Monotonic clock reading, in ms. Only differences are meaningful."""
    return time.perf_counter() * 1000.0


@enforce_types
def elapsed_ms(start_ms: float) -> float:
    """ms since start_ms, where start_ms came from current_ms()"""
    return current_ms() - start_ms
