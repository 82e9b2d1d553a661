from os import getenv

from enforce_typing import enforce_types

from homenum.util.constants import ORACLE_MAX_MAPS, TW_MAX_EXACT


@enforce_types
def getenv_int(envvar_name: str, default: int) -> int:
    """Integer envvar, or default if unset. Raises ValueError on junk."""
    value = getenv(envvar_name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError as e:
        raise ValueError(f"{envvar_name} must be an int, got '{value}'") from e


@enforce_types
def getenv_bool(envvar_name: str) -> bool:
    value = getenv(envvar_name)
    if value is None:
        return False
    return value.strip().lower() in ["1", "true", "yes", "on"]


@enforce_types
def debug_mode() -> bool:
    """HOMENUM_DEBUG turns on bookkeeping assertions inside the enumerators."""
    return getenv_bool("HOMENUM_DEBUG")


@enforce_types
def oracle_max_maps() -> int:
    return getenv_int("HOMENUM_ORACLE_MAX_MAPS", ORACLE_MAX_MAPS)


@enforce_types
def tw_max_exact() -> int:
    return getenv_int("HOMENUM_TW_MAX_EXACT", TW_MAX_EXACT)


@enforce_types
def log_level() -> str:
    value = getenv("HOMENUM_LOGLEVEL")
    if value is None or value == "":
        return "WARNING"
    return value.upper()
