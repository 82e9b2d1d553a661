"""Load strategy params from a ppss.yaml, with command-line overrides."""
from typing import Optional

from enforce_typing import enforce_types
import yaml

from homenum.util.errors import ParseError
from homenum.util.strutil import read_utf8_file

SECTIONS = ["enum_ss", "bench_ss"]


@enforce_types
def load_ppss(path: str) -> dict:
    """Whole file as a dict of sections. Unknown sections are rejected."""
    text = read_utf8_file(path)
    try:
        d = yaml.safe_load(text)
    except yaml.YAMLError as e:
        lineno = 0
        mark = getattr(e, "problem_mark", None)
        if mark is not None:
            lineno = mark.line + 1
        raise ParseError(lineno, f"bad yaml in {path}: {e}") from e
    if d is None:
        return {}
    if not isinstance(d, dict):
        raise ParseError(0, f"{path}: expected a mapping of sections")
    unknown = sorted(set(d) - set(SECTIONS))
    if unknown:
        raise ParseError(0, f"{path}: unknown sections {unknown}, want {SECTIONS}")
    return d


@enforce_types
def merged_section(ppss_path: Optional[str], section: str, overrides: dict) -> dict:
    """The file's section (or {} without a file), then every override not None"""
    d = {}
    if ppss_path is not None:
        d = dict(load_ppss(ppss_path).get(section) or {})
    d.update({key: val for key, val in overrides.items() if val is not None})
    return d
