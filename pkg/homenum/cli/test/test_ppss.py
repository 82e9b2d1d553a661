import os

from enforce_typing import enforce_types
import pytest

from homenum.cli.ppss import load_ppss, merged_section
from homenum.util.errors import ParseError


def _write(tmpdir, text: str) -> str:
    path = os.path.join(str(tmpdir), "ppss.yaml")
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path


@enforce_types
def test_load_ppss(tmpdir):
    path = _write(tmpdir, "enum_ss:\n  mode: kcore\n  k: 2\nbench_ss:\n  ns: [25, 50]\n")
    d = load_ppss(path)
    assert d["enum_ss"] == {"mode": "kcore", "k": 2}
    assert d["bench_ss"]["ns"] == [25, 50]

    assert load_ppss(_write(tmpdir, "")) == {}


@enforce_types
def test_load_ppss_errors(tmpdir):
    with pytest.raises(ParseError):
        load_ppss(_write(tmpdir, "enum_ss: [unclosed\n"))
    with pytest.raises(ParseError):
        load_ppss(_write(tmpdir, "- a list\n"))
    with pytest.raises(ParseError):
        load_ppss(_write(tmpdir, "trade_ss:\n  buy_amt: 10\n"))
    with pytest.raises(FileNotFoundError):
        load_ppss(os.path.join(str(tmpdir), "missing.yaml"))


@enforce_types
def test_merged_section(tmpdir):
    path = _write(tmpdir, "enum_ss:\n  mode: kcore\n  k: 2\n  limit: 7\n")
    d = merged_section(path, "enum_ss", {"k": 3, "limit": None})
    assert d == {"mode": "kcore", "k": 3, "limit": 7}
    assert merged_section(path, "bench_ss", {"family": "path"}) == {"family": "path"}
    assert merged_section(None, "enum_ss", {"mode": "tw", "k": None}) == {"mode": "tw"}
