from unittest.mock import patch

from enforce_typing import enforce_types
import pytest

from homenum.util.env import (
    debug_mode,
    getenv_bool,
    getenv_int,
    log_level,
    oracle_max_maps,
    tw_max_exact,
)


def _mock_getenv(values: dict):
    def mock_getenv(key, default=None):
        return values.get(key, default)

    return mock_getenv


@enforce_types
def test_getenv_int():
    with patch("homenum.util.env.getenv", _mock_getenv({"X": "42", "E": ""})):
        assert getenv_int("X", 3) == 42
        assert getenv_int("E", 3) == 3
        assert getenv_int("MISSING", 7) == 7

    with patch("homenum.util.env.getenv", _mock_getenv({"X": "4.5"})):
        with pytest.raises(ValueError):
            getenv_int("X", 3)


@enforce_types
def test_getenv_bool():
    for s in ["1", "true", "YES", " on "]:
        with patch("homenum.util.env.getenv", _mock_getenv({"B": s})):
            assert getenv_bool("B")
    for s in ["0", "false", "", "nope"]:
        with patch("homenum.util.env.getenv", _mock_getenv({"B": s})):
            assert not getenv_bool("B")
    with patch("homenum.util.env.getenv", _mock_getenv({})):
        assert not getenv_bool("B")


@enforce_types
def test_defaults():
    with patch("homenum.util.env.getenv", _mock_getenv({})):
        assert not debug_mode()
        assert oracle_max_maps() == 10**7
        assert tw_max_exact() == 22
        assert log_level() == "WARNING"


@enforce_types
def test_overrides():
    values = {
        "HOMENUM_DEBUG": "1",
        "HOMENUM_ORACLE_MAX_MAPS": "100",
        "HOMENUM_TW_MAX_EXACT": "9",
        "HOMENUM_LOGLEVEL": "debug",
    }
    with patch("homenum.util.env.getenv", _mock_getenv(values)):
        assert debug_mode()
        assert oracle_max_maps() == 100
        assert tw_max_exact() == 9
        assert log_level() == "DEBUG"


@enforce_types
def test_debug_on_under_pytest():
    # pytest.ini sets HOMENUM_DEBUG=1
    assert debug_mode()
