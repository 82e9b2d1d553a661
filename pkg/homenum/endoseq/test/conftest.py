from homenum.conftest_structures import *  # pylint: disable=wildcard-import
