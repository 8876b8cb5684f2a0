import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from slablab import fixtures  # noqa: E402


@pytest.fixture
def domino332():
    return fixtures.tiling("domino_3x3x2_twist_minus1")


@pytest.fixture
def slab666():
    return fixtures.tiling("slab_6x6x6_ttw_002")


@pytest.fixture
def mixed666():
    return fixtures.tiling("mixed_6x6x6_twist_2")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary():
        terminalreporter.write_line(line)
