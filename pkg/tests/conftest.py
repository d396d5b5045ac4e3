from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
sys.path.insert(0, str(Path(__file__).resolve().parent))

from slicegroupoids import cyclic_group, pair_groupoid, parse_file  # noqa: E402


@pytest.fixture
def z4():
    return cyclic_group(4)


@pytest.fixture
def pair2():
    return pair_groupoid(2)


@pytest.fixture
def mod2_doc():
    return parse_file(FIXTURES / "z4_mod2.gd")


@pytest.fixture
def trivial_doc():
    return parse_file(FIXTURES / "trivial_z2.gd")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
