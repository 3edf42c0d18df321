from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hflcalc import catalog  # noqa: E402
from hflcalc.hfunc import link_h  # noqa: E402


@pytest.fixture(scope="session")
def l7n1():
    return catalog.link("L7n1")


@pytest.fixture(scope="session")
def b20():
    return catalog.link("b(20,-3)")


@pytest.fixture(scope="session")
def trefoils():
    return catalog.link("split-trefoils")


@pytest.fixture(scope="session")
def h_l7n1(l7n1):
    return link_h(l7n1)


@pytest.fixture(scope="session")
def h_b20(b20):
    return link_h(b20)
