import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from lsg_lab.modules import RingSpec, build_module

Z = RingSpec.integers()


def make(*orders, ring=Z, caps=None):
    if caps is None:
        return build_module(ring, list(orders))
    return build_module(ring, list(orders), caps)


@pytest.fixture(scope="session")
def z6():
    return make(6)


@pytest.fixture(scope="session")
def z8():
    return make(8)


@pytest.fixture(scope="session")
def z12():
    return make(12)


@pytest.fixture(scope="session")
def z30():
    return make(30)


@pytest.fixture(scope="session")
def z36():
    return make(36)


@pytest.fixture(scope="session")
def m24():
    """Z2 + Z4: the stock non-comultiplication example."""
    return make(2, 4)


@pytest.fixture(scope="session")
def klein():
    return make(2, 2)


# A small pool of structurally varied modules for property tests.
POOL_SPECS = [
    (2,), (4,), (6,), (8,), (9,), (12,), (16,), (18,), (30,), (36,),
    (2, 2), (2, 4), (3, 3), (2, 6), (4, 4), (2, 8), (6, 6),
]


@pytest.fixture(scope="session")
def module_pool():
    return [make(*spec) for spec in POOL_SPECS]
