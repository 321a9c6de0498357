import random

import pytest

from ag43 import caps, demicaps, partitions, symmetry


@pytest.fixture(scope="session")
def c0():
    return caps.canonical_cap()


@pytest.fixture(scope="session")
def c0_demicaps(c0):
    return demicaps.demicaps_in_cap(c0)


@pytest.fixture(scope="session")
def classification():
    return partitions.classify_canonical()


@pytest.fixture(scope="session")
def stabilizer(c0):
    return symmetry.cap_stabilizer(c0)


@pytest.fixture(scope="session")
def grid(c0):
    return partitions.grid36(c0, check_classification=False)


@pytest.fixture()
def rng():
    return random.Random(1234)
