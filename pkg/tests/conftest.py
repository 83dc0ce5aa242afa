import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from leftlegal.finite import chain_semilattice, left_zero, trivial, zero_semigroup  # noqa: E402
from leftlegal.fixtures import load_fixture  # noqa: E402
from census import full_census, left_legal_census  # noqa: E402


@pytest.fixture(scope="session")
def table1():
    return load_fixture("table1")


@pytest.fixture(scope="session")
def table3():
    return load_fixture("table3")


@pytest.fixture(scope="session")
def table4():
    return load_fixture("table4")


@pytest.fixture(scope="session")
def table5():
    return load_fixture("table5")


@pytest.fixture(scope="session")
def small_tables(table1, table3, table4, table5):
    return {
        "table1": table1,
        "table3": table3,
        "table4": table4,
        "table5": table5,
        "LZ2": left_zero(2),
        "LZ3": left_zero(3),
        "ZM2": zero_semigroup(2),
        "ZM3": zero_semigroup(3),
        "SL2": chain_semilattice(2),
        "SL3": chain_semilattice(3),
        "T": trivial(),
    }


@pytest.fixture(scope="session")
def census4():
    return full_census(4)


@pytest.fixture(scope="session")
def ll_census5():
    return left_legal_census(5)
