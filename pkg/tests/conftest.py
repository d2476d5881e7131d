import pytest

from m24moonshine import (
    build_all_forms,
    head_characters,
    load_tables,
    multiplicity_table,
)
from m24moonshine.congruence import SeriesLibrary

ACCEPTANCE_N_MAX = 300


@pytest.fixture(scope="session")
def table():
    return load_tables()


@pytest.fixture(scope="session")
def forms40(table):
    return build_all_forms(24 * 40, table)


@pytest.fixture(scope="session")
def heads38(table, forms40):
    return head_characters(38, 24 * 40, table, forms40)


@pytest.fixture(scope="session")
def library(table):
    # precision covers 5x the deepest Sturm bound in the suite (5 * 48 = 240)
    return SeriesLibrary(24 * 260, table=table)


@pytest.fixture(scope="session")
def heads300(table):
    return head_characters(ACCEPTANCE_N_MAX, 24 * (ACCEPTANCE_N_MAX + 2), table)


@pytest.fixture(scope="session")
def mult300(heads300):
    return multiplicity_table(heads300)
