from pathlib import Path

import pytest

from moddata.catalog import pointed_zn, rank5_catalog, su2_4_family_all, su2_odd_mod2

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def su2_9():
    return su2_odd_mod2(5)


@pytest.fixture(scope="session")
def pointed_z5():
    return pointed_zn(5, 1)


@pytest.fixture(scope="session")
def su2_4_all():
    return su2_4_family_all()


@pytest.fixture(scope="session")
def catalog_rank5():
    return rank5_catalog()


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR
