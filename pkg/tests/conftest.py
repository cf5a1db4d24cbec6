import pytest

from dng.catalog import builtin_catalog
from dng.oracle import brute_nim


@pytest.fixture(scope="session")
def catalog24():
    return builtin_catalog(24)


@pytest.fixture(scope="session")
def catalog36():
    return builtin_catalog(36)


@pytest.fixture(scope="session")
def oracle_nims24(catalog24):
    """Oracle nim-number per catalog group name, computed once."""
    return {name: brute_nim(g).nim for name, g in catalog24}
