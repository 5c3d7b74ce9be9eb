import pytest

from toursid.constructions import catalog
from toursid.digraph import Tournament
from toursid.hosts import all_tournaments


@pytest.fixture(scope="session")
def small_catalog():
    return catalog(4)


@pytest.fixture(scope="session")
def hosts_upto_5():
    return [t for n in range(1, 6) for t in all_tournaments(n)]


@pytest.fixture(scope="session")
def rotational_5() -> Tournament:
    # i beats i+1 and i+2 (mod 5); every vertex has in- and out-degree 2
    return Tournament(5, [(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)])
