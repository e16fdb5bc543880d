import pytest

from terw import dicyclic, dihedral, g2_group


@pytest.fixture(scope="session")
def s3():
    return dihedral([(3, 1)])


@pytest.fixture(scope="session")
def d4():
    return dihedral([(2, 2)])


@pytest.fixture(scope="session")
def q8():
    return dicyclic([(2, 2)], [2])


@pytest.fixture(scope="session")
def sd16():
    return g2_group(8, 3, 0)
