import pytest

from twobytwo import TieLattice, build_atlas


@pytest.fixture(scope="session")
def atlas():
    return build_atlas()


@pytest.fixture(scope="session")
def lattice(atlas):
    return TieLattice(atlas)
