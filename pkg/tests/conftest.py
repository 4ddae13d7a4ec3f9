import pytest

from cospan import GroundSet, build_greedoid
from cospan.instances import (
    PointSet2D,
    chain_antimatroid,
    paper_example_operator,
    seb_violator,
)


@pytest.fixture(scope="session")
def ground3() -> GroundSet:
    return GroundSet.of_size(3)


@pytest.fixture(scope="session")
def pex3():
    return paper_example_operator()


@pytest.fixture(scope="session")
def chain3():
    return chain_antimatroid(3)


@pytest.fixture(scope="session")
def chain3_sigma(chain3):
    return build_greedoid(chain3).sigma


@pytest.fixture(scope="session")
def square_points():
    return PointSet2D.of([(0, 0), (2, 0), (0, 2), (2, 2)])


@pytest.fixture(scope="session")
def square_seb(square_points):
    return seb_violator(square_points)
