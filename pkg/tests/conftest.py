import pytest

import pretopo as pt


def pset(space, labels: str) -> pt.PointSet:
    """Point set from space-separated labels ('' for the empty set)."""
    return space.point_set(labels.split())


def labs(space, ps: pt.PointSet) -> str:
    return " ".join(space.set_labels(ps))


def all_subsets(space):
    for m in range(1 << space.n):
        yield pt.PointSet(space.n, m)


@pytest.fixture
def sierpinski():
    return pt.fixture("sierpinski")


@pytest.fixture
def line3():
    return pt.fixture("line3")


@pytest.fixture
def triangle():
    return pt.fixture("triangle")


@pytest.fixture
def square_acd():
    return pt.fixture("square-acd")


@pytest.fixture
def square_symmetric():
    return pt.fixture("square-symmetric")


@pytest.fixture
def kite():
    return pt.fixture("kite")


@pytest.fixture
def vee():
    return pt.fixture("vee")
