"""Property catalog: exhaustive small-space runs and bookkeeping."""

import pytest

import pretopo as pt
from pretopo.verify import (
    SpaceTables,
    check_property,
    enumerate_spaces,
    property_ids,
    random_space,
    replay_outcome,
)
from pretopo.verify.catalog import CATALOG, check_with_tables


def test_catalog_shape():
    ids = property_ids()
    assert ids == tuple(f"P{i}" for i in range(1, 21))
    names = [CATALOG[pid].name for pid in ids]
    assert names[0] == "finiteconnected"
    assert names[-1] == "product-connected"
    assert len(set(names)) == 20


def test_unknown_property_rejected():
    with pytest.raises(pt.SpaceError, match="unknown property"):
        check_property("P21", pt.fixture("line3"))


def test_capacity_bound():
    big = pt.make_space([f"p{i}" for i in range(11)], [])
    with pytest.raises(pt.CapacityError):
        check_property("P1", big)


def test_all_properties_pass_on_fixtures():
    for name in pt.fixture_names():
        space = pt.fixture(name)
        tables = SpaceTables(space)
        for pid in property_ids():
            outcome = check_with_tables(CATALOG[pid], space, tables)
            assert outcome.passed, (name, pid)


def test_all_properties_pass_exhaustively_up_to_three_points():
    for n in range(4):
        for space in enumerate_spaces(n):
            tables = SpaceTables(space)
            for pid in property_ids():
                outcome = check_with_tables(CATALOG[pid], space, tables)
                assert outcome.passed, (list(space.arrows()), pid)


@pytest.mark.parametrize("n", (6, 7, 8))
def test_all_properties_pass_on_seeded_samples(n):
    for seed in range(25):
        space = random_space(n, "1/4", splitmix_seed(seed))
        tables = SpaceTables(space)
        for pid in property_ids():
            assert check_with_tables(CATALOG[pid], space, tables).passed, (seed, pid)


def splitmix_seed(i):
    from pretopo.verify import splitmix64

    return splitmix64(2024, i)


def test_check_property_is_deterministic(triangle):
    first = check_property("P11", triangle)
    second = check_property("P11", triangle)
    assert first == second


def test_replay_requires_a_failed_outcome(triangle):
    outcome = check_property("P1", triangle)
    with pytest.raises(pt.SpaceError):
        replay_outcome(outcome)
