"""Deterministic generators: SplitMix64 stream, enumeration, seeded sampling."""

import pytest

import pretopo as pt
from pretopo.verify import (
    enumerate_spaces,
    point_labels,
    random_space,
    sample_stream,
    splitmix64,
)


def reference_splitmix(seed, count):
    """Stateful textbook formulation, kept as an independent cross-check."""
    mask = (1 << 64) - 1
    state = seed
    out = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out


class TestSplitMix:
    def test_matches_stateful_reference(self):
        for seed in (0, 1, 1234567, 2**64 - 1):
            assert [splitmix64(seed, i) for i in range(6)] == reference_splitmix(seed, 6)

    def test_counter_access_is_random_access(self):
        assert splitmix64(42, 5) == reference_splitmix(42, 6)[5]

    def test_values_fit_64_bits(self):
        assert all(0 <= splitmix64(7, i) < 2**64 for i in range(100))


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 64), (4, 4096)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_spaces(n)) == count

    def test_two_point_order(self):
        spaces = list(enumerate_spaces(2))
        arrow_sets = [set(s.arrows()) for s in spaces]
        assert arrow_sets == [
            set(),
            {("a", "b")},
            {("b", "a")},
            {("a", "b"), ("b", "a")},
        ]

    def test_three_point_stream_contains_the_fixtures(self):
        arrow_sets = [frozenset(s.arrows()) for s in enumerate_spaces(3)]
        assert frozenset({("a", "b"), ("b", "c")}) in arrow_sets          # line
        assert frozenset({("a", "b"), ("b", "c"), ("c", "a")}) in arrow_sets  # cycle
        assert frozenset({("a", "b"), ("c", "b")}) in arrow_sets          # two into one
        assert len(set(arrow_sets)) == 64

    def test_capacity(self):
        with pytest.raises(pt.CapacityError):
            next(enumerate_spaces(6))


class TestRandomSpace:
    def test_probability_extremes(self):
        discrete = random_space(6, 0, seed=9)
        assert all(row == 1 << x for x, row in enumerate(discrete.rows))
        complete = random_space(6, 1, seed=9)
        assert all(row == (1 << 6) - 1 for row in complete.rows)

    def test_deterministic_per_seed(self):
        assert random_space(8, "1/4", 42) == random_space(8, "1/4", 42)
        assert random_space(8, "1/4", 42) != random_space(8, "1/4", 43)

    def test_frozen_eight_point_sample(self):
        # pinned bytes: regenerating with the documented constants must
        # reproduce these rows exactly, on any platform
        space = random_space(8, "1/4", 42)
        assert space.labels == ("a", "b", "c", "d", "e", "f", "g", "h")
        assert space.rows == (165, 18, 46, 25, 16, 178, 112, 172)

    def test_fraction_and_float_probabilities(self):
        assert random_space(8, "2/8", 5) == random_space(8, "1/4", 5)
        assert random_space(8, 0.25, 5) == random_space(8, "1/4", 5)

    def test_validation(self):
        with pytest.raises(pt.SpaceError):
            random_space(4, "3/2", 0)
        with pytest.raises(pt.CapacityError):
            random_space(65, "1/2", 0)

    def test_labels_beyond_letters(self):
        assert point_labels(3) == ("a", "b", "c")
        assert point_labels(30)[26:] == ("p26", "p27", "p28", "p29")
        assert random_space(30, "1/8", 1).labels[0] == "p00"


class TestSampleStream:
    def test_round_robin_sizes_and_determinism(self):
        stream = list(sample_stream((6, 7, 8), 9, "1/4", seed=11))
        assert [s.n for s in stream] == [6, 7, 8] * 3
        again = list(sample_stream((6, 7, 8), 9, "1/4", seed=11))
        assert stream == again

    def test_seed_sensitivity(self):
        one = list(sample_stream((8,), 4, "1/4", seed=1))
        two = list(sample_stream((8,), 4, "1/4", seed=2))
        assert one != two

    def test_empty_sizes_rejected_when_counting(self):
        with pytest.raises(pt.SpaceError):
            list(sample_stream((), 3, "1/4", 0))
