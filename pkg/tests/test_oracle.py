"""Brute-force oracle behavior and fast/oracle agreement at small scale.

The full-scale agreement campaigns (all 4-point spaces, ten thousand
seeded instances) live in the acceptance suite; here the oracles are
pinned on fixtures and cross-checked exhaustively at three points.
"""

import pytest

import pretopo as pt
from pretopo import oracle
from pretopo._bitops import supersets_within
from pretopo.verify import enumerate_spaces

from conftest import all_subsets, pset


def small_spaces():
    for n in range(4):
        yield from enumerate_spaces(n)


class TestClopenConnectivity:
    def test_examples(self, triangle, kite):
        assert oracle.connected_by_clopen(triangle, triangle.universe())
        pair = pt.make_space(["x", "y"], [])
        assert not oracle.connected_by_clopen(pair, pair.universe())
        assert not oracle.connected_by_clopen(kite, pset(kite, "a b d"))

    def test_capacity(self):
        space = pt.make_space([f"p{i}" for i in range(21)], [])
        with pytest.raises(pt.CapacityError):
            oracle.connected_by_clopen(space, space.universe())


class TestEnclosureBrute:
    def test_examples(self, line3, triangle):
        assert oracle.enclosure_brute(line3, pset(line3, "a")) == pset(line3, "a b")
        assert oracle.enclosure_brute(triangle, pset(triangle, "b")) == triangle.universe()
        assert oracle.enclosure_brute(triangle, triangle.universe()) == triangle.universe()

    def test_preconditions(self, line3):
        with pytest.raises(pt.SpaceError):
            oracle.enclosure_brute(line3, pset(line3, ""))
        with pytest.raises(pt.SpaceError):
            oracle.enclosure_brute(line3, pset(line3, "a c"))


class TestEnclosesBrute:
    def test_examples(self, kite, triangle):
        d = pset(kite, "d")
        assert not oracle.encloses_brute(kite, pset(kite, "b c d"), d)
        assert oracle.encloses_brute(kite, d, d)
        assert oracle.encloses_brute(triangle, triangle.universe(), pset(triangle, "a"))

    def test_enclosed_must_sit_inside(self, kite):
        with pytest.raises(pt.SpaceError):
            oracle.encloses_brute(kite, pset(kite, "b"), pset(kite, "d"))


class TestTSubspaceBrute:
    def test_examples(self, line3, square_acd):
        assert not oracle.t_subspace_brute(line3, pset(line3, "a c"))
        assert oracle.t_subspace_brute(square_acd, pset(square_acd, "a c d"))
        for space in small_spaces():
            for x in range(space.n):
                assert oracle.t_subspace_brute(space, pt.PointSet(space.n, 1 << x))


class TestAgreementExhaustiveThreePoints:
    def test_connectivity(self):
        for space in small_spaces():
            for a in all_subsets(space):
                assert pt.is_connected_subset(space, a) == oracle.connected_by_clopen(space, a)

    def test_enclosure(self):
        for space in small_spaces():
            for a in all_subsets(space):
                if a.mask and pt.is_connected_subset(space, a):
                    assert pt.enclosure(space, a) == oracle.enclosure_brute(space, a)

    def test_encloses(self):
        for space in small_spaces():
            for a in all_subsets(space):
                if not a.mask or not pt.is_connected_subset(space, a):
                    continue
                full = space.universe().mask
                for s_mask in supersets_within(a.mask, full):
                    s = pt.PointSet(space.n, s_mask)
                    assert pt.encloses(space, s, a) == oracle.encloses_brute(space, s, a)

    def test_t_subspace(self):
        for space in small_spaces():
            for a in all_subsets(space):
                assert pt.is_t_subspace(space, a) == oracle.t_subspace_brute(space, a)
