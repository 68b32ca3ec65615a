"""Core space construction and the three modifications."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import pretopo as pt
from pretopo.verify import enumerate_spaces, random_space

from conftest import all_subsets, pset


def arrow_set(space):
    return set(space.arrows())


class TestMakeSpace:
    def test_sierpinski(self, sierpinski):
        assert sierpinski.labels == ("0", "1")
        assert arrow_set(sierpinski) == {("0", "1")}
        assert sierpinski.arrow(0, 0) and sierpinski.arrow(1, 1)

    def test_one_point_space_has_only_the_loop(self):
        space = pt.make_space(["a"], [])
        assert space.rows == (1,)

    def test_line3_out_sets(self, line3):
        assert line3.out_set(line3.point("a")) == pset(line3, "a b")
        assert line3.out_set(line3.point("b")) == pset(line3, "b c")
        assert line3.out_set(line3.point("c")) == pset(line3, "c")

    def test_duplicate_arrows_collapse(self):
        space = pt.make_space(["a", "b"], [("a", "b"), ("a", "b")])
        assert space == pt.make_space(["a", "b"], [("a", "b")])

    def test_explicit_loop_is_absorbed(self):
        space = pt.make_space(["a", "b"], [("a", "a"), ("a", "b")])
        assert arrow_set(space) == {("a", "b")}

    def test_duplicate_label_rejected(self):
        with pytest.raises(pt.SpaceError, match="duplicate label"):
            pt.make_space(["a", "a"], [])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(pt.SpaceError, match="unknown arrow endpoint"):
            pt.make_space(["a"], [("a", "b")])

    def test_capacity_bound(self):
        labels = [f"p{i}" for i in range(65)]
        with pytest.raises(pt.CapacityError):
            pt.make_space(labels, [])

    def test_label_charset(self):
        with pytest.raises(pt.SpaceError, match="identifier"):
            pt.make_space(["a-b"], [])
        with pytest.raises(pt.SpaceError):
            pt.make_space([""], [])

    def test_equality_is_label_and_arrow_equality(self):
        one = pt.make_space(["a", "b"], [("a", "b")])
        two = pt.make_space(["b", "a"], [("b", "a")])
        assert one != two  # same shape, different label table


class TestSubspace:
    def test_line3_ac_is_discrete(self, line3):
        sub = pt.subspace(line3, pset(line3, "a c"))
        assert sub.labels == ("a", "c")
        assert sub.rows == (1, 2)  # loops only

    def test_full_universe_is_identity(self, kite):
        assert pt.subspace(kite, kite.universe()) == kite

    def test_square_acd_abc(self, square_acd):
        sub = pt.subspace(square_acd, pset(square_acd, "a b c"))
        assert arrow_set(sub) == {("a", "b"), ("b", "c")}

    def test_range_check(self, line3):
        with pytest.raises(pt.SpaceError):
            pt.subspace(line3, pt.PointSet(4, 0b1010))


class TestProduct:
    def test_sierpinski_squared(self, sierpinski):
        prod = pt.product(sierpinski, sierpinski)
        assert prod.labels == ("0_0", "0_1", "1_0", "1_1")
        assert prod.out_set(0) == prod.universe()

    def test_one_point_factor_copies_structure(self, line3):
        point = pt.make_space(["z"], [])
        prod = pt.product(point, line3)
        assert prod.labels == ("z_a", "z_b", "z_c")
        assert prod.rows == line3.rows

    def test_discrete_pair_with_sierpinski_is_disconnected(self, sierpinski):
        pair = pt.make_space(["x", "y"], [])
        prod = pt.product(pair, sierpinski)
        parts = pt.components(prod)
        assert [prod.set_labels(p) for p in parts] == [("x_0", "x_1"), ("y_0", "y_1")]
        assert not pt.is_connected(prod)

    def test_capacity(self):
        nine = pt.make_space([f"a{i}" for i in range(9)], [])
        eight = pt.make_space([f"b{i}" for i in range(8)], [])
        with pytest.raises(pt.CapacityError):
            pt.product(nine, eight)


class TestModifications:
    def test_t_modification_line3(self, line3):
        assert arrow_set(pt.t_modification(line3)) == {("a", "b"), ("b", "c"), ("a", "c")}

    def test_t_modification_kite(self, kite):
        assert arrow_set(pt.t_modification(kite)) == {
            ("a", "b"), ("c", "b"), ("d", "c"), ("d", "b"),
        }

    def test_t_fixed_point(self, square_symmetric):
        t = pt.t_modification(square_symmetric)
        assert pt.t_modification(t) == t

    def test_r_modification_triangle_is_antidiscrete(self, triangle):
        r = pt.r_modification(triangle)
        assert all(row == 0b111 for row in r.rows)

    def test_r_fixed_point(self, square_symmetric):
        assert pt.r_modification(square_symmetric) == square_symmetric

    def test_r_kite_is_undirected_path(self, kite):
        r = pt.r_modification(kite)
        assert arrow_set(r) == {
            ("a", "b"), ("b", "a"), ("c", "b"), ("b", "c"), ("d", "c"), ("c", "d"),
        }
        # iterating closure of a singleton sweeps the whole space
        assert pt.closure(r, pset(r, "a")) == r.universe()

    def test_star_dual_examples(self, sierpinski, line3, square_symmetric):
        assert arrow_set(pt.star_dual(sierpinski)) == {("1", "0")}
        assert arrow_set(pt.star_dual(line3)) == {("b", "a"), ("c", "b")}
        assert pt.star_dual(square_symmetric) == square_symmetric

    def test_star_dual_adh_check(self, line3):
        # reversing must turn the out-reach of a source into nothing new
        assert pt.adh_star(line3, pset(line3, "a")) == pset(line3, "a")


class TestStructuralInvariants:
    """Exhaustive over all 70 spaces with at most 3 points."""

    def spaces(self):
        for n in range(4):
            yield from enumerate_spaces(n)

    def test_modifications_idempotent_and_growing(self):
        for space in self.spaces():
            t = pt.t_modification(space)
            r = pt.r_modification(space)
            assert pt.t_modification(t) == t
            assert pt.r_modification(r) == r
            for x in range(space.n):
                assert space.rows[x] & ~t.rows[x] == 0
                assert space.rows[x] & ~r.rows[x] == 0

    def test_star_dual_is_an_involution(self):
        for space in self.spaces():
            assert pt.star_dual(pt.star_dual(space)) == space

    def test_monotonicity(self):
        # all ordered pairs at two points, the full fan-out cone at three
        pairs = [(s, t) for s in enumerate_spaces(2) for t in enumerate_spaces(2)]
        fans = list(enumerate_spaces(3))
        pairs += [(fans[0b000011], t) for t in fans]
        for small_space, big_space in pairs:
            n = small_space.n
            if any(small_space.rows[x] & ~big_space.rows[x] for x in range(n)):
                continue
            for mod in (pt.t_modification, pt.r_modification):
                small, big = mod(small_space), mod(big_space)
                assert all(small.rows[x] & ~big.rows[x] == 0 for x in range(n))

    def test_r_commutes_with_subspace(self):
        for space in self.spaces():
            for a in all_subsets(space):
                assert pt.subspace(pt.r_modification(space), a) == pt.r_modification(
                    pt.subspace(space, a)
                )

    def test_t_of_subspace_dominates_restricted_t(self):
        # arrows of T(s|A) form a subset of the arrows of (Ts)|A
        for space in self.spaces():
            for a in all_subsets(space):
                inner = pt.t_modification(pt.subspace(space, a))
                outer = pt.subspace(pt.t_modification(space), a)
                assert all(
                    inner.rows[x] & ~outer.rows[x] == 0 for x in range(inner.n)
                )

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 2**63), n=st.integers(0, 10))
    def test_reflexivity_survives_everything(self, seed, n):
        space = random_space(n, "1/3", seed)
        others = [
            pt.t_modification(space),
            pt.r_modification(space),
            pt.star_dual(space),
            pt.subspace(space, pt.PointSet(n, (1 << n) - 1 & seed)),
        ]
        if n * n <= 64:
            others.append(pt.product(space, space))
        for s in others:
            assert all(s.rows[x] >> x & 1 for x in range(s.n))
