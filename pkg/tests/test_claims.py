"""Counterexample search for the two recorded claims."""

import pytest

import pretopo as pt
from pretopo.verify import replay_claim, search_counterexample


class TestIteratedReciprocalAdherence:
    def test_no_counterexample_on_tiny_spaces(self):
        assert search_counterexample("C1", 1) is None
        assert search_counterexample("C1", 2) is None

    def test_three_point_counterexample(self):
        outcome = search_counterexample("C1", 3)
        assert outcome is not None and not outcome.passed
        w = outcome.witness
        # least space in enumeration order: one source feeding two sinks
        assert set(w.space.arrows()) == {("a", "b"), ("a", "c")}
        assert w.space.set_labels(w.set_named("A")) == ("b",)
        assert w.param_named("k") == 2
        assert w.space.set_labels(w.set_named("lhs")) == ("a", "b", "c")
        assert w.space.set_labels(w.set_named("rhs")) == ("a", "b")

    def test_witness_replays(self):
        outcome = search_counterexample("C1", 3)
        assert replay_claim(outcome)

    def test_identity_fails_on_the_vee_fixture_too(self, vee):
        # the named fixture carries the same defect with A = {a}
        a = vee.point_set(["a"])
        lhs = pt.iterated_adh(pt.r_modification(vee), a, 2)
        rhs = pt.iterated_adh(vee, a, 2) | pt.iterated_adh(pt.star_dual(vee), a, 2)
        assert lhs == vee.universe()
        assert rhs == vee.point_set(["a", "b"])

    def test_depth_one_always_holds(self):
        # the base identity is a theorem; the search never reports depth 1
        outcome = search_counterexample("C1", 3)
        assert outcome.witness.param_named("k") >= 2


class TestSandwichPropertyUniversality:
    def test_no_counterexample_below_three_points(self):
        assert search_counterexample("C2", 2) is None

    def test_three_point_counterexample(self):
        outcome = search_counterexample("C2", 3)
        assert outcome is not None and not outcome.passed
        w = outcome.witness
        assert set(w.space.arrows()) == {("a", "c"), ("b", "a")}
        assert w.space.set_labels(w.set_named("A")) == ("b",)
        assert w.space.set_labels(w.set_named("B")) == ("b", "c")
        assert replay_claim(outcome)

    def test_line3_is_a_witness_space(self, line3):
        outcome = pt.has_sandwich_property(line3)
        assert not outcome.passed


class TestSearchMechanics:
    def test_budget_caps_the_scan(self):
        # the C1 hit is the tenth space scanned (sizes 0,1,2 then four at size 3)
        assert search_counterexample("C1", 3, budget=9) is None
        assert search_counterexample("C1", 3, budget=10) is not None

    def test_unknown_claim(self):
        with pytest.raises(pt.SpaceError, match="unknown claim"):
            search_counterexample("C3", 3)
