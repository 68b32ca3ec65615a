"""Suite runner: aggregation, report formats, determinism."""

import json
from fractions import Fraction
from importlib import resources

import pytest

import pretopo as pt
from pretopo.outcome import Witness
from pretopo.verify import (
    SuiteBounds,
    run_suite,
    space_one_liner,
    witness_json,
    witness_text,
)

BOUNDS = SuiteBounds(exhaustive_n=2, sample_sizes=(6,), sample_count=20, seed=5)


def strip_wall_clock(text):
    return "\n".join(l for l in text.splitlines() if not l.startswith("# wall_clock"))


class TestBounds:
    def test_validation(self):
        with pytest.raises(pt.CapacityError):
            run_suite(SuiteBounds(exhaustive_n=6))
        with pytest.raises(pt.CapacityError):
            run_suite(SuiteBounds(exhaustive_n=0, sample_sizes=(11,), sample_count=1))
        with pytest.raises(pt.SpaceError):
            run_suite(SuiteBounds(exhaustive_n=0, sample_count=5))
        with pytest.raises(pt.SpaceError):
            run_suite(SuiteBounds(edge_probability=Fraction(3, 2)))

    def test_unknown_property(self):
        with pytest.raises(pt.SpaceError):
            run_suite(SuiteBounds(exhaustive_n=1), properties=("P99",))


class TestRun:
    def test_counts_and_pass(self):
        report = run_suite(BOUNDS)
        assert report.spaces_exhaustive == 6
        assert report.spaces_sampled == 20
        assert report.failures_total == 0 and report.passed
        for tally in report.tallies:
            assert tally.checked == 26
            assert tally.failures == 0 and tally.first_witness is None

    def test_empty_run(self):
        report = run_suite(SuiteBounds(exhaustive_n=-1))
        assert report.spaces_exhaustive == 0 and report.spaces_sampled == 0
        assert report.passed

    def test_size_zero_bound_covers_the_empty_space(self):
        report = run_suite(SuiteBounds(exhaustive_n=0))
        assert report.spaces_exhaustive == 1 and report.passed

    def test_property_subset(self):
        report = run_suite(SuiteBounds(exhaustive_n=1), properties=("P9", "P11"))
        assert [t.pid for t in report.tallies] == ["P9", "P11"]
        assert "properties_selected: P9,P11" in report.to_text()

    def test_determinism(self):
        one = run_suite(BOUNDS)
        two = run_suite(BOUNDS)
        assert strip_wall_clock(one.to_text()) == strip_wall_clock(two.to_text())
        d1, d2 = one.to_json_dict(), two.to_json_dict()
        del d1["meta"]["wall_clock_seconds"], d2["meta"]["wall_clock_seconds"]
        assert d1 == d2


class TestReportFormats:
    def test_text_layout(self):
        text = run_suite(SuiteBounds(exhaustive_n=1)).to_text()
        lines = text.splitlines()
        assert lines[0] == "report: pretopo-verify"
        assert "seed: 0" in lines
        assert "sample_sizes: none" in lines
        assert "edge_probability: 1/4" in lines
        assert sum(1 for l in lines if l.startswith("property: ")) == 20
        assert lines[-3] == "failures_total: 0"
        assert lines[-2] == "result: PASS"
        assert lines[-1].startswith("# wall_clock_seconds: ")

    def test_json_matches_pinned_schema(self):
        schema = json.loads(
            resources.files("pretopo").joinpath("report_schema.json").read_text()
        )
        doc = run_suite(SuiteBounds(exhaustive_n=1)).to_json_dict()
        assert list(doc) == schema["json"]["top_level_keys"]
        assert list(doc["bounds"]) == schema["json"]["bounds_keys"]
        assert list(doc["results"][0]) == schema["json"]["result_keys"]

    def test_json_round_trips_through_text(self):
        report = run_suite(SuiteBounds(exhaustive_n=1))
        parsed = json.loads(report.to_json())
        assert parsed["result"] == "PASS"
        assert parsed["spaces_exhaustive"] == 2


class TestWitnessRendering:
    def witness(self):
        kite = pt.fixture("kite")
        return Witness(
            kite,
            sets=(("A", kite.point_set(["d"])), ("B", kite.point_set(["b", "d"]))),
            params=(("k", 2),),
            note="example",
        )

    def test_space_one_liner(self):
        assert space_one_liner(pt.fixture("line3")) == "points=a,b,c;arrows=a>b,b>c"
        assert space_one_liner(pt.make_space(["q"], [])) == "points=q;arrows="

    def test_witness_text(self):
        assert witness_text(self.witness()) == (
            'space="points=a,b,c,d;arrows=a>b,c>b,d>c" '
            'sets="A={d};B={b,d}" params="k=2" note="example"'
        )

    def test_witness_json(self):
        doc = witness_json(self.witness())
        assert doc["sets"] == {"A": ["d"], "B": ["b", "d"]}
        assert doc["params"] == {"k": 2}
        assert doc["space"]["labels"] == ["a", "b", "c", "d"]
