"""Suite runner and report serialization.

A suite run streams spaces (exhaustive enumeration up to a size bound,
then seeded samples), evaluates the selected catalog properties on
each, and aggregates per-property tallies with the canonically first
witness per property.  Reports are pure functions of (catalog, bounds,
seed); wall-clock time is carried in a clearly marked metadata field
excluded from comparisons.  Field names are pinned in
``report_schema.json`` next to the package sources.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction

from ..errors import CapacityError, SpaceError
from ..outcome import CheckOutcome, Witness
from ..space import Space
from .catalog import CATALOG, CATALOG_VERSION, check_with_tables, property_ids
from .generators import ENUMERATION_MAX_N, enumerate_spaces, sample_stream
from .tables import SpaceTables, TABLES_MAX_N

REPORT_NAME = "pretopo-verify"


@dataclass(frozen=True)
class SuiteBounds:
    exhaustive_n: int = 4
    sample_sizes: tuple[int, ...] = ()
    sample_count: int = 0
    seed: int = 0
    edge_probability: Fraction = Fraction(1, 4)

    def validate(self) -> None:
        if not -1 <= self.exhaustive_n <= ENUMERATION_MAX_N:
            raise CapacityError(
                f"exhaustive bound {self.exhaustive_n} outside [-1, {ENUMERATION_MAX_N}]"
            )
        for size in self.sample_sizes:
            if not 0 <= size <= TABLES_MAX_N:
                raise CapacityError(f"sample size {size} outside [0, {TABLES_MAX_N}]")
        if self.sample_count < 0:
            raise SpaceError("sample count must be nonnegative")
        if self.sample_count and not self.sample_sizes:
            raise SpaceError("sampling requires at least one sample size")
        if not 0 <= Fraction(self.edge_probability) <= 1:
            raise SpaceError("edge probability must lie in [0, 1]")


@dataclass
class PropertyTally:
    pid: str
    name: str
    checked: int = 0
    failures: int = 0
    first_witness: Witness | None = None


@dataclass(frozen=True)
class SuiteReport:
    catalog_version: str
    bounds: SuiteBounds
    properties_selected: tuple[str, ...]
    spaces_exhaustive: int
    spaces_sampled: int
    tallies: tuple[PropertyTally, ...]
    failures_total: int
    wall_clock_seconds: float

    @property
    def passed(self) -> bool:
        return self.failures_total == 0

    def to_text(self) -> str:
        b = self.bounds
        lines = [
            f"report: {REPORT_NAME}",
            f"catalog_version: {self.catalog_version}",
            f"seed: {b.seed}",
            f"exhaustive_n: {b.exhaustive_n}",
            f"sample_sizes: {','.join(map(str, b.sample_sizes)) or 'none'}",
            f"sample_count: {b.sample_count}",
            f"edge_probability: {Fraction(b.edge_probability)}",
            f"properties_selected: {_selection_text(self.properties_selected)}",
            f"spaces_exhaustive: {self.spaces_exhaustive}",
            f"spaces_sampled: {self.spaces_sampled}",
        ]
        for tally in self.tallies:
            lines.append(
                f"property: {tally.pid} {tally.name} "
                f"checked={tally.checked} failures={tally.failures}"
            )
            if tally.first_witness is not None:
                lines.append(f"witness: {tally.pid} {witness_text(tally.first_witness)}")
        lines.append(f"failures_total: {self.failures_total}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        lines.append(f"# wall_clock_seconds: {self.wall_clock_seconds:.3f}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        b = self.bounds
        return {
            "report": REPORT_NAME,
            "catalog_version": self.catalog_version,
            "bounds": {
                "seed": b.seed,
                "exhaustive_n": b.exhaustive_n,
                "sample_sizes": list(b.sample_sizes),
                "sample_count": b.sample_count,
                "edge_probability": str(Fraction(b.edge_probability)),
            },
            "properties_selected": list(self.properties_selected),
            "spaces_exhaustive": self.spaces_exhaustive,
            "spaces_sampled": self.spaces_sampled,
            "results": [
                {
                    "property": t.pid,
                    "name": t.name,
                    "checked": t.checked,
                    "failures": t.failures,
                    "witness": None if t.first_witness is None else witness_json(t.first_witness),
                }
                for t in self.tallies
            ],
            "failures_total": self.failures_total,
            "result": "PASS" if self.passed else "FAIL",
            "meta": {"wall_clock_seconds": round(self.wall_clock_seconds, 3)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def _selection_text(selected: tuple[str, ...]) -> str:
    return "all" if selected == property_ids() else ",".join(selected)


def space_one_liner(space: Space) -> str:
    points = ",".join(space.labels)
    arrows = ",".join(f"{src}>{dst}" for src, dst in space.arrows())
    return f"points={points};arrows={arrows}"


def _set_text(witness: Witness, name: str) -> str:
    labels = witness.space.set_labels(witness.set_named(name))
    return "{" + ",".join(labels) + "}"


def witness_text(witness: Witness) -> str:
    parts = [f'space="{space_one_liner(witness.space)}"']
    if witness.sets:
        sets = ";".join(f"{name}={_set_text(witness, name)}" for name, _ in witness.sets)
        parts.append(f'sets="{sets}"')
    if witness.params:
        params = ";".join(f"{name}={value}" for name, value in witness.params)
        parts.append(f'params="{params}"')
    parts.append(f'note="{witness.note}"')
    return " ".join(parts)


def witness_json(witness: Witness) -> dict:
    return {
        "space": {
            "labels": list(witness.space.labels),
            "arrows": [list(arrow) for arrow in witness.space.arrows()],
        },
        "sets": {
            name: list(witness.space.set_labels(value)) for name, value in witness.sets
        },
        "params": {name: value for name, value in witness.params},
        "note": witness.note,
    }


def run_suite(bounds: SuiteBounds, properties: tuple[str, ...] | None = None) -> SuiteReport:
    """Run the selected properties over the bounded instance stream."""
    bounds.validate()
    if properties is None:
        selected = property_ids()
    else:
        for pid in properties:
            if pid not in CATALOG:
                raise SpaceError(f"unknown property id {pid!r}")
        selected = tuple(properties)
    specs = [CATALOG[pid] for pid in selected]
    tallies = {pid: PropertyTally(pid, CATALOG[pid].name) for pid in selected}

    start = time.perf_counter()
    spaces_exhaustive = 0
    spaces_sampled = 0

    def consume(space: Space) -> None:
        tables = SpaceTables(space)
        for spec in specs:
            outcome: CheckOutcome = check_with_tables(spec, space, tables)
            tally = tallies[spec.pid]
            tally.checked += 1
            if not outcome.passed:
                tally.failures += 1
                if tally.first_witness is None:
                    tally.first_witness = outcome.witness

    for n in range(bounds.exhaustive_n + 1):
        for space in enumerate_spaces(n):
            spaces_exhaustive += 1
            consume(space)
    for space in sample_stream(
        bounds.sample_sizes, bounds.sample_count, bounds.edge_probability, bounds.seed
    ):
        spaces_sampled += 1
        consume(space)

    return SuiteReport(
        catalog_version=CATALOG_VERSION,
        bounds=bounds,
        properties_selected=selected,
        spaces_exhaustive=spaces_exhaustive,
        spaces_sampled=spaces_sampled,
        tallies=tuple(tallies[pid] for pid in selected),
        failures_total=sum(t.failures for t in tallies.values()),
        wall_clock_seconds=time.perf_counter() - start,
    )
