"""Machine-checking harness: generators, property catalog, claims, runner."""

from .catalog import (
    CATALOG,
    CATALOG_VERSION,
    PropertySpec,
    check_property,
    property_ids,
    replay_outcome,
)
from .claims import CLAIM_IDS, replay_claim, search_counterexample
from .generators import enumerate_spaces, point_labels, random_space, sample_stream, splitmix64
from .runner import (
    PropertyTally,
    SuiteBounds,
    SuiteReport,
    run_suite,
    space_one_liner,
    witness_json,
    witness_text,
)
from .tables import SpaceTables

__all__ = [
    "CATALOG",
    "CATALOG_VERSION",
    "CLAIM_IDS",
    "PropertySpec",
    "PropertyTally",
    "SpaceTables",
    "SuiteBounds",
    "SuiteReport",
    "check_property",
    "enumerate_spaces",
    "point_labels",
    "property_ids",
    "random_space",
    "replay_claim",
    "replay_outcome",
    "run_suite",
    "sample_stream",
    "search_counterexample",
    "space_one_liner",
    "splitmix64",
    "witness_json",
    "witness_text",
]
