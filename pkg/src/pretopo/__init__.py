"""Calculus and verification engine for finite convergence spaces.

Finite pretopologies are reflexive digraphs; this package provides the
operator algebra on them (adherence, closure, modifications, enclosure,
T-subspace tests), brute-force oracles, and a machine-checking harness
with exhaustive and randomized campaigns plus counterexample search.
"""

from .calculus import (
    DefectProfile,
    adh,
    adh_star,
    closure,
    is_clopen,
    is_closed,
    is_open,
    iterated_adh,
    lim_principal,
    open_sets,
    topological_defect,
    vicinity,
)
from .connectivity import (
    SandwichClassification,
    classify_sandwich,
    components,
    components_within,
    enclosure,
    encloses,
    has_sandwich_property,
    is_connected,
    is_connected_subset,
    is_sandwiched,
)
from .errors import CapacityError, ParseError, SpaceError
from .fixtures import fixture, fixture_names
from .outcome import CheckOutcome, Witness
from .pointset import CAPACITY, PointSet
from .space import (
    Space,
    make_space,
    product,
    r_modification,
    space_from_rows,
    star_dual,
    subspace,
    t_modification,
)
from .tsubspace import ArrowPath, find_path, is_t_subspace, t_subspace_defect_witness
from . import oracle, verify

__version__ = "0.1.0"

__all__ = [
    "ArrowPath",
    "CAPACITY",
    "CapacityError",
    "CheckOutcome",
    "DefectProfile",
    "ParseError",
    "PointSet",
    "SandwichClassification",
    "Space",
    "SpaceError",
    "Witness",
    "adh",
    "adh_star",
    "classify_sandwich",
    "closure",
    "components",
    "components_within",
    "enclosure",
    "encloses",
    "find_path",
    "fixture",
    "fixture_names",
    "has_sandwich_property",
    "is_clopen",
    "is_closed",
    "is_connected",
    "is_connected_subset",
    "is_open",
    "is_sandwiched",
    "is_t_subspace",
    "iterated_adh",
    "lim_principal",
    "make_space",
    "open_sets",
    "product",
    "r_modification",
    "space_from_rows",
    "star_dual",
    "subspace",
    "t_modification",
    "t_subspace_defect_witness",
    "topological_defect",
    "vicinity",
]
