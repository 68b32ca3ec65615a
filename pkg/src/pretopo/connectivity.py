"""Connectedness of spaces and subsets, enclosure, sandwiched sets.

A finite convergence space is connected exactly when its underlying
undirected graph is; the empty space and empty subset count as
connected by convention, with the operators that need nonemptiness
carrying that restriction as a precondition.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bitops import (
    canonical_key,
    full_mask,
    reach_within,
    subsets_of,
    supersets_within,
    symmetric_rows,
    weakly_connected,
)
from .calculus import adh, adh_star, closure
from .errors import CapacityError, SpaceError
from .outcome import CheckOutcome, Witness
from .pointset import PointSet
from .space import Space, r_modification, t_modification

ENUMERATION_MAX_N = 24


@dataclass(frozen=True)
class SandwichClassification:
    """Connectedness flags of one subset across the T and r modifications."""

    xi_connected: bool
    sandwiched: bool
    t_connected: bool
    r_sandwiched: bool
    tr_connected: bool
    witness: PointSet | None

    def __post_init__(self):
        # Implication diagram; these are theorems, so a violation means
        # the flags were not produced by classify_sandwich.
        if self.xi_connected and not self.sandwiched:
            raise SpaceError("connected subsets are sandwiched")
        if self.sandwiched and not self.t_connected:
            raise SpaceError("sandwiched subsets are connected in the T modification")
        if self.sandwiched and not self.r_sandwiched:
            raise SpaceError("sandwiched subsets are sandwiched in the r modification")
        if self.t_connected and not self.tr_connected:
            raise SpaceError("T-connected subsets are connected in T of the r modification")


def _und(space: Space) -> tuple[int, ...]:
    return symmetric_rows(space.rows, space.n)


def is_connected(space: Space) -> bool:
    """Weak connectivity of the underlying digraph; empty space is connected."""
    return weakly_connected(_und(space), full_mask(space.n))


def is_connected_subset(space: Space, a: PointSet) -> bool:
    """Connectedness of ``a`` as a subspace."""
    m = space.check_set(a)
    return weakly_connected(_und(space), m)


def components(space: Space) -> list[PointSet]:
    """Weak components: the partition of the points into maximal connected sets."""
    return components_within(space, space.universe())


def components_within(space: Space, a: PointSet) -> list[PointSet]:
    """Components of the subspace on ``a``, reported in ambient coordinates."""
    m = space.check_set(a)
    und = _und(space)
    out = []
    rest = m
    while rest:
        comp = reach_within(und, rest & -rest, rest)
        out.append(PointSet(space.n, comp))
        rest &= ~comp
    return out


def _require_connected_nonempty(space: Space, a: PointSet) -> int:
    m = space.check_set(a)
    if m == 0:
        raise SpaceError("enclosure is defined for nonempty sets only")
    if not weakly_connected(_und(space), m):
        raise SpaceError("enclosure is defined for connected sets only")
    return m


def enclosure(space: Space, a: PointSet) -> PointSet:
    """Largest set enclosing connected nonempty ``a``.

    Equals the adherence of ``a`` in the reciprocal modification, i.e.
    the union of the adherence and the dual adherence.
    """
    _require_connected_nonempty(space, a)
    return adh(space, a) | adh_star(space, a)


def encloses(space: Space, s: PointSet, a: PointSet) -> bool:
    """Is every set between connected ``a`` and ``s`` connected?"""
    _require_connected_nonempty(space, a)
    space.check_set(s)
    if not a <= s:
        raise SpaceError("enclosing is asked of supersets of the enclosed set")
    return s <= enclosure(space, a)


def has_sandwich_property(space: Space) -> CheckOutcome:
    """Does the closure of every connected subset enclose it?

    On failure the witness carries the first connected set whose closure
    overshoots its enclosure, plus a disconnected set in between.
    """
    if space.n > ENUMERATION_MAX_N:
        raise CapacityError(f"sandwich-property scan is capped at {ENUMERATION_MAX_N} points")
    und = _und(space)
    candidates = sorted(range(1, 1 << space.n), key=canonical_key)
    for m in candidates:
        if not weakly_connected(und, m):
            continue
        a = PointSet(space.n, m)
        cl = closure(space, a)
        enc = enclosure(space, a)
        if cl <= enc:
            continue
        bad = min(
            (
                b
                for b in supersets_within(m, cl.mask)
                if not weakly_connected(und, b)
            ),
            key=canonical_key,
        )
        witness = Witness(
            space,
            sets=(("A", a), ("B", PointSet(space.n, bad))),
            note="closure of A does not enclose A; B lies between and is disconnected",
        )
        return CheckOutcome("sandwich-property", False, witness)
    return CheckOutcome("sandwich-property", True)


def is_sandwiched(space: Space, b: PointSet) -> PointSet | None:
    """Find a connected subset of ``b`` whose closure covers ``b``.

    Returns the first witness by ascending size then mask order, or
    None when ``b`` is not sandwiched.
    """
    bm = space.check_set(b)
    if space.n > ENUMERATION_MAX_N:
        raise CapacityError(f"sandwiched-set scan is capped at {ENUMERATION_MAX_N} points")
    und = _und(space)
    for am in sorted(subsets_of(bm), key=canonical_key):
        if am == 0 and bm != 0:
            continue
        if not weakly_connected(und, am):
            continue
        a = PointSet(space.n, am)
        if b <= closure(space, a):
            return a
    return None


def classify_sandwich(space: Space, b: PointSet) -> SandwichClassification:
    """All five diagram flags for ``b``, with the sandwiching witness if any."""
    space.check_set(b)
    r_space = r_modification(space)
    witness = is_sandwiched(space, b)
    return SandwichClassification(
        xi_connected=is_connected_subset(space, b),
        sandwiched=witness is not None,
        t_connected=is_connected_subset(t_modification(space), b),
        r_sandwiched=is_sandwiched(r_space, b) is not None,
        tr_connected=is_connected_subset(t_modification(r_space), b),
        witness=witness,
    )
