"""Operator algebra on a fixed space.

On a finite set every filter is principal, so the filter ``F0^`` is
represented by its base set and all limit computations reduce to
intersections and unions of adjacency rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bitops import bit, image, iter_bits, full_mask, transitive_closure_rows
from .errors import CapacityError, SpaceError
from .pointset import PointSet
from .space import Point, Space

OPEN_SETS_MAX_N = 24


@dataclass(frozen=True)
class DefectProfile:
    """Per-point adherence iteration counts and their maximum."""

    per_point: tuple[int, ...]
    defect: int

    def __post_init__(self):
        expected = max(self.per_point, default=0)
        if self.defect != expected:
            raise SpaceError("defect must be the maximum of the per-point counts")


def lim_principal(space: Space, f0: PointSet) -> PointSet:
    """Limit set of the principal filter with base ``f0`` (nonempty)."""
    m = space.check_set(f0)
    if m == 0:
        raise SpaceError("the degenerate filter with empty base has no limit set")
    acc = full_mask(space.n)
    for x in iter_bits(m):
        acc &= space.rows[x]
    return PointSet(space.n, acc)


def vicinity(space: Space, x: Point) -> PointSet:
    """Base of the vicinity filter of ``x``: all points converging to it."""
    space.check_point(x)
    m = 0
    for a in range(space.n):
        if space.rows[a] >> x & 1:
            m |= bit(a)
    return PointSet(space.n, m)


def adh(space: Space, a: PointSet) -> PointSet:
    """Principal adherence: ``a`` together with its out-neighbors."""
    m = space.check_set(a)
    return PointSet(space.n, image(space.rows, m))


def adh_star(space: Space, a: PointSet) -> PointSet:
    """Adherence of the dual pretopology: ``a`` plus its in-neighbors."""
    m = space.check_set(a)
    acc = m
    for t in range(space.n):
        if space.rows[t] & m:
            acc |= bit(t)
    return PointSet(space.n, acc)


def iterated_adh(space: Space, a: PointSet, k: int) -> PointSet:
    """k-fold adherence: points reachable from ``a`` by paths of length <= k."""
    m = space.check_set(a)
    if k < 0:
        raise SpaceError("iteration count must be nonnegative")
    for _ in range(k):
        nxt = image(space.rows, m)
        if nxt == m:
            break
        m = nxt
    return PointSet(space.n, m)


def closure(space: Space, a: PointSet) -> PointSet:
    """Topological closure: forward reachability from ``a``."""
    m = space.check_set(a)
    while True:
        nxt = image(space.rows, m)
        if nxt == m:
            return PointSet(space.n, m)
        m = nxt


def topological_defect(space: Space) -> DefectProfile:
    """Least iteration counts after which adherence reaches closure.

    Adherence and closure are both additive, so the maximum over
    singletons bounds every subset; empty and discrete spaces get 0.
    """
    tc = transitive_closure_rows(space.rows, space.n)
    per_point = []
    for x in range(space.n):
        cur = bit(x)
        target = tc[x]
        k = 0
        while cur != target:
            cur = image(space.rows, cur)
            k += 1
        per_point.append(k)
    return DefectProfile(tuple(per_point), max(per_point, default=0))


def is_open(space: Space, a: PointSet) -> bool:
    """No arrow from outside ``a`` lands in ``a``.

    Principal ultrafilters suffice: for a filter with base F0, a limit
    point inside ``a`` lies in every out-row of F0, so singleton
    openness already forces F0 inside ``a``.
    """
    m = space.check_set(a)
    for x in range(space.n):
        if not m >> x & 1 and space.rows[x] & m:
            return False
    return True


def is_closed(space: Space, a: PointSet) -> bool:
    """All limits of filters living on ``a`` stay in ``a``: adh(a) == a."""
    m = space.check_set(a)
    return image(space.rows, m) == m


def is_clopen(space: Space, a: PointSet) -> bool:
    return is_closed(space, a) and is_open(space, a)


def open_sets(space: Space) -> list[PointSet]:
    """All open subsets, ascending mask order; a topology on the points."""
    if space.n > OPEN_SETS_MAX_N:
        raise CapacityError(f"open-set enumeration is capped at {OPEN_SETS_MAX_N} points")
    out = []
    for m in range(1 << space.n):
        ps = PointSet(space.n, m)
        if is_open(space, ps):
            out.append(ps)
    return out
