"""Brute-force reference implementations.

Everything here is evaluated straight from the defining quantifiers,
touching only raw arrows (``space.rows``) and deliberately sharing no
operator code with the fast implementations it validates.  Exponential
cost is accepted; capacity bounds keep it at desk scale.
"""

from __future__ import annotations

from ._bitops import iter_bits, subsets_of, supersets_within
from .errors import CapacityError, SpaceError
from .pointset import PointSet
from .space import Space

BRUTE_MAX_BITS = 20


def _check_capacity(bits: int, what: str) -> None:
    if bits > BRUTE_MAX_BITS:
        raise CapacityError(f"{what} enumerates 2^{bits} cases; capped at 2^{BRUTE_MAX_BITS}")


def connected_by_clopen(space: Space, a: PointSet) -> bool:
    """Connectedness by the definition: only trivial clopen subsets of the subspace.

    A subset C of A is clopen in the subspace exactly when no arrow
    inside A crosses between C and A minus C in either direction; the
    subspace is connected when every proper nonempty C has a crossing.
    """
    amask = space.check_set(a)
    _check_capacity(amask.bit_count(), "clopen connectivity")
    for c in subsets_of(amask):
        if c == 0 or c == amask:
            continue
        rest = amask ^ c
        crossing = any(space.rows[x] & rest for x in iter_bits(c)) or any(
            space.rows[y] & c for y in iter_bits(rest)
        )
        if not crossing:
            return False
    return True


def _require_connected_nonempty(space: Space, a: PointSet) -> None:
    if a.mask == 0:
        raise SpaceError("the enclosed set must be nonempty")
    if not connected_by_clopen(space, a):
        raise SpaceError("the enclosed set must be connected")


def enclosure_brute(space: Space, a: PointSet) -> PointSet:
    """Direct evaluation: all points whose addition keeps ``a`` connected."""
    _require_connected_nonempty(space, a)
    out = 0
    for x in range(space.n):
        if connected_by_clopen(space, PointSet(space.n, a.mask | 1 << x)):
            out |= 1 << x
    return PointSet(space.n, out)


def encloses_brute(space: Space, s: PointSet, a: PointSet) -> bool:
    """Quantify connectedness over every set between ``a`` and ``s``."""
    space.check_set(s)
    _require_connected_nonempty(space, a)
    if a.mask & ~s.mask:
        raise SpaceError("the enclosed set must lie inside the candidate encloser")
    _check_capacity((s.mask & ~a.mask).bit_count(), "enclosing test")
    return all(
        connected_by_clopen(space, PointSet(space.n, b))
        for b in supersets_within(a.mask, s.mask)
    )


def t_subspace_brute(space: Space, a: PointSet) -> bool:
    """Quantify over subsets B of A: adherence-closed in A implies closure-closed in A."""
    amask = space.check_set(a)
    _check_capacity(amask.bit_count(), "T-subspace test")
    for b in subsets_of(amask):
        adh_b = b
        for x in iter_bits(b):
            adh_b |= space.rows[x]
        if adh_b & amask != b:
            continue
        cl_b = b
        while True:
            grown = cl_b
            for x in iter_bits(cl_b):
                grown |= space.rows[x]
            if grown == cl_b:
                break
            cl_b = grown
        if cl_b & amask != b:
            return False
    return True
