"""Point sets over a fixed finite universe.

A ``PointSet`` is an immutable subset of ``range(universe)`` backed by a
single bitmask, so equality, boolean algebra and subset tests are single
integer operations.  Universe sizes are capped at 64 so every set fits
one machine word.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ._bitops import full_mask, iter_bits
from .errors import CapacityError, SpaceError

CAPACITY = 64


@dataclass(frozen=True)
class PointSet:
    universe: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.universe <= CAPACITY:
            raise CapacityError(f"universe size {self.universe} exceeds capacity {CAPACITY}")
        if self.mask < 0 or self.mask >> self.universe:
            raise SpaceError(f"mask {self.mask:#x} has members outside universe of {self.universe}")

    @classmethod
    def of(cls, universe: int, indices: Iterable[int]) -> PointSet:
        m = 0
        for x in indices:
            if not 0 <= x < universe:
                raise SpaceError(f"point index {x} out of range for universe of {universe}")
            m |= 1 << x
        return cls(universe, m)

    @classmethod
    def empty(cls, universe: int) -> PointSet:
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: int) -> PointSet:
        return cls(universe, full_mask(universe))

    def _check_same(self, other: PointSet) -> None:
        if self.universe != other.universe:
            raise SpaceError("point sets live in different universes")

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.universe and self.mask >> x & 1 == 1

    def __or__(self, other: PointSet) -> PointSet:
        self._check_same(other)
        return PointSet(self.universe, self.mask | other.mask)

    def __and__(self, other: PointSet) -> PointSet:
        self._check_same(other)
        return PointSet(self.universe, self.mask & other.mask)

    def __sub__(self, other: PointSet) -> PointSet:
        self._check_same(other)
        return PointSet(self.universe, self.mask & ~other.mask)

    def __le__(self, other: PointSet) -> bool:
        self._check_same(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> PointSet:
        return PointSet(self.universe, full_mask(self.universe) & ~self.mask)

    def with_point(self, x: int) -> PointSet:
        if not 0 <= x < self.universe:
            raise SpaceError(f"point index {x} out of range for universe of {self.universe}")
        return PointSet(self.universe, self.mask | 1 << x)

    def issubset(self, other: PointSet) -> bool:
        return self <= other

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"PointSet({self.universe}, {{{', '.join(map(str, self))}}})"
