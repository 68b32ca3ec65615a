"""Finite convergence spaces as reflexive digraphs.

A pretopology on a finite point set is determined by the limits of
principal ultrafilters, i.e. by a reflexive digraph: an arrow ``x -> y``
records that ``y`` is a limit of the principal ultrafilter at ``x``.
``Space`` stores one adjacency row per point (a bitmask of
out-neighbors, loop included) plus a label table.  Spaces are immutable
values; all constructions return new spaces.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ._bitops import (
    bit,
    iter_bits,
    full_mask,
    reverse_rows,
    symmetric_rows,
    transitive_closure_rows,
)
from .errors import CapacityError, SpaceError
from .pointset import CAPACITY, PointSet

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")

Point = int


@dataclass(frozen=True, eq=True)
class Space:
    """A finite pretopology: label table plus reflexive adjacency rows.

    Equality is label-and-arrow equality on identically ordered label
    tables; isomorphism is deliberately not considered.
    """

    labels: tuple[str, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if n > CAPACITY:
            raise CapacityError(f"{n} points exceed capacity {CAPACITY}")
        if len(self.rows) != n:
            raise SpaceError("label table and adjacency rows disagree in length")
        seen = set()
        for lab in self.labels:
            if not LABEL_RE.match(lab):
                raise SpaceError(f"label {lab!r} is not an ASCII identifier")
            if lab in seen:
                raise SpaceError(f"duplicate label {lab!r}")
            seen.add(lab)
        univ = full_mask(n)
        for x, row in enumerate(self.rows):
            if row & ~univ:
                raise SpaceError(f"row of {self.labels[x]!r} points outside the space")
            if not row >> x & 1:
                raise SpaceError(f"missing loop at {self.labels[x]!r}; spaces are reflexive")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    def universe(self) -> PointSet:
        return PointSet.full(self.n)

    def point(self, label: str) -> Point:
        try:
            return self._index[label]
        except KeyError:
            raise SpaceError(f"unknown label {label!r}") from None

    def label(self, index: Point) -> str:
        self.check_point(index)
        return self.labels[index]

    def check_point(self, index: Point) -> None:
        if not 0 <= index < self.n:
            raise SpaceError(f"point index {index} out of range for a {self.n}-point space")

    def check_set(self, ps: PointSet) -> int:
        if ps.universe != self.n:
            raise SpaceError(
                f"point set over universe of {ps.universe} used with a {self.n}-point space"
            )
        return ps.mask

    def point_set(self, labels: Iterable[str]) -> PointSet:
        return PointSet.of(self.n, (self.point(lab) for lab in labels))

    def set_labels(self, ps: PointSet) -> tuple[str, ...]:
        self.check_set(ps)
        return tuple(self.labels[i] for i in ps)

    def arrow(self, x: Point, y: Point) -> bool:
        self.check_point(x)
        self.check_point(y)
        return self.rows[x] >> y & 1 == 1

    def out_set(self, x: Point) -> PointSet:
        self.check_point(x)
        return PointSet(self.n, self.rows[x])

    def arrows(self, *, loops: bool = False) -> Iterator[tuple[str, str]]:
        """Arrow pairs as labels, row-major; loops omitted unless asked for."""
        for x in range(self.n):
            for y in iter_bits(self.rows[x]):
                if x != y or loops:
                    yield (self.labels[x], self.labels[y])


def make_space(labels: Iterable[str], arrows: Iterable[tuple[str, str]]) -> Space:
    """Build a space from labels and label-pair arrows; loops are implicit.

    Duplicate arrows collapse; duplicate labels, unknown endpoints and
    more than 64 labels are errors.
    """
    labels = tuple(labels)
    index: dict[str, int] = {}
    for lab in labels:
        if lab in index:
            raise SpaceError(f"duplicate label {lab!r}")
        index[lab] = len(index)
    if len(labels) > CAPACITY:
        raise CapacityError(f"{len(labels)} labels exceed capacity {CAPACITY}")
    rows = [bit(x) for x in range(len(labels))]
    for src, dst in arrows:
        if src not in index:
            raise SpaceError(f"unknown arrow endpoint label {src!r}")
        if dst not in index:
            raise SpaceError(f"unknown arrow endpoint label {dst!r}")
        rows[index[src]] |= bit(index[dst])
    return Space(labels, tuple(rows))


def space_from_rows(labels: Iterable[str], rows: Iterable[int]) -> Space:
    """Internal-style constructor from prebuilt masks; loops are added."""
    labels = tuple(labels)
    return Space(labels, tuple(row | bit(x) for x, row in enumerate(rows)))


def subspace(space: Space, a: PointSet) -> Space:
    """Induced convergence on ``a``: the induced subdigraph, labels kept."""
    amask = space.check_set(a)
    kept = list(iter_bits(amask))
    pos = {x: i for i, x in enumerate(kept)}
    labels = tuple(space.labels[x] for x in kept)
    rows = []
    for x in kept:
        row = space.rows[x] & amask
        packed = 0
        for y in iter_bits(row):
            packed |= bit(pos[y])
        rows.append(packed)
    return Space(labels, tuple(rows))


def product(s1: Space, s2: Space) -> Space:
    """Product pretopology: arrows act componentwise on point pairs."""
    n1, n2 = s1.n, s2.n
    if n1 * n2 > CAPACITY:
        raise CapacityError(f"product of {n1} x {n2} points exceeds capacity {CAPACITY}")
    labels = tuple(f"{u}_{v}" for u in s1.labels for v in s2.labels)
    rows = []
    for x in range(n1):
        for y in range(n2):
            row = 0
            for x2 in iter_bits(s1.rows[x]):
                row |= s2.rows[y] << (x2 * n2)
            rows.append(row)
    return Space(labels, tuple(rows))


def t_modification(space: Space) -> Space:
    """Topological modification: transitive closure of the digraph."""
    return Space(space.labels, transitive_closure_rows(space.rows, space.n))


def r_modification(space: Space) -> Space:
    """Reciprocal modification: symmetric closure of the digraph."""
    return Space(space.labels, symmetric_rows(space.rows, space.n))


def star_dual(space: Space) -> Space:
    """Dual pretopology: the arrow-reversed digraph (an involution)."""
    return Space(space.labels, reverse_rows(space.rows, space.n))
