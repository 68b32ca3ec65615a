"""T-subspace detection and path diagnostics.

A subset is a T-subspace when taking the topological modification
commutes with restricting to the subset.  The detector compares the two
digraphs directly; the path scan below provides witnesses and an
independent route for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bitops import iter_bits
from .errors import SpaceError
from .pointset import PointSet
from .space import Point, Space, subspace, t_modification


@dataclass(frozen=True)
class ArrowPath:
    """A directed path, kept as evidence; consecutive points are joined by arrows."""

    points: tuple[Point, ...]

    def __post_init__(self):
        if not self.points:
            raise SpaceError("a path has at least one point")

    def __len__(self) -> int:
        return len(self.points)


def find_path(
    space: Space, a: Point, b: Point, within: PointSet | None = None
) -> ArrowPath | None:
    """Shortest directed path from ``a`` to ``b``, or None if unreachable.

    Ties break toward lexicographically least index sequences.  When
    ``within`` is given both endpoints must lie in it and the whole path
    stays inside it.
    """
    space.check_point(a)
    space.check_point(b)
    allowed = space.check_set(within) if within is not None else (1 << space.n) - 1
    if within is not None and (not allowed >> a & 1 or not allowed >> b & 1):
        raise SpaceError("path endpoints must lie in the restriction set")

    # Backward BFS from b gives distances; a greedy forward walk that
    # always picks the least-index next point yields the canonical path.
    dist = {b: 0}
    frontier = [b]
    while frontier:
        nxt = []
        for y in frontier:
            for x in range(space.n):
                if allowed >> x & 1 and space.rows[x] >> y & 1 and x not in dist:
                    dist[x] = dist[y] + 1
                    nxt.append(x)
        frontier = nxt
    if a not in dist:
        return None
    path = [a]
    cur = a
    while cur != b:
        step = next(
            x
            for x in iter_bits(space.rows[cur] & allowed)
            if dist.get(x, -1) == dist[cur] - 1
        )
        path.append(step)
        cur = step
    return ArrowPath(tuple(path))


def is_t_subspace(space: Space, a: PointSet) -> bool:
    """Digraph equality of the two orders of modification and restriction."""
    space.check_set(a)
    return t_modification(subspace(space, a)) == subspace(t_modification(space), a)


def t_subspace_defect_witness(space: Space, a: PointSet) -> tuple[Point, Point] | None:
    """Least pair joined by a path in the space but by none inside ``a``.

    Returns None exactly when ``a`` is a T-subspace; pairs are ordered
    lexicographically on point indices.
    """
    amask = space.check_set(a)
    reach = t_modification(space).rows
    for x in iter_bits(amask):
        for y in iter_bits(reach[x] & amask):
            if x == y:
                continue
            if find_path(space, x, y, within=a) is None:
                return (x, y)
    return None
