"""Per-space operator tables backing the property catalog.

One ``SpaceTables`` holds, for every subset mask of a space, the values
of the operators the catalog quantifies over: adherence, dual and
reciprocal adherence, closure, connectivity (by two independent
routes), T-subspace detection (by two routes).  Tables are numpy arrays
indexed by mask and are built by the selected kernel backend; grids
shared by all spaces of one size are cached per size.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .. import _kernels as k
from ..errors import CapacityError
from ..space import Space

TABLES_MAX_N = 10

_U0 = np.uint64(0)


class SizeGrids:
    """Mask-indexed helper grids reused by every space of one size."""

    def __init__(self, n: int):
        self.n = n
        size = 1 << n
        self.masks = np.arange(size, dtype=np.uint64)
        self.bits = np.uint64(1) << np.arange(n, dtype=np.uint64)
        # sub[i, j]: mask i is a subset of mask j
        self.sub = (self.masks[:, None] & ~self.masks[None, :]) == _U0
        self.xor = self.masks[:, None] ^ self.masks[None, :]
        self.union_idx = (self.masks[:, None] | self.masks[None, :]).astype(np.int64)
        self.inter = self.masks[:, None] & self.masks[None, :]
        # with_bit_idx[m, x]: index of mask m | {x}
        self.with_bit_idx = (self.masks[:, None] | self.bits[None, :]).astype(np.int64)
        # per-bit index pairs for subset-lattice sweeps
        self.bit_hi = []
        self.bit_lo = []
        for x in range(n):
            hi = np.nonzero((self.masks >> np.uint64(x)) & np.uint64(1))[0]
            self.bit_hi.append(hi)
            self.bit_lo.append(hi ^ (1 << x))


_grid_cache: dict[int, SizeGrids] = {}


def size_grids(n: int) -> SizeGrids:
    if n not in _grid_cache:
        _grid_cache[n] = SizeGrids(n)
    return _grid_cache[n]


def rows_array(space: Space) -> np.ndarray:
    return np.array(space.rows, dtype=np.uint64)


class SpaceTables:
    def __init__(self, space: Space):
        if space.n > TABLES_MAX_N:
            raise CapacityError(f"operator tables are capped at {TABLES_MAX_N} points")
        self.space = space
        self.n = space.n
        self.grids = size_grids(space.n)
        self.rows = rows_array(space)
        self.rev = k.reverse_rows(self.rows)
        self.sym = self.rows | self.rev
        self.tc = k.transitive_closure(self.rows)

    @cached_property
    def tcr(self) -> np.ndarray:
        # closure rows of the reciprocal modification: weak components
        return k.transitive_closure(self.sym)

    @cached_property
    def adh(self) -> np.ndarray:
        return k.or_table(self.rows)

    @cached_property
    def adh_star(self) -> np.ndarray:
        return k.or_table(self.rev)

    @cached_property
    def cl(self) -> np.ndarray:
        return k.or_table(self.tc)

    @cached_property
    def radh(self) -> np.ndarray:
        return k.or_table(self.sym)

    @cached_property
    def rcl(self) -> np.ndarray:
        return k.or_table(self.tcr)

    @cached_property
    def conn(self) -> np.ndarray:
        return k.conn_table(self.sym)

    @cached_property
    def tconn(self) -> np.ndarray:
        tsym = self.tc | k.reverse_rows(self.tc)
        return k.conn_table(tsym)

    @cached_property
    def trconn(self) -> np.ndarray:
        # tcr is symmetric already (reachability in an undirected graph)
        return k.conn_table(self.tcr)

    @cached_property
    def tsub(self) -> np.ndarray:
        return k.tsub_table(self.rows, self.tc)

    @cached_property
    def pathchar(self) -> np.ndarray:
        return k.pathchar_table(self.rows, self.tc)

    @cached_property
    def r_commute(self) -> np.ndarray:
        return k.r_commute_table(self.rows)

    @cached_property
    def conn_clopen(self) -> np.ndarray:
        """Connectivity by the clopen definition, independent of the flood fill.

        A subset C of A is clopen in the subspace on A iff no arrow
        crosses between C and A minus C in either direction, i.e. the
        reciprocal adherence of C avoids A xor C.
        """
        g = self.grids
        crossing_free = (self.radh[:, None] & g.xor) == _U0
        proper = (g.masks[:, None] != _U0) & (g.masks[:, None] != g.masks[None, :])
        split = g.sub & proper & crossing_free
        return ~split.any(axis=0)

    @cached_property
    def enclosure_by_definition(self) -> np.ndarray:
        """e(A) evaluated as the set of x keeping A union {x} connected."""
        g = self.grids
        grown = self.conn[g.with_bit_idx]
        table = g.masks.copy()
        for x in range(self.n):
            table |= np.where(grown[:, x], g.bits[x], _U0)
        return table

    @cached_property
    def sandwiched(self) -> np.ndarray:
        g = self.grids
        covers = (g.masks[None, :] & ~self.cl[:, None]) == _U0
        witnessed = self.conn[:, None] & g.sub & covers
        return witnessed.any(axis=0)

    @cached_property
    def r_sandwiched(self) -> np.ndarray:
        g = self.grids
        covers = (g.masks[None, :] & ~self.rcl[:, None]) == _U0
        witnessed = self.conn[:, None] & g.sub & covers
        return witnessed.any(axis=0)
