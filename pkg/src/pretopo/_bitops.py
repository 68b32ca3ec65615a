"""Bit-vector primitives on plain Python ints.

A subset of points is a mask with bit ``x`` set for point ``x``; an
adjacency structure is a tuple of masks, row ``x`` holding the
out-neighborhood of ``x`` (loops included).  Everything here is exact
integer arithmetic, valid for any point count the masks can hold.
"""

from collections.abc import Iterable, Iterator, Sequence


def bit(x: int) -> int:
    return 1 << x


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for x in indices:
        m |= 1 << x
    return m


def iter_bits(m: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def popcount(m: int) -> int:
    return m.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def canonical_key(m: int) -> tuple[int, int]:
    """Witness-search order: smaller sets first, then mask value."""
    return (m.bit_count(), m)


def subsets_of(m: int) -> Iterator[int]:
    """All subsets of ``m`` in ascending mask order (starts at 0, ends at m)."""
    sub = 0
    while True:
        yield sub
        if sub == m:
            return
        sub = (sub - m) & m


def supersets_within(base: int, ceiling: int) -> Iterator[int]:
    """All b with ``base <= b <= ceiling``, ascending mask order."""
    extra = ceiling & ~base
    for sub in subsets_of(extra):
        yield base | sub


def reverse_rows(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """Transpose of the adjacency relation (arrow-reversed digraph)."""
    rev = [0] * n
    for x in range(n):
        row = rows[x]
        for y in iter_bits(row):
            rev[y] |= 1 << x
    return tuple(rev)


def symmetric_rows(rows: Sequence[int], n: int) -> tuple[int, ...]:
    rev = reverse_rows(rows, n)
    return tuple(rows[x] | rev[x] for x in range(n))


def transitive_closure_rows(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """Reflexive-transitive closure; rows are expected to carry loops already."""
    out = list(rows)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = out[x]
            m = acc
            while m:
                low = m & -m
                m ^= low
                acc |= out[low.bit_length() - 1]
            if acc != out[x]:
                out[x] = acc
                changed = True
    return tuple(out)


def image(rows: Sequence[int], m: int) -> int:
    """Union of rows over the members of ``m`` (adherence when rows have loops)."""
    acc = 0
    for x in iter_bits(m):
        acc |= rows[x]
    return acc


def reach_within(rows: Sequence[int], start: int, allowed: int) -> int:
    """Forward reachability from ``start`` along arrows staying inside ``allowed``."""
    cur = start & allowed
    while True:
        nxt = cur
        for x in iter_bits(cur):
            nxt |= rows[x] & allowed
        if nxt == cur:
            return cur
        cur = nxt


def weakly_connected(und_rows: Sequence[int], m: int) -> bool:
    """Connectivity of the subgraph induced on ``m`` (und_rows symmetric)."""
    if m == 0:
        return True
    return reach_within(und_rows, m & -m, m) == m
