"""Deterministic instance generators.

Randomness comes from a counter-based SplitMix64 stream so that
sampled campaigns replay bit-for-bit on any platform: the value at
counter ``i`` is a pure function of (seed, i), with the constants
spelled out below.  Arrow decisions use exact rational threshold
comparisons, never floating point.
"""

from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction

from .._bitops import bit
from ..errors import CapacityError, SpaceError
from ..pointset import CAPACITY
from ..space import Space

ENUMERATION_MAX_N = 5

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def splitmix64(seed: int, index: int) -> int:
    """The SplitMix64 output at position ``index`` of the stream for ``seed``."""
    z = (seed + (index + 1) * _GAMMA) & _MASK64
    z = (z ^ (z >> 30)) * _MIX1 & _MASK64
    z = (z ^ (z >> 27)) * _MIX2 & _MASK64
    return z ^ (z >> 31)


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def point_labels(n: int) -> tuple[str, ...]:
    """Single letters up to 26 points, zero-padded p-numbers beyond."""
    if n <= len(_LETTERS):
        return tuple(_LETTERS[:n])
    return tuple(f"p{i:02d}" for i in range(n))


def offdiagonal_cells(n: int) -> list[tuple[int, int]]:
    """Row-major order of the possible non-loop arrows; fixes bit meanings."""
    return [(x, y) for x in range(n) for y in range(n) if x != y]


def _space_from_cells(n: int, labels, cells, chosen) -> Space:
    rows = [bit(x) for x in range(n)]
    for i, (x, y) in enumerate(cells):
        if chosen(i):
            rows[x] |= bit(y)
    return Space(labels, tuple(rows))


def enumerate_spaces(n: int) -> Iterator[Space]:
    """Every reflexive digraph on n labeled points, exactly once.

    The arrow set is read off a binary counter over the off-diagonal
    cells, so the order is canonical: counter value k yields the space
    whose cell i carries an arrow iff bit i of k is set.
    """
    if n < 0 or n > ENUMERATION_MAX_N:
        raise CapacityError(f"exhaustive enumeration is capped at {ENUMERATION_MAX_N} points")
    labels = point_labels(n)
    cells = offdiagonal_cells(n)
    for counter in range(1 << len(cells)):
        yield _space_from_cells(n, labels, cells, lambda i: counter >> i & 1)


def random_space(n: int, edge_probability, seed: int) -> Space:
    """One seeded random space: each off-diagonal arrow appears independently.

    ``edge_probability`` is taken as an exact rational (strings like
    "1/4" work); the arrow at cell i is present iff
    ``splitmix64(seed, i) / 2**64 < edge_probability``, decided in
    integer arithmetic.
    """
    if n < 0 or n > CAPACITY:
        raise CapacityError(f"random spaces are capped at {CAPACITY} points")
    p = Fraction(edge_probability)
    if not 0 <= p <= 1:
        raise SpaceError(f"edge probability {p} is outside [0, 1]")
    threshold = p.numerator << 64
    den = p.denominator
    cells = offdiagonal_cells(n)
    return _space_from_cells(
        n,
        point_labels(n),
        cells,
        lambda i: splitmix64(seed, i) * den < threshold,
    )


def sample_stream(
    sizes: tuple[int, ...], count: int, edge_probability, seed: int
) -> Iterator[Space]:
    """The campaign sample stream: sizes round-robin, per-space derived seeds."""
    if count and not sizes:
        raise SpaceError("sampling needs at least one size")
    for i in range(count):
        yield random_space(
            sizes[i % len(sizes)], edge_probability, splitmix64(seed, i)
        )
