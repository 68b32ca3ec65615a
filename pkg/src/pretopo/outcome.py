"""Shared result types for property checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .pointset import PointSet
from .space import Space


@dataclass(frozen=True)
class Witness:
    """Everything needed to replay a failed check through the public operators."""

    space: Space
    sets: tuple[tuple[str, PointSet], ...] = ()
    params: tuple[tuple[str, int], ...] = ()
    note: str = ""

    def set_named(self, name: str) -> PointSet:
        for key, value in self.sets:
            if key == name:
                return value
        raise KeyError(name)

    def param_named(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one property check: a pass, or a replayable counterexample."""

    check: str
    passed: bool
    witness: Witness | None = field(default=None)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failed check must carry a witness")
