"""Line-oriented space files and DOT export.

The format is three directives, one per line, diff-friendly and
trivially parseable:

    space <name>
    points <label> <label> ...
    arrow <src> <dst>

``#`` starts a comment line, blank lines are ignored, loops are
implicit and never written.  Explicit self-loops parse but are dropped
with a warning; duplicate arrows are rejected.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .errors import ParseError
from .space import LABEL_RE, Space, make_space

NAME_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_-]*\Z")


class SelfLoopWarning(UserWarning):
    """An explicit self-loop appeared in a space file; loops are implicit."""


@dataclass(frozen=True)
class SpaceDocument:
    name: str
    points: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]

    def to_space(self) -> Space:
        return make_space(self.points, self.arrows)


def document_for(space: Space, name: str) -> SpaceDocument:
    """Row-major arrow order, loops omitted; the canonical document of a space."""
    return SpaceDocument(name, space.labels, tuple(space.arrows()))


def parse_space(text: str) -> SpaceDocument:
    name: str | None = None
    points: tuple[str, ...] | None = None
    seen_points: set[str] = set()
    arrows: list[tuple[str, str]] = []
    arrow_set: set[tuple[str, str]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        directive = fields[0]
        if directive == "space":
            if name is not None:
                raise ParseError("duplicate space line", lineno)
            if len(fields) != 2 or not NAME_RE.match(fields[1]):
                raise ParseError("expected: space <name>", lineno)
            name = fields[1]
        elif directive == "points":
            if name is None:
                raise ParseError("points line before space line", lineno)
            if points is not None:
                raise ParseError("duplicate points line", lineno)
            for label in fields[1:]:
                if not LABEL_RE.match(label):
                    raise ParseError(f"bad label {label!r}", lineno)
                if label in seen_points:
                    raise ParseError(f"duplicate point {label!r}", lineno)
                seen_points.add(label)
            points = tuple(fields[1:])
        elif directive == "arrow":
            if points is None:
                raise ParseError("arrow line before points line", lineno)
            if len(fields) != 3:
                raise ParseError("expected: arrow <src> <dst>", lineno)
            src, dst = fields[1], fields[2]
            for label in (src, dst):
                if label not in seen_points:
                    raise ParseError(f"unknown label {label!r}", lineno)
            if src == dst:
                warnings.warn(
                    f"line {lineno}: self-loop at {src!r} ignored; loops are implicit",
                    SelfLoopWarning,
                    stacklevel=2,
                )
                continue
            if (src, dst) in arrow_set:
                raise ParseError(f"duplicate arrow {src} {dst}", lineno)
            arrow_set.add((src, dst))
            arrows.append((src, dst))
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)

    if name is None:
        raise ParseError("missing space line", 1)
    if points is None:
        raise ParseError("missing points line", 1)
    return SpaceDocument(name, points, tuple(arrows))


def render_space(doc: SpaceDocument) -> str:
    lines = [f"space {doc.name}", ("points " + " ".join(doc.points)).rstrip()]
    lines.extend(f"arrow {src} {dst}" for src, dst in doc.arrows)
    return "\n".join(lines) + "\n"


def render_dot(space: Space, name: str = "space") -> str:
    """Standard DOT text: nodes in label order, non-loop edges row-major."""
    lines = [f'digraph "{name}" {{']
    lines.extend(f'  "{label}";' for label in space.labels)
    lines.extend(f'  "{src}" -> "{dst}";' for src, dst in space.arrows())
    lines.append("}")
    return "\n".join(lines) + "\n"
