"""Built-in example spaces used throughout tests and the CLI.

Arrow lists are exact; loops are implicit as everywhere else.
"""

from .errors import SpaceError
from .space import Space, make_space

_DEFS: dict[str, tuple[tuple[str, ...], tuple[tuple[str, str], ...]]] = {
    "sierpinski": (("0", "1"), (("0", "1"),)),
    "line3": (("a", "b", "c"), (("a", "b"), ("b", "c"))),
    "triangle": (("a", "b", "c"), (("a", "b"), ("b", "c"), ("c", "a"))),
    "square-acd": (("a", "b", "c", "d"), (("a", "b"), ("a", "d"), ("b", "c"), ("d", "c"))),
    "square-symmetric": (
        ("a", "b", "c", "d"),
        (
            ("a", "b"), ("a", "d"), ("b", "c"), ("d", "c"),
            ("b", "a"), ("d", "a"), ("c", "b"), ("c", "d"),
        ),
    ),
    "kite": (("a", "b", "c", "d"), (("a", "b"), ("c", "b"), ("d", "c"))),
    "vee": (("a", "b", "c"), (("a", "b"), ("c", "b"))),
}


def fixture_names() -> tuple[str, ...]:
    return tuple(_DEFS)


def fixture(name: str) -> Space:
    try:
        labels, arrows = _DEFS[name]
    except KeyError:
        raise SpaceError(f"unknown fixture {name!r}; known: {', '.join(_DEFS)}") from None
    return make_space(labels, arrows)
