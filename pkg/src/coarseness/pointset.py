from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GeneralPositionError
from .geometry import Point, check_coordinates, in_general_position

RED = 1
BLUE = -1

_LETTER = {RED: "R", BLUE: "B"}
_VALUE = {"R": RED, "B": BLUE}


def color_letter(c: int) -> str:
    return _LETTER[c]


def parse_color(letter: str) -> int:
    return _VALUE[letter.upper()]


@dataclass(frozen=True)
class ColoredPointSet:
    """Points in general position, each colored RED (+1) or BLUE (-1).

    Subsets are passed around either as sorted index tuples or as integer
    bitmasks (bit ``i`` set when point ``i`` is a member).
    """

    points: tuple[Point, ...]
    colors: tuple[int, ...]
    _check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple(Point(int(p[0]), int(p[1])) for p in self.points)
        cols = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "colors", cols)
        if len(pts) != len(cols):
            raise ValueError(f"{len(pts)} points but {len(cols)} colors")
        if any(c not in (RED, BLUE) for c in cols):
            raise ValueError("colors must be +1 (red) or -1 (blue)")
        if self._check:
            check_coordinates(pts)
            if not in_general_position(pts):
                raise GeneralPositionError("points are not in general position")

    @classmethod
    def from_lists(cls, points: Iterable, colors: Iterable) -> "ColoredPointSet":
        return cls(tuple(points), tuple(colors))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def r(self) -> int:
        return sum(1 for c in self.colors if c == RED)

    @property
    def b(self) -> int:
        return self.n - self.r

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def signed_sum(self, members) -> int:
        cols = self.colors
        if isinstance(members, int):
            return sum(cols[i] for i in iter_bits(members))
        return sum(cols[i] for i in members)

    def recolored(self, colors: Sequence[int]) -> "ColoredPointSet":
        return ColoredPointSet(self.points, tuple(colors), _check=False)


def iter_bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))
