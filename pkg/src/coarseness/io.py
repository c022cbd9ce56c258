"""Text instance files, partition block files and JSON report records.

An instance file has one point per line, ``x y C`` with integer
coordinates and ``C`` one of ``R``/``B``.  Lines starting with ``#`` are
comments; blank lines are ignored.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .errors import GeneralPositionError, ParseError
from .geometry import COORD_LIMIT, collinear_witness
from .pointset import ColoredPointSet, color_letter


@dataclass(frozen=True)
class InstanceFile:
    pointset: ColoredPointSet
    comments: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "InstanceFile":
        points, colors, comments = [], [], []
        lines = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                comments.append(line[1:].strip())
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"expected 'x y R|B', got {line!r}", line=lineno)
            try:
                x, y = int(parts[0], 10), int(parts[1], 10)
            except ValueError:
                raise ParseError(f"coordinates must be decimal integers: {line!r}", line=lineno) from None
            if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
                raise ParseError(f"coordinate out of range +-{COORD_LIMIT}", line=lineno)
            c = parts[2].upper()
            if c not in ("R", "B"):
                raise ParseError(f"color must be R or B, got {parts[2]!r}", line=lineno)
            lines[len(points)] = lineno
            points.append((x, y))
            colors.append(1 if c == "R" else -1)
        bad = collinear_witness(points)
        if bad is not None:
            i, j, k = bad
            where = ", ".join(f"line {lines[t]}" for t in sorted({i, j, k}))
            what = "duplicate points" if j == k else "three collinear points"
            raise GeneralPositionError(f"{what} at {where}")
        ps = ColoredPointSet(tuple(points), tuple(colors), _check=False)
        return cls(ps, tuple(comments))

    def emit(self) -> str:
        out = [f"# {c}".rstrip() for c in self.comments]
        for p, c in zip(self.pointset.points, self.pointset.colors):
            out.append(f"{p.x} {p.y} {color_letter(c)}")
        return "\n".join(out) + "\n"


def read_instance(text: str) -> ColoredPointSet:
    return InstanceFile.parse(text).pointset


def format_instance(ps: ColoredPointSet, comments=()) -> str:
    return InstanceFile(ps, tuple(comments)).emit()


def parse_blocks(text: str) -> list[list[int]]:
    """Blocks as JSON (a list of index lists, or a report with a witness) or
    as text with one whitespace-separated block per line."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
        if isinstance(data, dict):
            data = data.get("witness")
        if not isinstance(data, list) or not all(
                isinstance(b, list) and all(isinstance(i, int) for i in b) for b in data):
            raise ParseError("expected a list of index lists")
        return data
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            blocks.append([int(t) for t in line.replace(",", " ").split()])
        except ValueError:
            raise ParseError(f"block indices must be integers: {line!r}", line=lineno) from None
    return blocks


@dataclass
class ReportRecord:
    """Result document written by every command.

    ``lower`` is an exact fraction serialized as ``{"num": .., "den": ..}``;
    ``witness`` is a list of index lists into the input file order.
    Command-specific values go into ``details``.
    """

    command: str
    n: int
    r: int
    b: int
    disc: int
    d1: int | None = None
    d2: int | None = None
    lower: Fraction | None = None
    upper: int | None = None
    witness: list[list[int]] | None = None
    elapsed_ms: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if self.lower is not None:
            d["lower"] = {"num": self.lower.numerator, "den": self.lower.denominator}
        if not timing:
            d.pop("elapsed_ms")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportRecord":
        d = json.loads(text)
        if d.get("lower") is not None:
            d["lower"] = Fraction(d["lower"]["num"], d["lower"]["den"])
        return cls(**d)
