"""Deterministic point-set generators: jittered grids, discs and convex polygons."""
from __future__ import annotations

import math
import random

from .errors import CoarsenessError
from .geometry import COORD_LIMIT, Point, collinear_witness, convex_hull, in_general_position

SHAPES = ("grid", "random-disc", "convex-gon")
RETRIES = 100


class GenerationError(CoarsenessError):
    """No general-position instance was found within the retry budget."""


def _grid(n: int, span: int, rng: random.Random):
    side = math.isqrt(n - 1) + 1
    jitter = max(1, span // 8)

    def draw(i: int) -> Point:
        cx, cy = i % side, i // side
        return Point(cx * span + rng.randint(-jitter, jitter), cy * span + rng.randint(-jitter, jitter))
    return draw


def _disc(n: int, span: int, rng: random.Random):
    if n > math.pi * span * span / 2:
        raise GenerationError(f"disc of radius {span} is too small for {n} points")

    def draw(i: int) -> Point:
        while True:
            x, y = rng.randint(-span, span), rng.randint(-span, span)
            if x * x + y * y <= span * span:
                return Point(x, y)
    return draw


def _gon(n: int, radius: int, rng: random.Random) -> list[Point]:
    offsets = [rng.random() * 0.5 for _ in range(n)]
    return [Point(round(radius * math.cos(2 * math.pi * (i + o) / n)),
                  round(radius * math.sin(2 * math.pi * (i + o) / n)))
            for i, o in enumerate(offsets)]


def in_convex_position(points) -> bool:
    return len(convex_hull(points).vertices) == len(points)


def generate_points(shape: str, n: int, seed: int = 0, span: int | None = None) -> list[Point]:
    """``n`` points in general position drawn from ``shape``.

    ``span`` is the grid spacing, disc radius or polygon radius.  Points of
    collinear triples are redrawn from the same seeded stream; the polygon
    radius doubles after each failure so rounding cannot spoil convexity.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if shape not in SHAPES:
        raise ValueError(f"shape must be one of {SHAPES}")
    rng = random.Random(seed)
    if shape == "convex-gon":
        radius = max(span or 1000, n * n)
        for _ in range(RETRIES):
            pts = _gon(n, radius, rng)
            if radius > COORD_LIMIT:
                break
            if len(set(pts)) == n and in_convex_position(pts) and in_general_position(pts):
                return pts
            radius *= 2
        raise GenerationError(f"no convex-position instance of {n} points within the coordinate range")
    span = span or (1000 if shape == "grid" else 100_000)
    draw = (_grid if shape == "grid" else _disc)(n, span, rng)
    pts = [draw(i) for i in range(n)]
    if max(max(abs(p.x), abs(p.y)) for p in pts) > COORD_LIMIT:
        raise GenerationError("coordinates exceed the supported range; lower the span")
    # redraw the last point of each collinear triple until none is left
    for _ in range(RETRIES):
        bad = collinear_witness(pts)
        if bad is None:
            return pts
        k = max(bad)
        pts[k] = draw(k)
    raise GenerationError(f"no general-position {shape} instance after {RETRIES} repairs")
