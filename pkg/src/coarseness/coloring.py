"""Random and balanced colorings, and a local search for low-coarseness colorings."""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from .discrepancy import d2_key, max_disc_wedge
from .errors import BudgetExceeded
from .islands import DEFAULT_BUDGET
from .pointset import BLUE, RED, ColoredPointSet

OBJECTIVES = ("D1", "D2")


@dataclass(frozen=True)
class ColoringSearchConfig:
    """Knobs for :func:`minimize_coarseness_coloring`.

    ``workers`` only changes how restarts are scheduled, never the result.
    """

    seed: int = 0
    restarts: int = 1
    max_flips: int = 10_000
    objective: str = "D2"
    workers: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.max_flips < 0:
            raise ValueError("max_flips must be nonnegative")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


def _points(points) -> tuple:
    if isinstance(points, ColoredPointSet):
        return points.points
    return tuple(points)


def random_coloring(points, seed) -> ColoredPointSet:
    """Independent fair coin per point."""
    pts = _points(points)
    rng = random.Random(seed)
    return ColoredPointSet(pts, tuple(RED if rng.random() < 0.5 else BLUE for _ in pts))


def balanced_coloring(points, seed) -> ColoredPointSet:
    """Uniform among colorings with ``|r - b| <= 1``."""
    pts = _points(points)
    n = len(pts)
    rng = random.Random(seed)
    r = n // 2 + (rng.randrange(2) if n % 2 else 0)
    reds = set(rng.sample(range(n), r))
    return ColoredPointSet(pts, tuple(RED if i in reds else BLUE for i in range(n)))


def _descend_d2(ps: ColoredPointSet, max_flips: int):
    """First-improvement single flips on the key ``(D2, maximizing slots)``."""
    colors = list(ps.colors)
    n = len(colors)
    key = d2_key(ps)
    flips = idle = i = 0
    while n and flips < max_flips and idle < n:
        colors[i] = -colors[i]
        cand = d2_key(ps.recolored(colors))
        if cand < key:
            key = cand
            flips += 1
            idle = 0
        else:
            colors[i] = -colors[i]
            idle += 1
        i = (i + 1) % n
    return ps.recolored(colors), key


def _descend_d1(ps: ColoredPointSet, max_flips: int):
    xs = [p.x for p in ps.points]
    ys = [p.y for p in ps.points]
    colors, _, best, count = kernels.local_search_d1(xs, ys, list(ps.colors), max_flips)
    return ps.recolored(colors), (best, count)


def restart_seed(seed, restart: int) -> str:
    return f"{seed}:{restart}"


def minimize_coarseness_coloring(points, config: ColoringSearchConfig = ColoringSearchConfig()):
    """Local search for a coloring with small ``D1`` or ``D2``.

    Each restart starts from a balanced coloring and flips single colors
    while the objective key strictly drops.  The best restart (ties to the
    lowest restart index) is returned with ``certified_upper = 16 * D2``,
    a valid upper bound on its coarseness.
    """
    pts = _points(points)
    n = len(pts)
    if config.objective == "D2" and n ** 4 > config.budget:
        raise BudgetExceeded(
            f"D2 local search on {n} points needs ~{n ** 4} steps per pass",
            estimate=n ** 4, budget=config.budget)
    descend = _descend_d2 if config.objective == "D2" else _descend_d1

    def run(r: int):
        start = balanced_coloring(pts, restart_seed(config.seed, r))
        return descend(start, config.max_flips)

    restarts = range(config.restarts)
    if config.workers > 1 and config.restarts > 1:
        with ThreadPoolExecutor(config.workers) as pool:
            results = list(pool.map(run, restarts))
    else:
        results = [run(r) for r in restarts]
    best_r = min(restarts, key=lambda r: (results[r][1], r))
    best = results[best_r][0]
    return best, 16 * max_disc_wedge(best).value

