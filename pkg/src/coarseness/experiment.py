"""Scaling experiment: D1/D2 of random, balanced and optimized colorings on grids."""
from __future__ import annotations

import csv
import io
import math
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass, fields

from . import kernels
from .coloring import ColoringSearchConfig, balanced_coloring, minimize_coarseness_coloring, random_coloring
from .discrepancy import max_disc_halfplane, max_disc_wedge
from .errors import BudgetExceeded
from .generate import generate_points
from .pointset import ColoredPointSet

KINDS = ("balanced", "optimized", "random")
# elementary steps of one D2 evaluation are about n^3 log2 n
DEFAULT_BUDGET = 2 * 10**10


@dataclass(frozen=True)
class ScalingRow:
    n: int
    seed: int
    kind: str
    d1: int | None
    d2: int | None
    certified_upper: int | None
    control_d1: int
    elapsed_ms: float
    status: str


def _d2_cost(n: int) -> int:
    return n ** 3 * max(1, math.ceil(math.log2(max(n, 2))))


def _control_d1(points) -> int:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return kernels.halfplane_scan(xs, ys, [1] * len(points))[0]


def _coloring(kind: str, points, seed: int, config: ColoringSearchConfig) -> ColoredPointSet:
    if kind == "random":
        return random_coloring(points, seed)
    if kind == "balanced":
        return balanced_coloring(points, seed)
    return minimize_coarseness_coloring(points, config)[0]


def run_row(n: int, seed: int, kind: str, *, shape: str = "grid", objective: str = "D1",
            restarts: int = 1, max_flips: int = 100_000, budget: int = DEFAULT_BUDGET) -> ScalingRow:
    t0 = time.perf_counter()
    points = generate_points(shape, n, seed)
    control = _control_d1(points)
    config = ColoringSearchConfig(seed=seed, restarts=restarts, max_flips=max_flips, objective=objective)
    d1 = d2 = upper = None
    status = "ok"
    try:
        if _d2_cost(n) > budget:
            raise BudgetExceeded(f"D2 at n={n} exceeds the budget", estimate=_d2_cost(n), budget=budget)
        ps = _coloring(kind, points, seed, config)
        d1 = max_disc_halfplane(ps).value
        d2 = max_disc_wedge(ps).value
        upper = 16 * d2
    except BudgetExceeded:
        status = "budget-exceeded"
    elapsed = round((time.perf_counter() - t0) * 1000, 1)
    return ScalingRow(n, seed, kind, d1, d2, upper, control, elapsed, status)


def run_scaling_experiment(sizes, seeds, objective: str = "D1", *, kinds=KINDS, shape: str = "grid",
                           restarts: int = 1, max_flips: int = 100_000, budget: int = DEFAULT_BUDGET,
                           workers: int = 1, progress=None) -> list[ScalingRow]:
    """One row per (size, seed, kind), sorted by ``(n, seed, kind)``.

    Rows that would exceed ``budget`` are kept with status
    ``budget-exceeded`` and empty values.
    """
    jobs = sorted((n, s, k) for n in sizes for s in seeds for k in kinds)

    def job(args):
        n, s, k = args
        row = run_row(n, s, k, shape=shape, objective=objective, restarts=restarts,
                      max_flips=max_flips, budget=budget)
        if progress:
            progress(row)
        return row

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = list(pool.map(job, jobs))
    else:
        rows = [job(j) for j in jobs]
    return sorted(rows, key=lambda r: (r.n, r.seed, r.kind))


def rows_to_csv(rows, timing: bool = True) -> str:
    names = [f.name for f in fields(ScalingRow)]
    if not timing:
        names.remove("elapsed_ms")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    for r in rows:
        d = dict(zip([f.name for f in fields(ScalingRow)], astuple(r)))
        w.writerow(["" if d[k] is None else d[k] for k in names])
    return buf.getvalue()


def median_series(rows, kinds=KINDS) -> dict[str, list[tuple[int, float]]]:
    out = {}
    for kind in kinds:
        by_n: dict[int, list[int]] = {}
        for r in rows:
            if r.kind == kind and r.d2 is not None:
                by_n.setdefault(r.n, []).append(r.d2)
        out[kind] = [(n, statistics.median(v)) for n, v in sorted(by_n.items())]
    return out


def loglog_slope(points) -> float | None:
    """Least-squares slope of ``log value`` against ``log n``."""
    pts = [(math.log(n), math.log(v)) for n, v in points if n > 0 and v > 0]
    if len(pts) < 2:
        return None
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    if sxx == 0:
        return None
    return sum((x - mx) * (y - my) for x, y in pts) / sxx


def summarize(rows) -> dict:
    """Slopes per kind and the paired optimized-vs-balanced comparison at n >= 256."""
    series = median_series(rows)
    slopes = {k: loglog_slope(v) for k, v in series.items()}
    pairs = {}
    for r in rows:
        if r.n >= 256 and r.d2 is not None and r.kind in ("optimized", "balanced"):
            pairs.setdefault((r.n, r.seed), {})[r.kind] = r.d2
    paired = [p for p in pairs.values() if len(p) == 2]
    wins = sum(1 for p in paired if p["optimized"] <= p["balanced"])
    return {
        "slopes": slopes,
        "medians": {k: [[n, v] for n, v in s] for k, s in series.items()},
        "optimized_le_balanced": [wins, len(paired)],
        "optimized_slope_below_random": (
            None if slopes.get("optimized") is None or slopes.get("random") is None
            else slopes["optimized"] < slopes["random"]),
    }
