import statistics

import pytest

from coarseness.coloring import (
    ColoringSearchConfig,
    balanced_coloring,
    minimize_coarseness_coloring,
    random_coloring,
)
from coarseness.discrepancy import max_disc_halfplane, max_disc_wedge
from coarseness.errors import BudgetExceeded, GeneralPositionError
from coarseness.generate import generate_points
from coarseness.partitions import exact_coarseness
from coarseness.pointset import ColoredPointSet

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_random_coloring_is_reproducible():
    pts = generate_points("random-disc", 100, seed=4)
    a = random_coloring(pts, 11)
    assert a == random_coloring(pts, 11)
    assert a.r + a.b == 100
    assert len({random_coloring(pts, s).colors for s in range(10)}) == 10


def test_balanced_counts():
    assert balanced_coloring(SQUARE, 3).r == 2
    five = balanced_coloring(generate_points("grid", 5, 1), 3)
    assert abs(five.r - five.b) == 1
    assert balanced_coloring(SQUARE, 9) == balanced_coloring(SQUARE, 9)
    odd = generate_points("grid", 7, 2)
    assert {balanced_coloring(odd, s).r for s in range(40)} == {3, 4}


def test_collinear_points_are_rejected():
    with pytest.raises(GeneralPositionError):
        random_coloring([(0, 0), (1, 1), (2, 2)], 0)


def test_config_validation():
    with pytest.raises(ValueError):
        ColoringSearchConfig(restarts=0)
    with pytest.raises(ValueError):
        ColoringSearchConfig(max_flips=-1)
    with pytest.raises(ValueError):
        ColoringSearchConfig(objective="D3")


def test_two_points_reach_the_minimum():
    ps, upper = minimize_coarseness_coloring([(0, 0), (3, 1)], ColoringSearchConfig(objective="D1"))
    assert max_disc_halfplane(ps).value == 1
    assert upper == 16 * max_disc_wedge(ps).value


def test_square_reaches_the_best_coloring():
    best = min(max_disc_wedge(ColoredPointSet(tuple(SQUARE), tuple(1 if (b >> i) & 1 else -1
                                                                  for i in range(4)))).value
               for b in range(16))
    assert best == 2
    for objective in ("D1", "D2"):
        ps, upper = minimize_coarseness_coloring(SQUARE, ColoringSearchConfig(seed=5, objective=objective))
        assert max_disc_wedge(ps).value == best and upper == 32


def test_search_is_deterministic_across_workers():
    pts = generate_points("grid", 16, 3)
    cfg = ColoringSearchConfig(seed=7, restarts=4, objective="D2")
    one = minimize_coarseness_coloring(pts, cfg)
    many = minimize_coarseness_coloring(pts, ColoringSearchConfig(seed=7, restarts=4, objective="D2", workers=4))
    assert one == many == minimize_coarseness_coloring(pts, cfg)


def test_certified_upper_bounds_exact_coarseness():
    for seed in range(6):
        pts = generate_points(("grid", "random-disc", "convex-gon")[seed % 3], 8, seed)
        ps, upper = minimize_coarseness_coloring(pts, ColoringSearchConfig(seed=seed, restarts=2))
        assert exact_coarseness(ps).value <= upper


def test_zero_flips_returns_a_balanced_start():
    pts = generate_points("grid", 9, 1)
    ps, _ = minimize_coarseness_coloring(pts, ColoringSearchConfig(seed=2, max_flips=0, objective="D1"))
    assert abs(ps.r - ps.b) == 1


def test_d2_objective_budget():
    pts = generate_points("grid", 128, 1)
    with pytest.raises(BudgetExceeded):
        minimize_coarseness_coloring(pts, ColoringSearchConfig(objective="D2"))


def test_grid_search_beats_balanced_median():
    pts = generate_points("grid", 64, 1)
    ps, _ = minimize_coarseness_coloring(pts, ColoringSearchConfig(seed=1, restarts=20, objective="D1"))
    baseline = statistics.median(max_disc_halfplane(balanced_coloring(pts, s)).value for s in range(20))
    assert max_disc_halfplane(ps).value <= baseline
