import math

from coarseness.experiment import (
    loglog_slope,
    median_series,
    rows_to_csv,
    run_row,
    run_scaling_experiment,
    summarize,
)


def test_one_size_one_seed_gives_three_rows():
    rows = run_scaling_experiment([64], [1])
    assert [r.kind for r in rows] == ["balanced", "optimized", "random"]
    assert all(r.status == "ok" and r.certified_upper == 16 * r.d2 for r in rows)
    assert all(r.control_d1 == 64 for r in rows)
    assert all(r.d1 <= r.d2 for r in rows)


def test_rows_are_sorted_and_parallel_safe():
    a = run_scaling_experiment([20, 12], [2, 1], workers=1)
    b = run_scaling_experiment([12, 20], [1, 2], workers=3)
    key = [(r.n, r.seed, r.kind) for r in a]
    assert key == sorted(key)
    assert rows_to_csv(a, timing=False) == rows_to_csv(b, timing=False)


def test_budget_rows_are_kept():
    row = run_row(64, 1, "random", budget=10)
    assert row.status == "budget-exceeded" and row.d2 is None
    assert rows_to_csv([row]).splitlines()[1].startswith("64,1,random,,,,64,")


def test_slopes():
    pts = [(n, 3 * n ** 0.25) for n in (64, 128, 256, 512)]
    assert math.isclose(loglog_slope(pts), 0.25)
    assert loglog_slope(pts[:1]) is None
    rows = run_scaling_experiment([16, 32], [1, 2])
    series = median_series(rows)
    assert set(series) == {"balanced", "optimized", "random"}
    s = summarize(rows)
    assert set(s["slopes"]) == set(series)
