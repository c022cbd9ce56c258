import pytest

from coarseness.generate import GenerationError, generate_points, in_convex_position
from coarseness.geometry import COORD_LIMIT, in_general_position


@pytest.mark.parametrize("shape", ["grid", "random-disc", "convex-gon"])
@pytest.mark.parametrize("n", [1, 2, 3, 10, 100])
def test_shapes_are_in_general_position(shape, n):
    pts = generate_points(shape, n, seed=n)
    assert len(pts) == n and in_general_position(pts)
    assert all(abs(p.x) <= COORD_LIMIT and abs(p.y) <= COORD_LIMIT for p in pts)


def test_convex_gon_is_convex():
    pts = generate_points("convex-gon", 6, seed=0)
    assert in_convex_position(pts) and in_general_position(pts)
    assert in_convex_position(generate_points("convex-gon", 200, seed=3))


def test_generation_is_deterministic():
    assert generate_points("grid", 16, seed=7) == generate_points("grid", 16, seed=7)
    assert generate_points("grid", 16, seed=7) != generate_points("grid", 16, seed=8)


def test_large_grid_is_repaired():
    pts = generate_points("grid", 1024, seed=1)
    assert in_general_position(pts)


def test_bad_arguments():
    with pytest.raises(ValueError):
        generate_points("spiral", 5)
    with pytest.raises(ValueError):
        generate_points("grid", 0)
    with pytest.raises(GenerationError):
        generate_points("random-disc", 50, span=3)
    with pytest.raises(GenerationError):
        generate_points("convex-gon", 2000)
