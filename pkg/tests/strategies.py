from hypothesis import strategies as st

from coarseness.geometry import in_general_position
from coarseness.pointset import ColoredPointSet

coordinates = st.integers(min_value=-40, max_value=40)
points = st.tuples(coordinates, coordinates)


def point_lists(min_size=1, max_size=8):
    return st.lists(points, min_size=min_size, max_size=max_size, unique=True).filter(in_general_position)


@st.composite
def colored_sets(draw, min_size=1, max_size=8):
    pts = draw(point_lists(min_size, max_size))
    colors = draw(st.lists(st.sampled_from((1, -1)), min_size=len(pts), max_size=len(pts)))
    return ColoredPointSet(tuple(pts), tuple(colors))
