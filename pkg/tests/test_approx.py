from fractions import Fraction

from hypothesis import given, settings

from coarseness.approx import approximate_coarseness
from coarseness.discrepancy import max_disc_wedge
from coarseness.partitions import ConvexPartition, exact_coarseness, partition_disc, validate_partition
from coarseness.pointset import ColoredPointSet
from strategies import colored_sets


def test_square(sq4):
    res = approximate_coarseness(sq4)
    assert (res.d2, res.lower, res.upper, res.witness_disc) == (2, Fraction(1, 2), 32, 1)
    assert res.lower <= exact_coarseness(sq4).value <= res.upper


def test_monochromatic_octagon():
    pts = ((0, 0), (10, 1), (17, 6), (19, 14), (13, 20), (4, 19), (-3, 13), (-4, 5))
    res = approximate_coarseness(ColoredPointSet(pts, (1,) * 8))
    # max(8/8, 8/4 - |8 - 0|) = 1
    assert (res.d2, res.lower, res.upper) == (8, 1, 128)
    assert res.witness.index_lists() == [list(range(8))] and res.witness_disc == 8


def test_two_points():
    res = approximate_coarseness(ColoredPointSet(((0, 0), (1, 0)), (1, -1)))
    assert (res.d2, res.lower, res.witness_disc) == (1, Fraction(1, 4), 1)


@given(colored_sets(1, 8))
@settings(max_examples=80, deadline=None)
def test_sandwich_and_witness(ps):
    res = approximate_coarseness(ps)
    exact = exact_coarseness(ps).value
    assert res.d2 == max_disc_wedge(ps).value
    assert res.lower <= res.witness_disc <= exact <= res.upper
    assert isinstance(validate_partition(ps, res.witness.index_lists()), ConvexPartition)
    assert res.witness_disc == partition_disc(ps, res.witness)
    # the ratio guarantee in terms of C(S)
    assert res.witness_disc >= max(Fraction(exact, 128), Fraction(exact, 64) - abs(ps.r - ps.b))
    assert approximate_coarseness(ps) == res
