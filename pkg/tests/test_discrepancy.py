import pytest
from hypothesis import given, settings

from coarseness.discrepancy import (
    d2_key,
    disc,
    max_disc_halfplane,
    max_disc_k,
    max_disc_wedge,
    sample_islands,
    shatter_classes,
)
from coarseness.errors import BudgetExceeded
from coarseness.islands import Island, enumerate_islands, island_from_halfplanes
from coarseness.pointset import ColoredPointSet
from conftest import hexagon
from oracles import intersection_closure, max_disc, separable_subsets
from strategies import colored_sets


def test_disc_examples(sq4):
    assert disc(sq4, []) == 0
    assert disc(sq4, range(4)) == 0
    assert disc(ColoredPointSet(((0, 0), (3, 1), (1, 4)), (1, 1, 1)), [0, 1, 2]) == 3


def test_d1_examples(sq4, red_triangle):
    res = max_disc_halfplane(red_triangle)
    assert res.value == 3 and res.witness.members == (0, 1, 2)
    assert max_disc_halfplane(ColoredPointSet(((0, 0), (1, 0)), (1, -1))).value == 1
    assert max_disc_halfplane(sq4).value == 1


def test_d2_examples(sq4, red_triangle):
    res = max_disc_wedge(sq4)
    assert res.value == 2
    assert res.witness.members in ((0, 3), (1, 2))
    assert max_disc_wedge(red_triangle).value == 3
    assert max_disc_wedge(hexagon()).value == 2


def test_dk_examples(sq4):
    assert max_disc_k(sq4, 1).value == max_disc_halfplane(sq4).value
    assert max_disc_k(sq4, 3).value == 2
    five = ColoredPointSet(((0, 0), (10, 1), (3, 9), (-4, 6), (5, 4)), (-1,) * 5)
    for k in range(1, 6):
        assert max_disc_k(five, k).value == 5
    with pytest.raises(BudgetExceeded):
        max_disc_k(five, 4, budget=100)


@given(colored_sets(1, 9))
@settings(max_examples=150, deadline=None)
def test_sweeps_match_exhaustive_maximization(ps):
    fam = separable_subsets(ps.points)
    d1 = max_disc_halfplane(ps)
    d2 = max_disc_wedge(ps)
    assert d1.value == max_disc(ps.colors, fam)
    assert d2.value == max_disc(ps.colors, intersection_closure(fam, 2))
    for res, k in ((d1, 1), (d2, 2)):
        assert len(res.witness.certificate) <= k
        again = island_from_halfplanes(ps, res.witness.certificate)
        assert again.members == res.witness.members
        assert disc(ps, again.members) == res.value
    assert d2_key(ps)[0] == d2.value


@given(colored_sets(1, 7))
@settings(max_examples=40, deadline=None)
def test_chain_of_maxima(ps):
    vals = [max_disc_k(ps, k).value for k in range(1, 6)]
    assert vals == sorted(vals) and vals[-1] <= ps.n
    assert vals[0] >= disc(ps, range(ps.n))
    assert vals[0] == max_disc_halfplane(ps).value
    assert vals[1] == max_disc_wedge(ps).value
    assert vals[2] <= 4 * vals[1] and vals[3] <= 2 * vals[2] and vals[4] <= 2 * vals[3]


def test_dk_witness_is_smallest_maximizer(sq4):
    res = max_disc_k(sq4, 2)
    best = [i.members for i in enumerate_islands(sq4, 2) if disc(sq4, i.mask) == 2]
    assert res.witness.members == min(best)


def test_shatter_examples(sq4):
    strip = Island((0, 3))
    assert shatter_classes(sq4, [strip], 2).classes == 2
    corner = Island((0,))
    assert shatter_classes(sq4, [strip, corner], 2).classes == 3
    assert shatter_classes(sq4, [Island((0, 1, 2, 3))], 1).classes == 1
    with pytest.raises(ValueError):
        shatter_classes(sq4, [])


@given(colored_sets(2, 8))
@settings(max_examples=40, deadline=None)
def test_shatter_count_limits(ps):
    fam = sample_islands(ps, 2, 5, seed=1)
    sc = shatter_classes(ps, fam, 2)
    assert 1 <= sc.classes <= min(ps.n, 2 ** sc.m)
    assert sample_islands(ps, 2, 5, seed=1) == fam
