import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coarseness import kernels
from coarseness.kernels import backend_module, compiled_available
from strategies import colored_sets

pytestmark = pytest.mark.skipif(not compiled_available(), reason="compiled kernels not built")


def args(ps):
    return [p.x for p in ps.points], [p.y for p in ps.points], list(ps.colors)


@given(colored_sets(1, 9))
@settings(max_examples=200, deadline=None)
def test_halfplane_scan_parity(ps):
    py, cy = backend_module("python"), backend_module("cython")
    assert py.halfplane_scan(*args(ps)) == cy.halfplane_scan(*args(ps))


@given(colored_sets(1, 9), st.booleans())
@settings(max_examples=200, deadline=None)
def test_wedge_scan_parity(ps, counts):
    py, cy = backend_module("python"), backend_module("cython")
    assert py.wedge_scan(*args(ps), counts) == cy.wedge_scan(*args(ps), counts)


@given(colored_sets(1, 9), st.integers(0, 20))
@settings(max_examples=150, deadline=None)
def test_local_search_parity(ps, max_flips):
    py, cy = backend_module("python"), backend_module("cython")
    a = py.local_search_d1(*args(ps), max_flips)
    b = cy.local_search_d1(*args(ps), max_flips)
    assert a == b
    assert a[1] <= max_flips


@given(colored_sets(2, 9))
@settings(max_examples=100, deadline=None)
def test_local_search_does_not_worsen(ps):
    start = kernels.halfplane_scan(*args(ps))[:2]
    colors, flips, best, count = kernels.local_search_d1(*args(ps), 1000)
    assert (best, count) <= start
    xs, ys, _ = args(ps)
    assert kernels.halfplane_scan(xs, ys, colors)[:2] == (best, count)


def test_unknown_backend():
    with pytest.raises(ValueError):
        backend_module("fortran")


def test_environment_forces_fallback():
    env = dict(os.environ, COARSENESS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from coarseness import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
