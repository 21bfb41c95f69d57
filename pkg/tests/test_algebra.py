import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from degen_bergman.algebra import (AlgebraError, ExclusionTubeError, RootPoly,
                                   as_complex, chain_arguments, continued_argument,
                                   continued_sqrt_factor, format_complex,
                                   parse_complex, poly_eval, poly_from_roots)

finite = st.floats(-1e3, 1e3, allow_nan=False)
cplx = st.builds(complex, finite, finite)
small = st.builds(complex, st.floats(-1, 1), st.floats(-1, 1))


def test_poly_from_roots_examples():
    assert poly_from_roots([], 1)(5.0) == 1
    assert poly_from_roots([0, 1], 1)(2) == 2
    assert poly_from_roots([2, 3, 4, 5], 1)(0) == 120


def test_poly_eval_examples():
    assert poly_eval(poly_from_roots([1]), 1) == 0
    assert poly_eval(poly_from_roots([0, 1, 2]), 3) == 6
    assert poly_eval(poly_from_roots([2, 3, 4, 5]), 0) == 120


def test_zero_leading_rejected():
    with pytest.raises(AlgebraError):
        poly_from_roots([1, 2], 0)


def test_poly_eval_vectorized():
    p = poly_from_roots([1j, -2], 3)
    xs = np.array([0, 1, 2j])
    assert np.allclose(p(xs), [p(x) for x in xs])


@given(st.lists(small, min_size=1, max_size=8), cplx,
       st.builds(complex, st.floats(0.5, 2), st.floats(-1, 1)))
def test_root_form_matches_coefficients(roots, x, lead):
    roots = [10 * r for r in roots]
    x = x / 100
    p = RootPoly(tuple(roots), lead)
    ref = np.polyval(p.coefficients(), x)
    val = p(x)
    scale = abs(lead) * np.prod([abs(x) + abs(r) for r in roots])
    assert abs(val - ref) <= 1e-12 * scale


def test_as_complex_rejects_nonfinite():
    for bad in (float("nan"), complex(1, float("inf")), "x"):
        with pytest.raises(AlgebraError):
            as_complex(bad)


@pytest.mark.parametrize("text,value", [
    ("2", 2), ("-2.5i", -2.5j), ("1e-4-3i", 1e-4 - 3j), ("1+2j", 1 + 2j),
    ("i", 1j), ("-i", -1j), (" .5e1 ", 5.0), ("3i", 3j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("bad", ["", "1+2", "abc", "1+2k", "1 + 2i"])
def test_parse_complex_errors(bad):
    with pytest.raises(AlgebraError):
        parse_complex(bad)


@given(cplx)
def test_format_round_trip(z):
    assert parse_complex(format_complex(z)) == z


def test_continued_sqrt_examples():
    assert continued_sqrt_factor(-1, [0], 0) == 1
    w = continued_sqrt_factor(0, [1, 1j], 1j)
    assert abs(w - cmath.exp(0.25j * math.pi)) < 1e-15
    w = continued_sqrt_factor(0, [1, 1j, -1], -1)
    assert abs(w - 1j) < 1e-15
    # principal value from below the cut is -i
    assert abs(continued_sqrt_factor(0, [1, -1j, -1], -1) + 1j) < 1e-15


def test_continued_sqrt_matches_brute_force_stepping():
    # step-wise unwinding with 10^4 points along the same polyline
    path = [1, 1j, -1]
    pts = np.concatenate([np.linspace(a, b, 5000, endpoint=False)
                          for a, b in zip(path[:-1], path[1:])] + [[-1]])
    arg = np.unwrap(np.angle(pts))[-1]
    assert abs(continued_sqrt_factor(0, path, -1) - cmath.exp(0.5j * arg)) < 1e-14


@given(small, st.lists(small, min_size=1, max_size=5))
def test_sqrt_squares_back(root, path):
    path = [5 * p + 20 for p in path]  # polyline well away from the root
    x = path[-1]
    w = continued_sqrt_factor(root, path, x)
    assert abs(w * w - (x - root)) <= 1e-12 * abs(x - root)


@given(st.floats(0.1, 3.0), st.integers(1, 6))
def test_path_refinement_invariance(angle, splits):
    # refining the polyline (extra waypoints on the same arc chord pieces)
    # leaves the continued branch unchanged
    base = [cmath.exp(1j * t) for t in np.linspace(0, angle * 2, 4)]
    fine = [cmath.exp(1j * t) for t in np.linspace(0, angle * 2, 3 * splits + 1)]
    x = base[-1]
    assert abs(continued_sqrt_factor(0, base, x) - continued_sqrt_factor(0, fine, x)) < 1e-10


def test_tube_violation():
    with pytest.raises(ExclusionTubeError):
        continued_argument(0.5 + 1e-5j, [0, 1], 1)
    # a root beyond an endpoint is allowed
    continued_argument(1.0001, [0, 1], 1)
    with pytest.raises(ExclusionTubeError):
        continued_argument(0, [0, 1], 1)


def test_chain_arguments_real_chain():
    e = np.array([0, 1, 2, 3], dtype=complex)
    args = chain_arguments(e)
    # factors of roots to the right of the segment have argument pi
    assert args[0, 2] == pytest.approx(math.pi)
    assert args[0, 0] == 0.0
    # x - 1 starts at pi and turns clockwise by pi around the vertex
    assert args[1, 1] == pytest.approx(0.0)
    assert args[2, 2] == pytest.approx(0.0)
