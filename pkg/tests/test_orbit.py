import numpy as np
import pytest

from misiurewicz.errors import BudgetExceeded
from misiurewicz.orbit import (MisiurewiczType, misiurewicz_coeffs, misiurewicz_degree,
                               misiurewicz_poly, orbit_derivative, orbit_poly)
from misiurewicz.poly import IntPoly


def test_orbit_start():
    assert orbit_poly(1) == IntPoly([0, 1])
    assert orbit_poly(2) == IntPoly([0, 1, 1])
    assert orbit_poly(3) == IntPoly([0, 1, 1, 2, 1])
    assert orbit_poly(6).degree == 32


@pytest.mark.parametrize("r", range(1, 9))
def test_derivative_recursion(r):
    assert orbit_derivative(r) == orbit_poly(r).derivative()


def test_small_misiurewicz_polys():
    assert misiurewicz_poly((2, 1)) == IntPoly([2, 1])
    assert misiurewicz_poly((2, 2)) == IntPoly([1, 0, 1])
    assert misiurewicz_poly((3, 2)) == IntPoly([1, -1, 1, 1])


def test_type_validation():
    with pytest.raises(ValueError):
        MisiurewiczType(1, 1)
    with pytest.raises(ValueError):
        MisiurewiczType(2, 0)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 7) for n in range(1, 7) if m + n <= 10])
def test_degree_formula(m, n):
    assert misiurewicz_poly((m, n)).degree == misiurewicz_degree(m, n)


def _orbit_type(c, limit=40, tol=1e-6):
    """Exact (preperiod, period) of 0 under z^2 + c found numerically."""
    pts = [0j]
    for _ in range(limit):
        pts.append(pts[-1] ** 2 + c)
    for j in range(1, limit):
        for i in range(j):
            if abs(pts[i] - pts[j]) < tol * max(1, abs(pts[j])):
                return i, j - i
    return None


@pytest.mark.parametrize("t", [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (4, 1), (3, 3)])
def test_roots_have_the_right_orbit_type(t):
    g = misiurewicz_poly(t)
    roots = np.roots([float(x) for x in reversed(g.coeffs)])
    for c in roots:
        assert _orbit_type(complex(c)) == t


def test_truncated_construction_commutes():
    exact = misiurewicz_coeffs((4, 3))
    assert misiurewicz_coeffs((4, 3), bits=16) == [x % (1 << 16) for x in exact]


def test_budget():
    with pytest.raises(BudgetExceeded):
        misiurewicz_poly((6, 6), budget=100)
