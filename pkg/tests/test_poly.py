import pytest
import sympy
from hypothesis import given, settings, strategies as st

from misiurewicz import kernels
from misiurewicz.poly import (IntPoly, NonZeroRemainder, NotMonic, coeffs_from_power_sums,
                              dumps, exact_div, is_squarefree, loads, power_sums_from_coeffs,
                              pretty, resultant)

small_coeffs = st.lists(st.integers(-50, 50), min_size=0, max_size=12)
X = sympy.Symbol("x")


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], X)


def monic(cs):
    return IntPoly(list(cs) + [1])


def test_pretty_forms():
    assert pretty(IntPoly([32, -8, 1], "x")) == "x^2-8x+32"
    assert pretty(IntPoly([2, 1])) == "c+2"
    assert pretty(IntPoly([])) == "0"
    assert pretty(IntPoly([-1, 0, -3])) == "-3c^2-1"


def test_arithmetic_and_degree():
    a = IntPoly([1, 1])
    assert (a * a).coeffs == (1, 2, 1)
    assert (a - a).degree == -1
    assert a ** 3 == IntPoly([1, 3, 3, 1])
    assert a(2) == 3
    assert IntPoly([0, 0, 1]).derivative() == IntPoly([0, 2])


def test_division_by_non_monic_refused():
    with pytest.raises(NotMonic):
        divmod(IntPoly([1, 2, 3]), IntPoly([1, 2]))


def test_exact_div():
    assert exact_div(IntPoly([-1, 0, 1]), IntPoly([1, 1])) == IntPoly([-1, 1])
    with pytest.raises(NonZeroRemainder):
        exact_div(IntPoly([1, 0, 1]), IntPoly([1, 1]))


@settings(max_examples=60, deadline=None)
@given(small_coeffs, st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_divmod_matches_sympy(f, g):
    f, g = IntPoly(f), monic(g)
    q, r = divmod(f, g)
    sq, sr = sympy.div(to_sympy(f), to_sympy(g))
    assert to_sympy(q) == sq and to_sympy(r) == sr


def sylvester_det(f: IntPoly, g: IntPoly) -> int:
    m, n = f.degree, g.degree
    fs, gs = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    rows = [[0] * i + fs + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + gs + [0] * (m - 1 - i) for i in range(m)]
    return int(sympy.Matrix(rows).det()) if rows else 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=7), small_coeffs)
def test_resultant_matches_sylvester_determinant(a, b):
    f, g = monic(a), IntPoly(b)
    if g.degree < 1:
        return
    assert resultant(f, g) == sylvester_det(f, g)


def test_resultant_worked_values():
    # Res(x, x^3 + 1) = 1 (value of x^3+1 at 0); swapping picks up (-1)^(1*3)
    assert resultant(IntPoly([0, 1]), IntPoly([1, 0, 0, 1])) == 1
    assert resultant(IntPoly([1, 0, 0, 1]), IntPoly([0, 1])) == -1


def test_resultant_with_constant():
    assert resultant(IntPoly([1, 0, 1]), IntPoly([3])) == 9


def test_squarefree():
    assert is_squarefree(IntPoly([0, 2, 1]))
    assert not is_squarefree(IntPoly([0, 0, 1]))
    assert not is_squarefree(IntPoly([1, 2, 1]))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=1, max_size=10))
def test_newton_round_trip(cs):
    g = monic(cs)
    k = g.degree
    top = coeffs_from_power_sums(power_sums_from_coeffs(g, k), k)
    assert top == [g[k - i] for i in range(k + 1)]


def test_power_sums_against_roots():
    # roots 1, 2, 3
    g = IntPoly([-6, 11, -6, 1])
    assert power_sums_from_coeffs(g, 4) == [6, 14, 36, 98]


@settings(max_examples=50, deadline=None)
@given(small_coeffs, st.sampled_from(["c", "x"]))
def test_dumps_loads_round_trip(cs, var):
    p = IntPoly(cs, var)
    q, meta = loads(dumps(p, var=var, m=3))
    assert q == p and q.var == var and meta["m"] == "3"


def test_loads_rejects_unknown_tag():
    with pytest.raises(ValueError):
        loads("something else\n1 2 3\n")


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=80),
       st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=80),
       st.sampled_from([None, 7, 64]))
def test_kronecker_matches_schoolbook(a, b, bits):
    want = kernels.reduce_bits(kernels._schoolbook(a, b), bits)
    if bits is not None:
        a = kernels.reduce_bits(a, bits) or [0]
        b = kernels.reduce_bits(b, bits) or [0]
    assert kernels.mul(a, b, bits) == want
    assert kernels.reduce_bits(kernels._kronecker(a, b, bits is None), bits) == want


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-99, 99), min_size=150, max_size=300),
       st.lists(st.integers(-99, 99), min_size=70, max_size=140), st.sampled_from([None, 20]))
def test_barrett_matches_long_division(f, g, bits):
    g = g + [1]
    assert kernels.divmod_monic(f, g, bits) == kernels.divmod_long(f, g, bits)


def test_series_inverse():
    r = [1, 3, -2, 5]
    inv = kernels.series_inverse(r, 20)
    assert kernels.mul_trunc(r, inv, 20) == [1]
