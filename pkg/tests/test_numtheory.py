import sympy
import pytest

from misiurewicz.numtheory import (cyclotomic, divisors, factorize, is_prime, moebius, primes_in,
                                   v2, vp)


def test_primes_and_factorization():
    assert primes_in(1, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert is_prime(1021) and not is_prime(1023) and not is_prime(1)
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


@pytest.mark.parametrize("n", range(1, 60))
def test_moebius_matches_sympy(n):
    assert moebius(n) == sympy.mobius(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 12, 15, 20, 30, 105])
def test_cyclotomic_matches_sympy(n):
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic(n).coeffs) == want


def test_valuations():
    assert v2(8) == 3 and v2(-12) == 2 and v2(0) is None
    assert vp(45, 3) == 2
