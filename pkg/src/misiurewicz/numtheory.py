"""Small integer helpers: factorization by trial division, Moebius, cyclotomics."""

from __future__ import annotations

from functools import lru_cache

from .poly import IntPoly, exact_div


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the small primes used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def v2(x: int) -> int | None:
    """2-adic valuation of a nonzero integer; ``None`` for zero."""
    if x == 0:
        return None
    return (x & -x).bit_length() - 1


def vp(x: int, p: int) -> int | None:
    if x == 0:
        return None
    if p == 2:
        return v2(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple:
    f = IntPoly([-1] + [0] * (n - 1) + [1], "x")
    for d in divisors(n)[:-1]:
        f = exact_div(f, IntPoly(_cyclotomic(d), "x"))
    return f.coeffs


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d, d | n, d < n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    return IntPoly(_cyclotomic(n), "x")
