"""Critical-orbit polynomials a_i(c) = f_c^i(0) and Misiurewicz polynomials G_{m,n}.

``a_1 = c`` and ``a_{i+1} = a_i^2 + c``, so ``deg a_i = 2^(i-1)``.  The
polynomial G_{m,n} is the Moebius-weighted product

    prod_{k | n} (a_{m+k-1} + a_{m-1})^mu(n/k)  [ * prod_{k | n} a_k^(-mu(n/k))  if n | m-1 ]

whose roots are the parameters c with 0 strictly preperiodic of type (m, n).
All routines accept ``bits``: ``None`` for exact integers, or K to work with
coefficients reduced mod 2^K.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import BudgetExceeded, NonZeroRemainder
from .numtheory import divisors, moebius
from .poly import IntPoly

DEFAULT_BUDGET = 1 << 20


@dataclass(frozen=True, order=True)
class MisiurewiczType:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"preperiod m must be at least 2 (got {self.m})")
        if self.n < 1:
            raise ValueError(f"period n must be at least 1 (got {self.n})")

    def __str__(self):
        return f"({self.m},{self.n})"


def _as_type(t) -> MisiurewiczType:
    if isinstance(t, MisiurewiczType):
        return t
    return MisiurewiczType(*t)


def _check_budget(degree: int, budget: int, what: str):
    if degree > budget:
        raise BudgetExceeded(f"{what} has degree {degree} > budget {budget}")


@lru_cache(maxsize=48)
def _orbit(i: int, bits: int | None) -> tuple:
    if i == 1:
        return (0, 1)
    prev = list(_orbit(i - 1, bits))
    nxt = kernels.sqr(prev, bits)
    nxt += [0] * (2 - len(nxt))
    nxt[1] += 1
    return tuple(kernels.reduce_bits(nxt, bits))


def orbit_coeffs(i: int, bits: int | None = None, budget: int = DEFAULT_BUDGET) -> list:
    if i < 1:
        raise ValueError("orbit index starts at 1")
    _check_budget(1 << (i - 1), budget, f"a_{i}")
    return list(_orbit(i, bits))


def orbit_poly(i: int, budget: int = DEFAULT_BUDGET) -> IntPoly:
    """a_i as an exact polynomial in c."""
    return IntPoly(orbit_coeffs(i, None, budget), "c")


@lru_cache(maxsize=32)
def _orbit_derivative(r: int) -> tuple:
    if r == 1:
        return (1,)
    # a_r' = 1 + 2 a_{r-1} a_{r-1}'
    prod = kernels.mul(list(_orbit(r - 1, None)), list(_orbit_derivative(r - 1)))
    out = [2 * x for x in prod] or [0]
    out[0] += 1
    return tuple(kernels.normalize(out))


def orbit_derivative(r: int, budget: int = DEFAULT_BUDGET) -> IntPoly:
    """a_r' from the recursion a_r' = 1 + 2 a_{r-1} a_{r-1}'."""
    if r < 1:
        raise ValueError("orbit index starts at 1")
    _check_budget(1 << (r - 1), budget, f"a_{r}'")
    return IntPoly(_orbit_derivative(r), "c")


def misiurewicz_degree(m: int, n: int) -> int:
    deg = sum(moebius(n // k) * (1 << (m + k - 2)) for k in divisors(n))
    if (m - 1) % n == 0:
        deg -= sum(moebius(n // k) * (1 << (k - 1)) for k in divisors(n))
    return deg


def _factors(t: MisiurewiczType) -> tuple[list, list]:
    """(orbit-index description, sign) lists of numerator and denominator factors."""
    m, n = t.m, t.n
    num, den = [], []
    for k in divisors(n):
        mu = moebius(n // k)
        if mu == 1:
            num.append(("sum", m + k - 1, m - 1))
        elif mu == -1:
            den.append(("sum", m + k - 1, m - 1))
        if (m - 1) % n == 0:
            if mu == 1:
                den.append(("single", k))
            elif mu == -1:
                num.append(("single", k))
    return num, den


def _factor_coeffs(desc, bits):
    if desc[0] == "single":
        return list(_orbit(desc[1], bits))
    return kernels.add(list(_orbit(desc[1], bits)), list(_orbit(desc[2], bits)), bits)


def _factor_degree(desc) -> int:
    return 1 << (desc[1] - 1)


def misiurewicz_coeffs(t, bits: int | None = None, budget: int = DEFAULT_BUDGET) -> list:
    t = _as_type(t)
    num, den = _factors(t)
    _check_budget(sum(_factor_degree(d) for d in num), budget, f"numerator of G{t}")
    # multiply numerators by ascending k, then divide; the k = n factor dominates
    # so the intermediate stays below twice the final degree
    acc = [1]
    for desc in num:
        acc = kernels.mul(acc, _factor_coeffs(desc, bits), bits)
    for desc in sorted(den, key=_factor_degree, reverse=True):
        q, r = kernels.divmod_monic(acc, _factor_coeffs(desc, bits), bits)
        if r:
            raise NonZeroRemainder(f"G{t}: factor {desc} does not divide")
        acc = q
    return acc


@lru_cache(maxsize=64)
def _misiurewicz_cached(m: int, n: int, bits: int | None, budget: int) -> tuple:
    return tuple(misiurewicz_coeffs(MisiurewiczType(m, n), bits, budget))


def misiurewicz_poly(t, budget: int = DEFAULT_BUDGET) -> IntPoly:
    """The monic Misiurewicz polynomial G_{m,n} in Z[c]."""
    t = _as_type(t)
    return IntPoly(_misiurewicz_cached(t.m, t.n, None, budget), "c")


def periodic_sum_coeffs(m: int, d: int, bits: int | None = None, divide_c: bool = True,
                        budget: int = DEFAULT_BUDGET) -> list:
    """a_{m+d-1} + a_{m-1}, optionally with its root c = 0 removed."""
    _check_budget(1 << (m + d - 2), budget, f"a_{m + d - 1}")
    g = kernels.add(list(_orbit(m + d - 1, bits)), list(_orbit(m - 1, bits)), bits)
    if divide_c:
        if g and g[0]:
            raise NonZeroRemainder("constant term should vanish")
        g = g[1:]
    return g
