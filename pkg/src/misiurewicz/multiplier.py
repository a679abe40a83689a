"""Multipliers of Misiurewicz cycles and the multiplier polynomials P_{m,n}.

For a root alpha of G_{m,n} the cycle multiplier is

    lambda = 2^n * prod_{i=0}^{n-1} a_{m+i}(alpha) = -2^n * prod_{i=0}^{n-1} a_{m+i-1}(alpha)

and P_{m,n} is the characteristic polynomial of multiplication by lambda on
Z[c]/(G_{m,n}).  It is assembled from the power sums tr(lambda^j) through
Newton's identities, which also allows computing only its top coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundViolated, BudgetExceeded, CtxMismatch, NotOddPrime
from .numtheory import divisors, is_prime, moebius
from .orbit import (DEFAULT_BUDGET, MisiurewiczType, _as_type, misiurewicz_coeffs,
                    orbit_coeffs, periodic_sum_coeffs)
from .poly import IntPoly, coeffs_from_power_sums, poly_from_top
from .quotient import QuotientCtx, Residue, mod_pow
from .valuation import Valuation

FULL_DEGREE_LIMIT = 4096


def misiurewicz_ctx(t, bits: int | None = None, budget: int = DEFAULT_BUDGET) -> QuotientCtx:
    t = _as_type(t)
    return QuotientCtx(misiurewicz_coeffs(t, bits, budget), bits)


def orbit_residues(ctx: QuotientCtx, upto: int) -> list[Residue]:
    """[a_1, ..., a_upto] reduced in ``ctx`` (index 0 holds a_1)."""
    out = []
    r = None
    for i in range(1, upto + 1):
        if i == 1 or (1 << (i - 1)) < ctx.degree:
            r = ctx.reduce(orbit_coeffs(i, ctx.bits))
        else:
            r = r.square() + ctx.gen()
        out.append(r)
    return out


def lambda_element(t, ctx: QuotientCtx, sign_form: bool = False) -> Residue:
    """The multiplier as a residue mod G_{m,n}; each orbit factor is reduced
    before multiplying."""
    t = _as_type(t)
    expected = misiurewicz_coeffs(t, ctx.bits)
    if tuple(expected) != ctx.modulus:
        raise CtxMismatch(f"context modulus is not G{t}")
    m, n = t.m, t.n
    orb = orbit_residues(ctx, m + n - 1)
    if sign_form:
        factors, coef = orb[m - 2:m + n - 2], -(1 << n)
    else:
        factors, coef = orb[m - 1:m + n - 1], 1 << n
    acc = ctx.one()
    for r in factors:
        acc = acc * r
    return acc * coef


def lambda_power_sums(t, count: int, bits: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> tuple[int, list[int]]:
    """(deg G, [tr(lambda), ..., tr(lambda^count)])."""
    t = _as_type(t)
    ctx = misiurewicz_ctx(t, bits, budget)
    lam = lambda_element(t, ctx)
    sums = []
    power = lam
    for j in range(1, count + 1):
        if j > 1:
            power = power * lam
        sums.append(ctx.trace(power))
    return ctx.degree, sums


@dataclass
class MultiplierPoly:
    """P_{m,n}, either complete or only its top ``known`` coefficients."""

    type: MisiurewiczType
    degree: int
    top: tuple  # (b_{k-1}, b_{k-2}, ...): coefficients below the leading 1
    full: bool
    power_sums: tuple = field(default=(), repr=False)

    @property
    def known(self) -> int:
        return len(self.top)

    @property
    def provenance(self) -> str:
        return "full" if self.full else f"leading({self.known})"

    def coefficient(self, ell: int) -> int:
        """b_{k-ell}, the coefficient ``ell`` places below the leading one."""
        if not 1 <= ell <= self.known:
            raise IndexError(f"coefficient {ell} below the top is not available")
        return self.top[ell - 1]

    @property
    def trace(self) -> int:
        return -self.top[0]

    @property
    def poly(self) -> IntPoly:
        if not self.full:
            raise ValueError("only the leading coefficients are known")
        return poly_from_top((1,) + self.top, self.degree, "x")


def multiplier_poly(t, budget: int = DEFAULT_BUDGET,
                    max_degree: int = FULL_DEGREE_LIMIT) -> MultiplierPoly:
    """The full multiplier polynomial P_{m,n} in Z[x]."""
    t = _as_type(t)
    from .orbit import misiurewicz_degree

    deg = misiurewicz_degree(t.m, t.n)
    if deg > max_degree:
        raise BudgetExceeded(f"full P{t} has degree {deg} > {max_degree}")
    k, sums = lambda_power_sums(t, deg, None, budget)
    top = coeffs_from_power_sums(sums, k)
    return MultiplierPoly(t, k, tuple(top[1:]), True, tuple(sums))


def leading_coeffs(t, count: int, budget: int = DEFAULT_BUDGET) -> MultiplierPoly:
    """Top ``count`` coefficients of P_{m,n} from the first power sums only."""
    t = _as_type(t)
    from .orbit import misiurewicz_degree

    deg = misiurewicz_degree(t.m, t.n)
    if count > deg:
        raise ValueError(f"P{t} has only {deg} coefficients below the top")
    k, sums = lambda_power_sums(t, count, None, budget)
    top = coeffs_from_power_sums(sums, k)
    return MultiplierPoly(t, k, tuple(top[1:]), count == k, tuple(sums))


def _mask(x: int, bits: int | None) -> int:
    return x if bits is None else x & ((1 << bits) - 1)


def trace_mobius(t, bits: int | None = None, budget: int = DEFAULT_BUDGET) -> int:
    """tr(P_{m,n}) as a Moebius sum of root sums over a_{m+d-1} + a_{m-1}, d | n,
    without building P."""
    t = _as_type(t)
    m, n = t.m, t.n
    total = 0
    for d in divisors(n):
        mu = moebius(n // d)
        if not mu:
            continue
        g = periodic_sum_coeffs(m, d, bits, divide_c=True, budget=budget)
        ctx = QuotientCtx(g, bits)
        prod = ctx.one()
        for r in orbit_residues(ctx, m + d - 2)[m - 2:]:
            prod = prod * r
        # every factor vanishes at c = 0, so the removed root adds nothing
        value = ctx.trace(mod_pow(prod, n // d))
        sign = -1 if (n // d) % 2 else 1
        total += sign * mu * value
    return _mask(total << n, bits)


def trace_closed_form(m: int, p: int, bits: int | None = None) -> int:
    """tr(P_{m,p}) for an odd prime p through the single root sum
    T(a_{m-1}^p, a_m + a_{m-1}) over the degree 2^(m-1) - 1 field."""
    if p < 3 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    if m < 2:
        raise ValueError("m must be at least 2")
    if m == 2:
        return _mask((1 << (2 * p)) - (1 << (p + 1)), bits)
    g = periodic_sum_coeffs(m, 1, bits, divide_c=True)
    ctx = QuotientCtx(g, bits)
    base = ctx.reduce(orbit_coeffs(m - 1, bits))
    inner = ctx.trace(mod_pow(base, p)) + (1 << (m + p - 2)) - (1 << (m - 2))
    return _mask(inner << p, bits)


@dataclass
class PrespecialReport:
    type: MisiurewiczType
    entries: list  # (ell, Valuation, floor, ok)

    @property
    def ok(self) -> bool:
        return all(e[3] for e in self.entries)

    @property
    def violations(self) -> list:
        return [e for e in self.entries if not e[3]]


def prespecial_bounds(P: MultiplierPoly, strict: bool = True) -> PrespecialReport:
    """Check v2(b_{k-ell}) >= n*ell + 1 on every available coefficient."""
    n = P.type.n
    entries = []
    for ell in range(1, P.known + 1):
        v = Valuation.of_int(P.coefficient(ell))
        floor = n * ell + 1
        entries.append((ell, v, floor, v >= floor))
    report = PrespecialReport(P.type, entries)
    if strict and not report.ok:
        raise BoundViolated(f"P{P.type}: coefficients below the 2-adic floor: "
                            f"{[(e[0], str(e[1])) for e in report.violations]}", report)
    return report
