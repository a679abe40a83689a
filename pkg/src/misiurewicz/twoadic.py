"""Truncated 2-adic arithmetic: polynomials with coefficients mod 2^K.

Reduction mod 2^K is a ring homomorphism and every divisor in the orbit
constructions is monic, so the whole G / lambda / trace pipeline can be run on
residues.  Valuations below K come out exact; a zero residue only gives a
floor.  Newton's identities divide by j, which costs v2(j) bits of precision;
that loss is tracked per coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .poly import IntPoly, NonIntegralCoefficient
from .quotient import QuotientCtx, Residue, mod_pow
from .valuation import Valuation, valuation_of  # noqa: F401  (re-exported)

GUARD_BITS = 8
MAX_RETRIES = 3


@dataclass(frozen=True)
class TruncPoly:
    coeffs: tuple
    bits: int

    def __post_init__(self):
        if any(not 0 <= x < (1 << self.bits) for x in self.coeffs):
            raise ValueError("coefficient out of range for the recorded precision")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        self._same(other)
        return TruncPoly(tuple(kernels.add(list(self.coeffs), list(other.coeffs), self.bits)), self.bits)

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        self._same(other)
        return TruncPoly(tuple(kernels.sub(list(self.coeffs), list(other.coeffs), self.bits)), self.bits)

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        self._same(other)
        return TruncPoly(tuple(kernels.mul(list(self.coeffs), list(other.coeffs), self.bits)), self.bits)

    def _same(self, other):
        if other.bits != self.bits:
            raise ValueError(f"precision mismatch: 2^{self.bits} vs 2^{other.bits}")


def truncate(f, bits: int) -> TruncPoly:
    if bits < 1:
        raise ValueError("precision must be at least one bit")
    cs = f.coeffs if isinstance(f, (IntPoly, TruncPoly)) else f
    return TruncPoly(tuple(kernels.reduce_bits(list(cs), bits)), bits)


def trunc_ctx(modulus, bits: int) -> QuotientCtx:
    return QuotientCtx(modulus.coeffs if isinstance(modulus, (IntPoly, TruncPoly)) else modulus, bits)


def _residue(f, ctx: QuotientCtx) -> Residue:
    if isinstance(f, Residue):
        return f
    return ctx.reduce(f.coeffs if isinstance(f, (IntPoly, TruncPoly)) else f)


def trunc_mod_pow(f, e: int, ctx: QuotientCtx) -> TruncPoly:
    r = mod_pow(_residue(f, ctx), e)
    return TruncPoly(tuple(r.coeffs), ctx.bits)


def trunc_trace(f, ctx: QuotientCtx) -> int:
    return ctx.trace(_residue(f, ctx))


def signed(residue: int, bits: int) -> int:
    """Representative in [-2^(bits-1), 2^(bits-1))."""
    residue &= (1 << bits) - 1
    return residue - (1 << bits) if residue >> (bits - 1) else residue


def default_precision(m: int, n: int) -> int:
    """Bits needed so that every valuation the certification must decide,
    at most m + 1 + 3n/2, stays strictly below K."""
    return m + 2 + (3 * n + 1) // 2 + GUARD_BITS


def trunc_coeffs_from_power_sums(s, bits: int) -> list[tuple[int, int]]:
    """Leading coefficients from power sums known mod 2^bits.

    Returns ``[(1, bits), (g_{k-1}, K_1), ...]`` where ``g_{k-j}`` is known
    modulo ``2^K_j``.
    """
    top = [(1, bits)]
    for j in range(1, len(s) + 1):
        acc = s[j - 1]
        prec = bits
        for i in range(1, j):
            val, p_i = top[i]
            acc += val * s[j - i - 1]
            prec = min(prec, p_i)
        t = (j & -j).bit_length() - 1
        u = j >> t
        if prec <= t:
            top.append((0, 0))
            continue
        acc &= (1 << prec) - 1
        if acc & ((1 << t) - 1):
            raise NonIntegralCoefficient(f"power sums inconsistent at index {j}")
        newprec = prec - t
        modulus = 1 << newprec
        val = (-(acc >> t) * pow(u, -1, modulus)) % modulus
        top.append((val, newprec))
    return top
