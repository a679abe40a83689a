"""Arithmetic in Z[c]/(G) (or (Z/2^K)[c]/(G)) and root-sum functionals.

The trace of an element ``f`` of the quotient algebra is the sum of ``f`` over
the roots of ``G`` counted with multiplicity, i.e. ``sum_j f_j s_j`` where
``s_j`` are the power sums of the roots (``s_0 = deg G``).  The power sums are
read off ``-R'/R`` with ``R`` the reversed modulus; the same series inverse
drives the Barrett-style reduction used for large moduli.
"""

from __future__ import annotations

import threading

from . import kernels
from .errors import CtxMismatch, NonIntegralResult, PreconditionViolated
from .poly import IntPoly, is_squarefree, power_sums_from_coeffs


class QuotientCtx:
    """A monic modulus with cached reduction data and root power sums."""

    def __init__(self, modulus, bits: int | None = None, var: str = "c"):
        cs = list(modulus.coeffs) if isinstance(modulus, IntPoly) else list(modulus)
        cs = kernels.reduce_bits(cs, bits)
        if len(cs) < 2 or cs[-1] != 1:
            raise ValueError("quotient modulus must be monic of degree >= 1")
        self.modulus = tuple(cs)
        self.degree = len(cs) - 1
        self.bits = bits
        self.var = var
        self._rev = kernels.normalize(list(reversed(cs)))
        self._inv: list | None = None
        self._inv_prec = 0
        self._power_sums: list | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        mode = "exact" if self.bits is None else f"mod 2^{self.bits}"
        return f"QuotientCtx(degree={self.degree}, {mode})"

    # -- reduction --------------------------------------------------------

    def _inverse(self, prec: int) -> list:
        with self._lock:
            if self._inv_prec < prec:
                self._inv = kernels.series_inverse(self._rev, prec, self.bits, self._inv)
                self._inv_prec = prec
            return self._inv

    def reduce_coeffs(self, f: list) -> list:
        """Remainder of a coefficient list modulo the modulus."""
        f = kernels.reduce_bits(list(f), self.bits)
        d = self.degree
        if len(f) <= d:
            return f
        nq = len(f) - d
        g = list(self.modulus)
        if min(nq, d) <= kernels.LONG_DIVISION_CUTOFF:
            return kernels.divmod_long(f, g, self.bits)[1]
        inv = self._inverse(nq)
        qrev = kernels.mul_trunc(f[::-1][:nq], inv, nq, self.bits)
        qrev += [0] * (nq - len(qrev))
        q = qrev[::-1]
        low = kernels.mul(q, g, self.bits)[:d]
        return kernels.sub(f[:d], low, self.bits)

    def reduce(self, f) -> "Residue":
        cs = f.coeffs if isinstance(f, (IntPoly, Residue)) else f
        return Residue(self, self.reduce_coeffs(list(cs)))

    def one(self) -> "Residue":
        return Residue(self, [1])

    def gen(self) -> "Residue":
        return self.reduce([0, 1])

    # -- power sums -------------------------------------------------------

    def power_sums(self) -> list:
        """``[s_0, s_1, ..., s_{d-1}]`` for the roots of the modulus."""
        with self._lock:
            cached = self._power_sums
        if cached is not None:
            return cached
        d = self.degree
        if d <= kernels.LONG_DIVISION_CUTOFF:
            sums = [d] + power_sums_from_coeffs(IntPoly(self.modulus), d - 1)
            sums = kernels.reduce_bits(sums, self.bits) if self.bits else sums
            sums += [0] * (d - len(sums))
        else:
            # sum_{j>=0} s_{j+1} x^j = -R'(x) / R(x)
            inv = self._inverse(d - 1)
            rder = [i * x for i, x in enumerate(self._rev)][1:]
            q = kernels.mul_trunc(rder, inv, d - 1, self.bits)
            q += [0] * (d - 1 - len(q))
            sums = [d] + [-x for x in q]
            if self.bits is not None:
                mask = (1 << self.bits) - 1
                sums = [x & mask for x in sums]
        with self._lock:
            self._power_sums = sums
        return sums

    def trace(self, r: "Residue") -> int:
        self._check(r)
        s = self.power_sums()
        total = sum(a * b for a, b in zip(r.coeffs, s))
        if self.bits is not None:
            total &= (1 << self.bits) - 1
        return total

    def _check(self, r: "Residue"):
        if r.ctx is not self:
            raise CtxMismatch("residue belongs to a different quotient context")


class Residue:
    """Reduced representative of a class in a :class:`QuotientCtx`."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: QuotientCtx, coeffs: list):
        self.ctx = ctx
        self.coeffs = coeffs

    def _other(self, other) -> "Residue":
        if isinstance(other, int):
            return self.ctx.reduce([other])
        if not isinstance(other, Residue):
            return NotImplemented
        if other.ctx is not self.ctx:
            raise CtxMismatch("residues from different quotient contexts")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Residue(self.ctx, kernels.add(self.coeffs, other.coeffs, self.ctx.bits))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Residue(self.ctx, kernels.sub(self.coeffs, other.coeffs, self.ctx.bits))

    def __neg__(self):
        return Residue(self.ctx, kernels.scale(self.coeffs, -1, self.ctx.bits))

    def __mul__(self, other):
        if isinstance(other, int):
            return Residue(self.ctx, kernels.scale(self.coeffs, other, self.ctx.bits))
        other = self._other(other)
        if other is NotImplemented:
            return other
        return mod_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return mod_pow(self, e)

    def __eq__(self, other):
        if not isinstance(other, Residue):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def square(self) -> "Residue":
        return Residue(self.ctx, self.ctx.reduce_coeffs(kernels.sqr(self.coeffs, self.ctx.bits)))

    def trace(self) -> int:
        return self.ctx.trace(self)

    @property
    def poly(self) -> IntPoly:
        return IntPoly(self.coeffs, self.ctx.var)

    def __repr__(self):
        return f"Residue({self.coeffs!r})"


def mod_mul(a: Residue, b: Residue) -> Residue:
    if a.ctx is not b.ctx:
        raise CtxMismatch("residues from different quotient contexts")
    ctx = a.ctx
    if a is b:
        return a.square()
    return Residue(ctx, ctx.reduce_coeffs(kernels.mul(a.coeffs, b.coeffs, ctx.bits)))


def mod_pow(a: Residue, e: int) -> Residue:
    if e < 0:
        raise ValueError("negative exponent")
    result = a.ctx.one()
    base = a
    while e:
        if e & 1:
            result = mod_mul(result, base)
        e >>= 1
        if e:
            base = base.square()
    return result


def trace_of(f: Residue) -> int:
    return f.ctx.trace(f)


def _monic(g: IntPoly, name: str):
    if g.is_zero() or not g.is_monic():
        raise PreconditionViolated("monic", f"{name} must be monic and nonzero")


def T_sum(f: IntPoly, g: IntPoly) -> int:
    """Sum of f over the roots of the monic g, with multiplicity."""
    _monic(g, "g")
    if g.degree == 0:
        return 0
    ctx = QuotientCtx(g)
    return ctx.trace(ctx.reduce(f))


def T_residue(f: IntPoly, g: IntPoly) -> int:
    """Root sum via the remainder formula  T(f, g) = -h(0) / g'(0),
    with ``h = f g' mod g/c``.

    Requires f(0) = g(0) = 0, g'(0) != 0 and squarefree g.
    """
    _monic(g, "g")
    if f[0] != 0:
        raise PreconditionViolated("f(0)=0", "f must vanish at 0")
    if g[0] != 0:
        raise PreconditionViolated("g(0)=0", "g must vanish at 0")
    if not is_squarefree(g):
        raise PreconditionViolated("squarefree", "g has a multiple root")
    # implied by the two checks above, kept as a guard
    gd = g.derivative()
    if gd[0] == 0:
        raise PreconditionViolated("g'(0)!=0", "0 must be a simple root of g")
    g_over_c = g.shift(-1)
    if g_over_c.degree == 0:
        return 0
    h = (f * gd) % g_over_c
    num = -h[0]
    if num % gd[0]:
        raise NonIntegralResult(f"-h(0)/g'(0) = {num}/{gd[0]}")
    return num // gd[0]


def T_over_sum(f, m: int, d: int, bits: int | None = None) -> int:
    """T(f, a_{m+d-1} + a_{m-1}), computed in the quotient by that sum over c
    when f(0) = 0 (c = 0 is then a root contributing nothing)."""
    from .orbit import periodic_sum_coeffs

    cs = list(f.coeffs) if isinstance(f, IntPoly) else list(f)
    f0 = cs[0] if cs else 0
    g = periodic_sum_coeffs(m, d, bits, divide_c=True)
    ctx = QuotientCtx(g, bits)
    total = ctx.trace(ctx.reduce(cs)) + f0
    if bits is not None:
        total &= (1 << bits) - 1
    return total
