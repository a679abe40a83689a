"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored constant term first.  The variable name only matters
when printing: parameter-space polynomials use ``c``, multiplier polynomials
use ``x``.

Division is only offered by monic divisors; every divisor that shows up in the
orbit constructions is monic, and refusing the general case keeps all results
in Z[c].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels

FORMAT_TAG = "misiurewicz-intpoly v1"


class NonZeroRemainder(ArithmeticError):
    """Raised by :func:`exact_div` when the divisor does not divide."""


class NonIntegralCoefficient(ArithmeticError):
    pass


class NotMonic(ValueError):
    pass


class IntPoly:
    """Immutable dense polynomial over Z."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "c"):
        cs = [int(x) for x in coeffs]
        kernels.normalize(cs)
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def _raw(cls, cs: list, var: str = "c") -> "IntPoly":
        p = cls.__new__(cls)
        p.coeffs = tuple(kernels.normalize(cs))
        p.var = var
        return p

    @classmethod
    def monomial(cls, k: int, coeff: int = 1, var: str = "c") -> "IntPoly":
        return cls([0] * k + [coeff], var)

    @classmethod
    def constant(cls, a: int, var: str = "c") -> "IntPoly":
        return cls([a], var)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def with_var(self, var: str) -> "IntPoly":
        return IntPoly._raw(list(self.coeffs), var)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x, var) -> "IntPoly":
        if isinstance(x, IntPoly):
            return x
        if isinstance(x, int):
            return IntPoly([x], var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other, self.var)
        if other is NotImplemented:
            return other
        return IntPoly._raw(kernels.add(list(self.coeffs), list(other.coeffs)), self.var)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly._raw([-x for x in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other, self.var)
        if other is NotImplemented:
            return other
        return IntPoly._raw(kernels.sub(list(self.coeffs), list(other.coeffs)), self.var)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly._raw([other * x for x in self.coeffs], self.var)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._raw(kernels.mul(list(self.coeffs), list(other.coeffs)), self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def square(self) -> "IntPoly":
        return IntPoly._raw(kernels.sqr(list(self.coeffs)), self.var)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by var**k (k >= 0) or divide exactly by var**(-k)."""
        if k >= 0:
            return IntPoly._raw([0] * k + list(self.coeffs), self.var)
        if any(self.coeffs[: -k]):
            raise NonZeroRemainder(f"not divisible by {self.var}^{-k}")
        return IntPoly._raw(list(self.coeffs[-k:]), self.var)

    def derivative(self) -> "IntPoly":
        return IntPoly._raw([i * x for i, x in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    evaluate = __call__

    def __divmod__(self, other: "IntPoly"):
        return divmod_monic(self, other)

    def __mod__(self, other: "IntPoly"):
        return rem_by_monic(self, other)

    def __floordiv__(self, other: "IntPoly"):
        return divmod_monic(self, other)[0]

    # -- printing ---------------------------------------------------------

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return pretty(self)


def pretty(p: IntPoly, var: str | None = None) -> str:
    """Human-readable form, highest degree first: ``x^2-8x+32``."""
    v = var or p.var
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        a = p.coeffs[i]
        if not a:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            mono = v if i == 1 else f"{v}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


# -- division ------------------------------------------------------------------


def _check_monic(g: IntPoly):
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not g.is_monic():
        raise NotMonic("only monic divisors are supported")


def divmod_monic(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    _check_monic(g)
    q, r = kernels.divmod_monic(list(f.coeffs), list(g.coeffs))
    return IntPoly._raw(q, f.var), IntPoly._raw(r, f.var)


def rem_by_monic(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of ``f`` modulo a monic ``g``; integral since ``g`` is monic."""
    return divmod_monic(f, g)[1]


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient ``q`` with ``f == q*g``, or :class:`NonZeroRemainder`."""
    q, r = divmod_monic(f, g)
    if not r.is_zero():
        raise NonZeroRemainder(f"{pretty(g)} does not divide the dividend")
    return q


def gcd_is_constant(f: IntPoly, g: IntPoly) -> bool:
    """True iff gcd(f, g) over Q has degree 0 (checked via the resultant)."""
    if f.is_zero() or g.is_zero():
        return False
    return resultant(f, g) != 0


def is_squarefree(f: IntPoly) -> bool:
    if f.degree < 1:
        return True
    return gcd_is_constant(f, f.derivative())


# -- resultants ----------------------------------------------------------------


def _content(cs: Sequence[int]) -> int:
    from math import gcd

    g = 0
    for x in cs:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for _ in range(da - db + 1):
        if len(r) - 1 < db:
            # keep the scaling exponent exact even when r dropped early
            r = [lb * x for x in r]
            continue
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= lead * y
        kernels.normalize(r)
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Classical resultant Res(f, g) via the subresultant PRS.

    For monic ``f`` this equals the product of ``g`` over the roots of ``f``.
    """
    if f.is_zero() or g.is_zero():
        return 0
    a, b = list(f.coeffs), list(g.coeffs)
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) * (len(b) - 1) % 2:
            s = -s
    if len(b) == 1:
        return s * b[0] ** (len(a) - 1)
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    gg, h = 1, 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        denom = gg * h ** delta
        b = [x // denom for x in r]
        gg = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = gg ** delta // h ** (delta - 1)
        if len(b) == 1:
            break
    da = len(a) - 1
    if da == 0:
        hh = 1
    else:
        hh = b[-1] ** da // h ** (da - 1)
    return s * t * hh


# -- Newton identities ---------------------------------------------------------


def power_sums_from_coeffs(g: IntPoly, count: int) -> list[int]:
    """Power sums s_1..s_count of the roots of the monic ``g`` (with multiplicity).

    Uses s_j + sum_{i=1}^{j-1} g_{k-i} s_{j-i} + j g_{k-j} = 0, where the
    last term is dropped for j > k.
    """
    _check_monic(g)
    k = g.degree
    cs = g.coeffs
    s: list[int] = []
    for j in range(1, count + 1):
        acc = j * cs[k - j] if j <= k else 0
        for i in range(1, min(j - 1, k) + 1):
            acc += cs[k - i] * s[j - i - 1]
        s.append(-acc)
    return s


def coeffs_from_power_sums(s: Sequence[int], k: int) -> list[int]:
    """Top coefficients ``[1, g_{k-1}, ..., g_{k-J}]`` of the monic degree-k
    polynomial whose roots have power sums ``s = (s_1, ..., s_J)``."""
    if len(s) > k:
        raise ValueError(f"{len(s)} power sums given for degree {k}")
    top = [1]
    for j in range(1, len(s) + 1):
        acc = Fraction(s[j - 1])
        for i in range(1, j):
            acc += top[i] * s[j - i - 1]
        val = -acc / j
        if val.denominator != 1:
            raise NonIntegralCoefficient(f"coefficient {j} below the leading one is {val}")
        top.append(int(val))
    return top


def poly_from_top(top: Sequence[int], k: int, var: str = "x") -> IntPoly:
    """Monic degree-k polynomial from a full list ``[1, g_{k-1}, ..., g_0]``."""
    if len(top) != k + 1:
        raise ValueError("need all k+1 coefficients")
    return IntPoly(list(reversed(top)), var)


# -- serialization ---------------------------------------------------------------


def dumps(p: IntPoly, **meta) -> str:
    """Canonical text: a version tag line, then constant-first coefficients."""
    head = FORMAT_TAG
    if meta:
        head += " " + " ".join(f"{k}={v}" for k, v in sorted(meta.items()))
    return head + "\n" + " ".join(str(x) for x in p.coeffs) + "\n"


def loads(text: str, var: str = "c") -> tuple[IntPoly, dict]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(FORMAT_TAG):
        raise ValueError("not a canonical polynomial file (bad or stale version tag)")
    meta = dict(item.split("=", 1) for item in lines[0][len(FORMAT_TAG):].split())
    body = lines[1].split() if len(lines) > 1 else []
    return IntPoly([int(x) for x in body], meta.get("var", var)), meta
