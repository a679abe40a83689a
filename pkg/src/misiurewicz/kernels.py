"""Dense coefficient-list kernels shared by the exact and the mod 2^K code paths.

A polynomial here is a plain ``list`` of Python ints, constant term first,
with no trailing zeros (``[]`` is the zero polynomial).  Every routine takes
an optional ``bits`` argument: ``None`` means exact integer arithmetic,
otherwise coefficients are residues in ``[0, 2**bits)``.

Large products go through Kronecker substitution: the coefficient vectors are
packed into one big integer each, multiplied once (by GMP when available) and
unpacked again.  Below ``SCHOOLBOOK_CUTOFF`` the quadratic loop is faster.
"""

from __future__ import annotations

try:
    import gmpy2
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    gmpy2 = None

SCHOOLBOOK_CUTOFF = 24
# a remainder is done by long division when quotient or divisor is this short
LONG_DIVISION_CUTOFF = 64


def normalize(a: list) -> list:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    if n != len(a):
        del a[n:]
    return a


def reduce_bits(a: list, bits: int | None) -> list:
    if bits is None:
        return normalize(a)
    mask = (1 << bits) - 1
    return normalize([x & mask for x in a])


def add(a: list, b: list, bits: int | None = None) -> list:
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, x in enumerate(b):
        res[i] += x
    return reduce_bits(res, bits)


def sub(a: list, b: list, bits: int | None = None) -> list:
    res = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        res[i] -= x
    return reduce_bits(res, bits)


def scale(a: list, k: int, bits: int | None = None) -> list:
    return reduce_bits([k * x for x in a], bits)


def _schoolbook(a: list, b: list) -> list:
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return res


def _bigmul(x: int, y: int) -> int:
    if gmpy2 is None:
        return x * y
    if x is y:
        return int(gmpy2.square(gmpy2.mpz(x)))
    return int(gmpy2.mpz(x) * gmpy2.mpz(y))


def _pack_nonneg(a: list, width: int) -> int:
    return int.from_bytes(b"".join(x.to_bytes(width, "little") for x in a), "little")


def _pack(a: list, width: int) -> int:
    if all(x >= 0 for x in a):
        return _pack_nonneg(a, width)
    pos = _pack_nonneg([x if x > 0 else 0 for x in a], width)
    neg = _pack_nonneg([-x if x < 0 else 0 for x in a], width)
    return pos - neg


def _kronecker(a: list, b: list, signed: bool) -> list:
    n = len(a) + len(b) - 1
    ma = max(abs(x).bit_length() for x in a)
    mb = max(abs(x).bit_length() for x in b)
    # |c_k| < 2**(ma + mb + bitlen(min len)); one more bit for the signed offset
    nbits = ma + mb + min(len(a), len(b)).bit_length() + 2
    width = (nbits + 7) // 8
    if a is b:
        pa = _pack(a, width)
        prod = _bigmul(pa, pa)
    else:
        prod = _bigmul(_pack(a, width), _pack(b, width))
    if signed:
        half = 1 << (8 * width - 1)
        prod += int.from_bytes(half.to_bytes(width, "little") * n, "little")
    raw = prod.to_bytes(width * n, "little")
    frombytes = int.from_bytes
    out = [frombytes(raw[i:i + width], "little") for i in range(0, width * n, width)]
    if signed:
        out = [x - half for x in out]
    return out


def mul(a: list, b: list, bits: int | None = None) -> list:
    """Product of two coefficient lists (exact, or mod 2**bits)."""
    if not a or not b:
        return []
    if min(len(a), len(b)) <= SCHOOLBOOK_CUTOFF:
        res = _schoolbook(a, b)
    else:
        signed = bits is None and (any(x < 0 for x in a) or any(x < 0 for x in b))
        res = _kronecker(a, b, signed)
    return reduce_bits(res, bits)


def sqr(a: list, bits: int | None = None) -> list:
    if not a:
        return []
    if len(a) <= SCHOOLBOOK_CUTOFF:
        return reduce_bits(_schoolbook(a, a), bits)
    signed = bits is None and any(x < 0 for x in a)
    return reduce_bits(_kronecker(a, a, signed), bits)


def mul_trunc(a: list, b: list, n: int, bits: int | None = None) -> list:
    """Product truncated to the first ``n`` coefficients."""
    return reduce_bits(mul(a[:n], b[:n], bits)[:n], bits)


def series_inverse(r: list, n: int, bits: int | None = None, start: list | None = None) -> list:
    """Power series inverse of ``r`` (with ``r[0] == 1``) to precision ``n``.

    ``start`` may hold an inverse already known to a lower precision; the
    Newton iteration then resumes from it.
    """
    if not r or r[0] != 1:
        raise ValueError("series inverse needs constant term 1")
    h = list(start) if start else [1]
    prec = max(len(h), 1)
    h = h[:n] if prec >= n else h
    while prec < n:
        new = min(2 * prec, n)
        e = mul_trunc(r, h, new, bits)
        e += [0] * (new - len(e))
        # r*h = 1 + x^prec * e_hi  (mod x^new)
        e_hi = normalize(e[prec:new])
        corr = mul_trunc(h, e_hi, new - prec, bits)
        h = h + [0] * (new - len(h))
        for i, x in enumerate(corr):
            h[prec + i] -= x
        h = reduce_bits(h, bits)
        prec = new
    return h


def divmod_long(f: list, g: list, bits: int | None = None) -> tuple[list, list]:
    """Schoolbook division by a monic ``g``."""
    dg = len(g) - 1
    if len(f) <= dg:
        return [], list(f)
    r = list(f)
    q = [0] * (len(f) - dg)
    low = g[:dg]
    mask = None if bits is None else (1 << bits) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = r[i]
        if mask is not None:
            c &= mask
        if not c:
            continue
        q[i - dg] = c
        base = i - dg
        for j, y in enumerate(low):
            if y:
                r[base + j] -= c * y
        r[i] = 0
    return reduce_bits(q, bits), reduce_bits(r[:dg], bits)


def divmod_monic(f: list, g: list, bits: int | None = None) -> tuple[list, list]:
    """Division by a monic ``g``: long division for short quotients or
    divisors, otherwise the reversed-series (Barrett) method."""
    f = reduce_bits(list(f), bits)
    if bits is not None:
        g = reduce_bits(list(g), bits)
    dg = len(g) - 1
    nq = len(f) - dg
    if nq <= 0:
        return [], f
    if min(nq, dg) <= LONG_DIVISION_CUTOFF:
        return divmod_long(f, g, bits)
    inv = series_inverse(normalize(g[::-1]), nq, bits)
    qrev = mul_trunc(f[::-1][:nq], inv, nq, bits)
    qrev += [0] * (nq - len(qrev))
    q = normalize(qrev[::-1])
    r = sub(f[:dg], mul(q, g, bits)[:dg], bits)
    return q, r
