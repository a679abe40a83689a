"""2-adic valuations that may only be known as a lower bound.

Truncated arithmetic mod 2^K cannot see past bit K: a zero residue only says
the valuation is at least K.  Comparisons against such a floor are answered
only when the answer is forced; otherwise :class:`AmbiguousValuation` is
raised so that callers can raise the precision instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

EXACT, AT_LEAST, INFINITE = "exact", "at_least", "infinite"


class AmbiguousValuation(ArithmeticError):
    pass


@dataclass(frozen=True)
class Valuation:
    kind: str
    value: int | None = None

    @classmethod
    def exact(cls, v: int) -> "Valuation":
        return cls(EXACT, v)

    @classmethod
    def at_least(cls, k: int) -> "Valuation":
        return cls(AT_LEAST, k)

    @classmethod
    def infinite(cls) -> "Valuation":
        return cls(INFINITE)

    @classmethod
    def of_int(cls, x: int, p: int = 2) -> "Valuation":
        from .numtheory import vp

        v = vp(x, p)
        return cls.infinite() if v is None else cls.exact(v)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    def _cmp(self, other) -> int:
        """-1, 0 or 1; raises when the order is not forced."""
        if isinstance(other, int):
            other = Valuation.exact(other)
        a, b = self, other
        if a.kind == INFINITE and b.kind == INFINITE:
            return 0
        if a.kind == INFINITE:
            if b.kind == EXACT:
                return 1
            raise AmbiguousValuation(f"{a} vs {b}")
        if b.kind == INFINITE:
            return -b._cmp(a)
        if a.kind == EXACT and b.kind == EXACT:
            return (a.value > b.value) - (a.value < b.value)
        if a.kind == EXACT and b.kind == AT_LEAST:
            if a.value < b.value:
                return -1
            raise AmbiguousValuation(f"{a} vs {b}")
        if a.kind == AT_LEAST and b.kind == EXACT:
            return -b._cmp(a)
        raise AmbiguousValuation(f"{a} vs {b}")

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __str__(self):
        if self.kind == EXACT:
            return str(self.value)
        if self.kind == AT_LEAST:
            return f">={self.value}"
        return "inf"

    def to_json(self):
        return {"kind": self.kind, "value": self.value}


def valuation_of(residue: int, bits: int) -> Valuation:
    """Valuation of an integer known only modulo 2**bits."""
    residue &= (1 << bits) - 1
    if residue == 0:
        return Valuation.at_least(bits)
    return Valuation.exact((residue & -residue).bit_length() - 1)
