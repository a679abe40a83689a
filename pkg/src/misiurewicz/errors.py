"""Exceptions raised across the package."""

from .poly import NonIntegralCoefficient, NonZeroRemainder, NotMonic  # noqa: F401


class BudgetExceeded(RuntimeError):
    """A requested polynomial is larger than the configured degree budget."""


class CtxMismatch(ValueError):
    pass


class PreconditionViolated(ValueError):
    def __init__(self, which: str, detail: str = ""):
        self.which = which
        super().__init__(f"{which}: {detail}" if detail else which)


class NonIntegralResult(ArithmeticError):
    pass


class NotOddPrime(ValueError):
    pass


class NotPrime(ValueError):
    pass


class HypothesisViolated(ValueError):
    def __init__(self, which: str, detail: str = ""):
        self.which = which
        super().__init__(f"{which}: {detail}" if detail else which)


class BoundViolated(AssertionError):
    """A multiplier coefficient fell below its 2-adic floor (an internal fault)."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
