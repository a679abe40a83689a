"""Tables of v2(tr(P_{m,p})) against m + p."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .certify import ModeMismatch, trace_valuation
from .errors import BudgetExceeded
from .numtheory import is_prime
from .orbit import DEFAULT_BUDGET

COLUMNS = ("m", "p", "v2_trace", "m_plus_p", "exceeds", "status", "method", "mode", "precision",
           "seconds")


@dataclass
class VRow:
    m: int
    p: int
    v2_trace: int | None
    status: str  # "ok" or "inconclusive"
    method: str
    mode: str
    precision: int | None
    seconds: float

    @property
    def m_plus_p(self) -> int:
        return self.m + self.p

    @property
    def exceeds(self) -> bool:
        return self.v2_trace is not None and self.v2_trace > self.m_plus_p

    def as_dict(self, timings: bool = True) -> dict:
        d = {c: getattr(self, c) for c in COLUMNS}
        if not timings:
            d.pop("seconds")
        return d


def default_threads() -> int:
    env = os.environ.get("MISIUREWICZ_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def compute_row(m: int, p: int, mode: str = "truncated", bits: int | None = None,
                budget: int = DEFAULT_BUDGET) -> VRow:
    start = time.perf_counter()
    try:
        v, method, K = trace_valuation(m, p, mode, bits, budget)
    except BudgetExceeded:
        return VRow(m, p, None, "inconclusive", "budget", mode, bits, time.perf_counter() - start)
    status = "ok" if v.is_exact else "inconclusive"
    return VRow(m, p, v.value if v.is_exact else None, status, method, mode, K,
                time.perf_counter() - start)


def cells(m_values, p_values) -> list[tuple[int, int]]:
    return [(m, p) for m in m_values for p in p_values if is_prime(p)]


def compute_table(pairs, mode: str = "truncated", bits: int | None = None,
                  budget: int = DEFAULT_BUDGET, threads: int | None = None) -> list[VRow]:
    """Rows for every (m, p) pair, in the given order.

    ``mode="both"`` raises ModeMismatch as soon as a cell disagrees.
    """
    pairs = list(pairs)
    threads = threads or default_threads()
    if threads == 1 or len(pairs) < 2:
        return [compute_row(m, p, mode, bits, budget) for m, p in pairs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(compute_row, m, p, mode, bits, budget) for m, p in pairs]
        return [f.result() for f in futures]


__all__ = ["COLUMNS", "VRow", "ModeMismatch", "cells", "compute_row", "compute_table",
           "default_threads"]
