"""Verification battery: every checkable identity and table value, item by item."""

from __future__ import annotations

import random
import time
from collections import defaultdict
from dataclasses import asdict, dataclass

from .certify import (INCONCLUSIVE, PROVEN, ModeMismatch, base_case_types, direct_two_special,
                      is_p_special, res_cyclotomic_check, verify_lemma_suite, verify_thm_square)
from .errors import BoundViolated, BudgetExceeded
from .known import KNOWN_TRACE_VALUATIONS
from .multiplier import multiplier_poly, prespecial_bounds, trace_closed_form, trace_mobius
from .orbit import DEFAULT_BUDGET, misiurewicz_degree
from .poly import IntPoly, is_squarefree
from .quotient import T_residue, T_sum
from .vtable import compute_row

PASS, FAIL, SKIP = "pass", "fail", "inconclusive"
SCOPES = ("lemmas", "contour", "traces", "thm-square", "prespecial", "special-res", "base27",
          "table1")
SQUARE_PAIRS = ((4, 1), (4, 2), (4, 3), (5, 2), (5, 3))
SMALL_DEGREE = 64


@dataclass
class Item:
    scope: str
    name: str
    status: str
    detail: str
    seconds: float = 0.0

    def to_json(self) -> dict:
        return asdict(self)


def _timed(scope, name, fn) -> Item:
    start = time.perf_counter()
    try:
        status, detail = fn()
    except (ModeMismatch, BoundViolated, AssertionError) as exc:
        status, detail = FAIL, f"{type(exc).__name__}: {exc}"
    except BudgetExceeded as exc:
        status, detail = SKIP, f"budget: {exc}"
    return Item(scope, name, status, detail, round(time.perf_counter() - start, 4))


def small_types(limit: int = SMALL_DEGREE) -> list[tuple[int, int]]:
    """All (m, n) with deg G_{m,n} <= limit."""
    out = []
    m = 2
    while misiurewicz_degree(m, 1) <= limit:
        n = 1
        while misiurewicz_degree(m, n) <= limit:
            out.append((m, n))
            n += 1
        m += 1
    return out


# -- scopes ----------------------------------------------------------------------------


def run_lemmas(cfg) -> list[Item]:
    start = time.perf_counter()
    report = verify_lemma_suite()
    elapsed = time.perf_counter() - start
    groups = defaultdict(list)
    for it in report.items:
        groups[it.identity].append(it)
    items = []
    for identity, its in groups.items():
        bad = [i for i in its if not i.ok]
        detail = f"{len(its) - len(bad)}/{len(its)} instances"
        if bad:
            detail += f"; first failure {bad[0].params}"
        items.append(Item("lemmas", identity, FAIL if bad else PASS, detail,
                          round(elapsed * len(its) / len(report.items), 4)))
    return items


def random_contour_instance(rng: random.Random, max_deg: int = 10):
    """(f, g) meeting the remainder-formula hypotheses: f(0) = g(0) = 0,
    g monic squarefree with g'(0) != 0."""
    while True:
        d = rng.randint(1, max_deg)
        g = IntPoly([0] + [rng.randint(-5, 5) for _ in range(d - 1)] + [1])
        if g[1] == 0 or not is_squarefree(g):
            continue
        f = IntPoly([0] + [rng.randint(-9, 9) for _ in range(rng.randint(1, 12))])
        return f, g


def run_contour(cfg, count: int = 200, seed: int = 20240229) -> list[Item]:
    def worked():
        got = T_residue(IntPoly([0, 0, 1]), IntPoly([0, 2, 1]))
        return (PASS if got == 4 else FAIL), f"T(c^2, c^2+2c) = {got}"

    def randomized():
        rng = random.Random(seed)
        for i in range(count):
            f, g = random_contour_instance(rng)
            a, b = T_residue(f, g), T_sum(f, g)
            if a != b:
                return FAIL, f"instance {i}: f={f} g={g}: {a} != {b}"
        return PASS, f"{count} random instances agree"

    return [_timed("contour", "worked-example", worked),
            _timed("contour", f"random-{count}", randomized)]


def run_traces(cfg) -> list[Item]:
    items = []
    for p in (3, 5, 7):
        def three_ways(p=p):
            expected = (1 << (2 * p)) - (1 << (p + 1))
            full = multiplier_poly((2, p), cfg.budget).trace
            mob = trace_mobius((2, p), None, cfg.budget)
            closed = trace_closed_form(2, p)
            ok = full == mob == closed == expected
            return (PASS if ok else FAIL), f"full={full} mobius={mob} closed={closed} 2^2p-2^(p+1)={expected}"
        items.append(_timed("traces", f"m=2 p={p} three ways", three_ways))
    for m in (2, 3, 4):
        for p in (3, 5, 7):
            def closed_vs_mobius(m=m, p=p):
                a, b = trace_closed_form(m, p), trace_mobius((m, p), None, cfg.budget)
                return (PASS if a == b else FAIL), f"closed={a} mobius={b}"
            items.append(_timed("traces", f"closed form vs mobius ({m},{p})", closed_vs_mobius))

    def mobius_vs_full():
        for t in small_types():
            a, b = trace_mobius(t, None, cfg.budget), multiplier_poly(t, cfg.budget).trace
            if a != b:
                return FAIL, f"{t}: mobius {a} != full {b}"
        return PASS, f"{len(small_types())} types with deg G <= {SMALL_DEGREE}"
    items.append(_timed("traces", "mobius vs full construction", mobius_vs_full))
    return items


def run_thm_square(cfg) -> list[Item]:
    items = []
    pairs = list(SQUARE_PAIRS)
    pairs += [(m, n) for m, n in small_types() if m >= 3 and (m, n) not in pairs
              and misiurewicz_degree(m + 1, n) <= SMALL_DEGREE]
    for m, n in pairs:
        def square(m=m, n=n):
            r = verify_thm_square(m, n, cfg.budget)
            if not r.rows:
                return PASS, "no qualifying index (vacuous)"
            bad = [row for row in r.rows if not row[3]]
            status = FAIL if bad else PASS
            return status, f"{len(r.rows) - len(bad)}/{len(r.rows)} top coefficients of P^2 match"
        items.append(_timed("thm-square", f"square ({m},{n})", square))
    for m, n in SQUARE_PAIRS:
        def doubling(m=m, n=n):
            assert n // 2 <= (1 << (m - 2)) - 2, "doubling hypothesis"
            a = trace_mobius((m, n), None, cfg.budget)
            b = trace_mobius((m + 1, n), None, cfg.budget)
            return (PASS if b == 2 * a else FAIL), f"tr P({m},{n}) = {a}, tr P({m + 1},{n}) = {b}"
        items.append(_timed("thm-square", f"trace doubling ({m},{n})", doubling))
    return items


def run_prespecial(cfg) -> list[Item]:
    def floors():
        total = 0
        for t in small_types():
            rep = prespecial_bounds(multiplier_poly(t, cfg.budget), strict=True)
            total += len(rep.entries)
        return PASS, f"{total} coefficients over {len(small_types())} full polynomials"
    return [_timed("prespecial", f"full P with deg <= {SMALL_DEGREE}", floors)]


def run_special_res(cfg, ell_max: int = 20) -> list[Item]:
    items = []
    for t in small_types():
        def res(t=t):
            P = multiplier_poly(t, cfg.budget).poly
            if not is_p_special(P, 2):
                return SKIP, "not 2-special, property does not apply"
            low = [(ell, r) for ell, r, flag in res_cyclotomic_check(P, ell_max) if flag]
            return (FAIL if low else PASS), (f"|Res| <= 1 at {low}" if low else
                                             f"|Res(P,Phi_l)| > 1 for l = 1..{ell_max}")
        items.append(_timed("special-res", f"P{t}", res))
    return items


def run_base27(cfg) -> list[Item]:
    items = []

    def enumerated():
        got = base_case_types()
        return (PASS if len(got) == 27 else FAIL), f"{len(got)} steps need direct verification"
    items.append(_timed("base27", "enumeration", enumerated))
    for m, n in base_case_types():
        def case(m=m, n=n):
            mode = cfg.mode
            if mode == "auto":
                mode = "exact" if m <= 5 else "truncated"
            rep = direct_two_special((m, n), mode, cfg.precision, cfg.budget)
            detail = (f"v2(tr)={rep.trace_valuation} checked={[(e, str(w)) for e, w in rep.checked_indices]}"
                      f" floor covers l>={rep.bound_covered_from} mode={rep.mode}")
            if rep.precision:
                detail += f" K={rep.precision} retries={rep.retries}"
            if rep.verdict == PROVEN:
                return PASS, detail
            if rep.verdict == INCONCLUSIVE:
                return SKIP, detail + " " + "; ".join(rep.notes)
            return FAIL, detail + " refuted"
        items.append(_timed("base27", f"P({m},{n})", case))
    return items


def run_table1(cfg) -> list[Item]:
    items = []
    for m, p, v in KNOWN_TRACE_VALUATIONS:
        def row(m=m, p=p, v=v):
            mode = cfg.mode
            if mode == "auto":
                mode = "both" if m <= 6 else "truncated"
            r = compute_row(m, p, mode, cfg.precision, cfg.budget)
            if r.v2_trace is None:
                return SKIP, f"not resolved ({r.status})"
            mark = " exceeds m+p" if r.exceeds else ""
            return (PASS if r.v2_trace == v else FAIL), f"v2={r.v2_trace} expected {v} mode={mode}{mark}"
        items.append(_timed("table1", f"({m},{p})", row))
    return items


RUNNERS = {
    "lemmas": run_lemmas, "contour": run_contour, "traces": run_traces,
    "thm-square": run_thm_square, "prespecial": run_prespecial,
    "special-res": run_special_res, "base27": run_base27, "table1": run_table1,
}


@dataclass
class BatteryConfig:
    mode: str = "auto"
    precision: int | None = None
    budget: int = DEFAULT_BUDGET


def run(scopes=None, cfg: BatteryConfig | None = None, progress=None) -> list[Item]:
    cfg = cfg or BatteryConfig()
    items = []
    for scope in scopes or SCOPES:
        new = RUNNERS[scope](cfg)
        if progress:
            for it in new:
                progress(it)
        items.extend(new)
    return items


def summarize(items: list[Item]) -> dict:
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for it in items:
        counts[it.status] += 1
    return counts
