"""2-specialness of multiplier polynomials and non-unit certificates.

A monic P = x^k + A_{k-1} x^{k-1} + ... + A_0 is p-special when
v_p(A_{k-1}) > v_p(2) and v_p(A_j) > v_p(A_{k-1}) for all j < k-1.  Such a P
has |Res(P, Phi_l)| > 1 for every cyclotomic Phi_l.

For multiplier polynomials every coefficient obeys v2(b_{k-l}) >= n*l + 1, so
once the trace valuation v is known only the indices l with n*l + 1 <= v need
an explicit look; everything deeper is covered by that floor.  The inductive
route climbs m using the square-coefficient relation between P_{m,n} and
P_{m+1,n}, and falls back to a direct check wherever the inequality that
makes the induction work fails.
"""

from __future__ import annotations

import itertools
import json
import platform
import time
from dataclasses import asdict, dataclass, field

from . import __version__
from .errors import BudgetExceeded, HypothesisViolated, NotPrime
from .multiplier import (MultiplierPoly, lambda_power_sums, leading_coeffs, multiplier_poly,
                         trace_closed_form, trace_mobius)
from .numtheory import cyclotomic, is_prime, vp
from .orbit import (DEFAULT_BUDGET, MisiurewiczType, _as_type, misiurewicz_degree, orbit_derivative,
                    orbit_poly)
from .poly import IntPoly, coeffs_from_power_sums, resultant
from .quotient import T_residue, T_sum
from .twoadic import MAX_RETRIES, default_precision, trunc_coeffs_from_power_sums
from .valuation import AmbiguousValuation, Valuation, valuation_of

PROVEN, REFUTED, INCONCLUSIVE = "proven", "refuted", "inconclusive"
PRIME_LIMIT = 1024
# direct checks run exactly up to this degree of G when mode is "auto"
EXACT_AUTO_LIMIT = 4096
CERTIFICATE_SCHEMA = "misiurewicz-certificate/1"


class ModeMismatch(AssertionError):
    """Exact and truncated pipelines disagreed."""


class Inconclusive(RuntimeError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


# -- p-special test ---------------------------------------------------------------


@dataclass
class SpecialTest:
    holds: bool
    p: int
    second: Valuation
    failing_index: int | None = None  # j with v_p(A_j) <= v_p(A_{k-1})
    failing_valuation: Valuation | None = None

    def __bool__(self):
        return self.holds


def is_p_special(P: IntPoly, p: int) -> SpecialTest:
    if not P.is_monic() or P.degree < 1:
        raise ValueError("p-special is defined for monic polynomials of degree >= 1")
    k = P.degree
    second = Valuation.of_int(P[k - 1], p)
    if second.kind == "exact" and second.value <= vp(2, p):
        return SpecialTest(False, p, second, k - 1, second)
    for j in range(k - 1):
        if P[j] == 0:
            continue
        vj = Valuation.of_int(P[j], p)
        if not vj > second:
            return SpecialTest(False, p, second, j, vj)
    return SpecialTest(True, p, second)


def res_cyclotomic_check(P: IntPoly, ell_max: int) -> list[tuple[int, int, bool]]:
    """(l, |Res(P, Phi_l)|, flagged) for l = 1..ell_max; flagged when <= 1."""
    out = []
    for ell in range(1, ell_max + 1):
        r = abs(resultant(P.with_var("x"), cyclotomic(ell)))
        out.append((ell, r, r <= 1))
    return out


# -- squares and the next preperiod---------------------------------------------------------


def square_qualifying(m: int, n: int) -> int:
    """Largest i with floor(n*i/2) <= 2^(m-2) - 2 (0 when none)."""
    cap = (1 << (m - 2)) - 2
    if cap < 0:
        return 0
    i = 0
    while (n * (i + 1)) // 2 <= cap:
        i += 1
    return i


def _top_of_square(top: tuple, count: int) -> list[int]:
    """Coefficients 1..count below the top of P^2, from those of P."""
    series = [1] + list(top[:count])
    series += [0] * (count + 1 - len(series))
    return [sum(series[a] * series[i - a] for a in range(i + 1)) for i in range(1, count + 1)]


@dataclass
class SquareMatch:
    m: int
    n: int
    qualifying: int
    rows: list  # (i, b_{k-i}, c_{l-i}, equal)

    @property
    def ok(self) -> bool:
        return all(r[3] for r in self.rows)


def verify_thm_square(m: int, n: int, budget: int = DEFAULT_BUDGET,
                      full_limit: int = 256) -> SquareMatch:
    """Compare the top coefficients of P_{m,n}^2 and P_{m+1,n} on every index
    i >= 1 with floor(n i / 2) <= 2^(m-2) - 2."""
    imax = square_qualifying(m, n)
    if imax == 0:
        return SquareMatch(m, n, 0, [])
    k = misiurewicz_degree(m, n)
    ell = misiurewicz_degree(m + 1, n)
    count = min(imax, ell, 2 * k)

    def get(t, deg):
        if deg <= full_limit:
            return multiplier_poly(t, budget)
        return leading_coeffs(t, min(count, deg), budget)

    small, big = get((m, n), k), get((m + 1, n), ell)
    sq = _top_of_square(small.top, count)
    rows = [(i, sq[i - 1], big.coefficient(i), sq[i - 1] == big.coefficient(i))
            for i in range(1, count + 1)]
    return SquareMatch(m, n, imax, rows)


# -- 2-special verification -----------------------------------------------------------


@dataclass
class TwoSpecialReport:
    type: MisiurewiczType
    verdict: str
    trace_valuation: Valuation | None
    checked_indices: list = field(default_factory=list)  # (l, Valuation)
    bound_covered_from: int | None = None
    method: str = "direct"
    mode: str = "exact"
    precision: int | None = None
    retries: int = 0
    steps: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN

    def to_json(self) -> dict:
        d = asdict(self)
        d["type"] = [self.type.m, self.type.n]
        d["trace_valuation"] = None if self.trace_valuation is None else str(self.trace_valuation)
        d["checked_indices"] = [[ell, str(v)] for ell, v in self.checked_indices]
        return d


def floor_cover_index(n: int, v: int) -> int:
    """Smallest l >= 2 with n*l + 1 > v."""
    ell = 2
    while n * ell + 1 <= v:
        ell += 1
    return ell


def _direct_exact(t: MisiurewiczType, budget: int) -> TwoSpecialReport:
    deg = misiurewicz_degree(t.m, t.n)
    _, sums = lambda_power_sums(t, 1, None, budget)
    tr = sums[0]
    v = Valuation.of_int(tr)
    if not v.is_exact:
        return TwoSpecialReport(t, INCONCLUSIVE, v, notes=["trace is zero"])
    if v.value <= 1:
        return TwoSpecialReport(t, REFUTED, v, notes=["v2(trace) <= v2(2)"])
    star = floor_cover_index(t.n, v.value)
    need = min(star - 1, deg)
    top = [1, -tr]
    if need >= 2:
        _, sums = lambda_power_sums(t, need, None, budget)
        top = coeffs_from_power_sums(sums, deg)
    checked = []
    verdict = PROVEN
    for ell in range(2, need + 1):
        w = Valuation.of_int(top[ell])
        checked.append((ell, w))
        if not w > v:
            verdict = REFUTED
    return TwoSpecialReport(t, verdict, v, checked, min(star, deg + 1), mode="exact")


def _direct_truncated(t: MisiurewiczType, bits: int, budget: int) -> TwoSpecialReport:
    deg = misiurewicz_degree(t.m, t.n)
    for attempt in range(MAX_RETRIES + 1):
        try:
            rep = _direct_truncated_once(t, bits, deg, budget)
            rep.retries = attempt
            return rep
        except AmbiguousValuation:
            bits *= 2
    return TwoSpecialReport(t, INCONCLUSIVE, None, mode="truncated", precision=bits // 2,
                            retries=MAX_RETRIES,
                            notes=[f"valuations not resolved below 2^{bits // 2}"])


def _direct_truncated_once(t, bits, deg, budget) -> TwoSpecialReport:
    _, sums = lambda_power_sums(t, 1, bits, budget)
    v = valuation_of(sums[0], bits)
    if not v.is_exact:
        raise AmbiguousValuation(f"trace of P{t} vanishes mod 2^{bits}")
    if v.value <= 1:
        return TwoSpecialReport(t, REFUTED, v, mode="truncated", precision=bits)
    star = floor_cover_index(t.n, v.value)
    need = min(star - 1, deg)
    checked = []
    verdict = PROVEN
    if need >= 2:
        _, sums = lambda_power_sums(t, need, bits, budget)
        top = trunc_coeffs_from_power_sums(sums, bits)
        for ell in range(2, need + 1):
            val, prec = top[ell]
            w = valuation_of(val, prec) if prec else Valuation.at_least(0)
            checked.append((ell, w))
            if not w > v:  # may raise AmbiguousValuation -> more precision
                verdict = REFUTED
    return TwoSpecialReport(t, verdict, v, checked, min(star, deg + 1),
                            mode="truncated", precision=bits)


def direct_two_special(t, mode: str = "auto", bits: int | None = None,
                       budget: int = DEFAULT_BUDGET) -> TwoSpecialReport:
    """Check 2-specialness of P_{m,n} from its trace and the few coefficients
    the 2-adic floor does not already cover."""
    t = _as_type(t)
    deg = misiurewicz_degree(t.m, t.n)
    if deg > budget:
        return TwoSpecialReport(t, INCONCLUSIVE, None, mode=mode,
                                notes=[f"deg G{t} = {deg} exceeds budget {budget}"])
    if mode == "auto":
        mode = "exact" if deg <= EXACT_AUTO_LIMIT else "truncated"
    K = bits or default_precision(t.m, t.n)
    try:
        if mode == "exact":
            return _direct_exact(t, budget)
        if mode == "truncated":
            return _direct_truncated(t, K, budget)
        if mode == "both":
            ex = _direct_exact(t, budget)
            tr = _direct_truncated(t, K, budget)
            _compare_modes(ex, tr)
            ex.mode = "both"
            ex.precision = tr.precision
            return ex
    except BudgetExceeded as exc:
        return TwoSpecialReport(t, INCONCLUSIVE, None, mode=mode, notes=[str(exc)])
    raise ValueError(f"unknown mode {mode!r}")


def _compare_modes(ex: TwoSpecialReport, tr: TwoSpecialReport):
    if tr.verdict == INCONCLUSIVE:
        return
    if ex.verdict != tr.verdict or ex.trace_valuation != tr.trace_valuation:
        raise ModeMismatch(f"P{ex.type}: exact {ex.verdict}/{ex.trace_valuation} vs "
                           f"truncated {tr.verdict}/{tr.trace_valuation}")
    for (l1, w1), (l2, w2) in zip(ex.checked_indices, tr.checked_indices):
        if w2.is_exact and w1 != w2:
            raise ModeMismatch(f"P{ex.type}: coefficient {l1} valuation {w1} vs {w2}")


def trace_valuation(m: int, n: int, mode: str = "truncated", bits: int | None = None,
                    budget: int = DEFAULT_BUDGET) -> tuple[Valuation, str, int | None]:
    """v2(tr(P_{m,n})) with the cheapest available formula.

    Returns (valuation, method, precision).
    """
    odd_prime = n >= 3 and is_prime(n)
    method = "closed_form" if odd_prime else "mobius"

    def compute(b):
        if odd_prime:
            return trace_closed_form(m, n, b)
        return trace_mobius((m, n), b, budget)

    if mode == "exact":
        return Valuation.of_int(compute(None)), method, None
    K = bits or default_precision(m, n)
    for _ in range(MAX_RETRIES + 1):
        v = valuation_of(compute(K), K)
        if v.is_exact:
            if mode == "both":
                ve = Valuation.of_int(compute(None))
                if ve != v:
                    raise ModeMismatch(f"v2(tr P({m},{n})): exact {ve} vs truncated {v}")
            return v, method, K
        K *= 2
    return v, method, K // 2


def _half_bound(m: int, n: int) -> tuple[int, int]:
    """Twice m + 3n/2, and twice max(2n, 2^(m-2) - 2) for the step m-1 -> m."""
    return 2 * m + 3 * n, 2 * max(2 * n, (1 << (m - 2)) - 2)


def step_needs_direct(m: int, n: int) -> bool:
    """True when the step to P_{m,n} from P_{m-1,n} is not covered by the
    induction, i.e. m + 3n/2 > max(2n, 2^(m-2) - 2)."""
    twice_hyp, twice_cap = _half_bound(m, n)
    return twice_hyp > twice_cap


def base_case_types(m_max: int = 12) -> list[tuple[int, int]]:
    """Every (m, n), 3 <= m <= m_max, whose step from m-1 needs a direct check.

    Failure needs m + 3n/2 > 2n, i.e. n < 2m, so that range is exhaustive.
    """
    return [(m, n) for m in range(3, m_max + 1) for n in range(1, 2 * m)
            if step_needs_direct(m, n)]


def inductive_two_special(m_target: int, n: int, mode: str = "truncated",
                          budget: int = DEFAULT_BUDGET, spot_check: bool = True) -> TwoSpecialReport:
    """Establish 2-specialness of P_{m_target,n} by climbing m from 2."""
    rep = _climb(m_target, n, mode, budget, spot_check)
    rep.mode = mode
    return rep


def _climb(m_target, n, mode, budget, spot_check) -> TwoSpecialReport:
    t = MisiurewiczType(m_target, n)
    odd_prime = n >= 3 and is_prime(n)
    steps: list[dict] = []

    # base level m = 2: the floor alone settles it when n*2 + 1 > v2(tr)
    v, how, _ = trace_valuation(2, n, mode if mode != "auto" else "truncated", budget=budget)
    if v.is_exact and v.value > 1 and floor_cover_index(n, v.value) == 2:
        steps.append({"m": 2, "trace_valuation": v.value, "how": how,
                      "covered_from": 2, "by": "floor"})
    else:
        base = direct_two_special((2, n), "exact" if mode == "truncated" else mode, budget=budget)
        if not base.proven:
            return _finish(t, base.verdict, base.trace_valuation, steps,
                           [f"direct check of P(2,{n}): {base.verdict}"] + base.notes)
        v = base.trace_valuation
        steps.append({"m": 2, "trace_valuation": v.value, "how": "direct",
                      "checked": [[e, str(w)] for e, w in base.checked_indices],
                      "covered_from": base.bound_covered_from, "by": "direct"})
    if m_target == 2:
        return _finish(t, PROVEN, v, steps, [], covered=floor_cover_index(n, v.value))

    spot_done = False
    for m in range(2, m_target):
        nxt = m + 1
        doubling = m >= 11 and n // 2 <= (1 << (m - 2)) - 2
        if doubling:
            v_next = Valuation.exact(v.value + 1)
            how = "doubling"
            if spot_check and not spot_done and odd_prime:
                check, _, _ = trace_valuation(nxt, n, "truncated")
                spot_done = True
                if check != v_next:
                    return _finish(t, REFUTED, check, steps,
                                   [f"doubling spot check failed at m={nxt}: {check} != {v_next}"])
                how = "doubling+spot_check"
        else:
            try:
                v_next, how, _ = trace_valuation(nxt, n, mode, budget=budget)
            except BudgetExceeded as exc:
                return _finish(t, INCONCLUSIVE, None, steps, [str(exc)])
            if not v_next.is_exact:
                return _finish(t, INCONCLUSIVE, v_next, steps,
                               [f"v2(tr P({nxt},{n})) not resolved"])
        twice_v = 2 * v_next.value
        twice_hyp, twice_cap = _half_bound(nxt, n)
        hyp_ok = twice_v <= twice_hyp
        valbound = twice_hyp <= twice_cap
        step = {"m": nxt, "trace_valuation": v_next.value, "how": how,
                "hypothesis": hyp_ok, "valbound": valbound}
        if hyp_ok and valbound:
            step["by"] = "induction"
            step["covered_from"] = floor_cover_index(n, v_next.value)
        else:
            rep = direct_two_special((nxt, n), "auto" if mode == "truncated" else mode, budget=budget)
            step["by"] = "direct"
            step["direct_mode"] = rep.mode
            step["checked"] = [[e, str(w)] for e, w in rep.checked_indices]
            step["covered_from"] = rep.bound_covered_from
            if rep.trace_valuation is not None and rep.trace_valuation != v_next \
                    and rep.trace_valuation.is_exact:
                raise ModeMismatch(f"P({nxt},{n}) trace valuation {rep.trace_valuation} vs {v_next}")
            if not rep.proven:
                steps.append(step)
                return _finish(t, rep.verdict, v_next, steps,
                               [f"direct check of P({nxt},{n}): {rep.verdict}"] + rep.notes)
        steps.append(step)
        v = v_next
    return _finish(t, PROVEN, v, steps, [], covered=floor_cover_index(n, v.value))


def _finish(t, verdict, v, steps, notes, covered=None) -> TwoSpecialReport:
    checked = []
    if steps and steps[-1].get("by") == "direct":
        checked = [(e, _parse_val(w)) for e, w in steps[-1].get("checked", [])]
    return TwoSpecialReport(t, verdict, v, checked, covered, method="induction",
                            steps=steps, notes=notes)


def _parse_val(s: str) -> Valuation:
    if s == "inf":
        return Valuation.infinite()
    if s.startswith(">="):
        return Valuation.at_least(int(s[2:]))
    return Valuation.exact(int(s))


# -- certificates ------------------------------------------------------------------------


@dataclass
class Certificate:
    target: dict
    verdict: str
    conclusion: str
    verified_facts: list
    assumed_hypotheses: list
    tool_version: str = __version__
    schema: str = CERTIFICATE_SCHEMA
    timings: dict = field(default_factory=dict)
    created: str = ""
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        data = json.loads(text)
        if data.get("schema") != CERTIFICATE_SCHEMA:
            raise ValueError(f"unsupported certificate schema {data.get('schema')!r}")
        return cls(**data)


def _facts_from_report(rep: TwoSpecialReport) -> list[dict]:
    n = rep.type.n
    facts = []
    for step in rep.steps:
        m = step["m"]
        how = step["how"]
        facts.append({"kind": "trace_valuation", "params": {"m": m, "n": n, "method": how},
                      "value": step["trace_valuation"]})
        if step["by"] == "direct":
            for ell, w in step.get("checked", []):
                facts.append({"kind": "coefficient_valuation",
                              "params": {"m": m, "n": n, "ell": ell}, "value": w})
        elif step["by"] == "induction":
            facts.append({"kind": "induction_step", "params": {"m": m, "n": n},
                          "value": {"hypothesis": step["hypothesis"], "valbound": step["valbound"]}})
        facts.append({"kind": "floor_cover", "params": {"m": m, "n": n,
                                                        "trace_valuation": step["trace_valuation"]},
                      "value": step["covered_from"]})
    return facts


def certify_nonunit(m: int, n: int, p: int, mode: str = "truncated",
                    budget: int = DEFAULT_BUDGET, res_degree_limit: int = 64) -> Certificate:
    """Certificate that G_{m,p}(c0) is not an algebraic unit for roots c0 of
    G_{m,n}, conditional on irreducibility of G_{m,p} and G_{m,n}."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 2:
        raise HypothesisViolated("m>=2", f"m = {m}")
    if n % p:
        raise HypothesisViolated("p|n", f"{p} does not divide {n}")
    if n == p:
        raise HypothesisViolated("n!=p", "n must be a proper multiple of p")
    start = time.perf_counter()
    rep = inductive_two_special(m, p, mode, budget)
    elapsed = time.perf_counter() - start
    if not rep.proven:
        raise Inconclusive(f"P({m},{p}) not shown 2-special: {rep.verdict}", rep)
    facts = _facts_from_report(rep)
    notes = []
    deg = misiurewicz_degree(m, p)
    if deg <= res_degree_limit:
        P = multiplier_poly((m, p), budget).poly
        r = abs(resultant(P, cyclotomic(n // p)))
        facts.append({"kind": "resultant_cyclotomic", "params": {"m": m, "n": p, "ell": n // p},
                      "value": r})
        if r <= 1:
            raise AssertionError(f"|Res(P({m},{p}), Phi_{n // p})| = {r} contradicts 2-specialness")
    else:
        notes.append(f"|Res(P({m},{p}), Phi_{n // p})| not evaluated: degree {deg} > {res_degree_limit}")
    if p > PRIME_LIMIT:
        notes.append("outside paper range: p > 1024")
    return Certificate(
        target={"m": m, "n": n, "p": p},
        verdict=PROVEN,
        conclusion=(f"For every root c0 of G_{{{m},{n}}}, G_{{{m},{p}}}(c0) is not an algebraic unit "
                    f"(P_{{{m},{p}}} is 2-special, so |Res(P_{{{m},{p}}}, Phi_{{{n // p}}})| > 1)."),
        verified_facts=facts,
        assumed_hypotheses=[f"G_{{{m},{p}}} is irreducible over Q",
                            f"G_{{{m},{n}}} is irreducible over Q"],
        timings={"two_special_seconds": round(elapsed, 4)},
        created=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        notes=notes + [f"python {platform.python_version()}"],
    )


def replay_fact(fact: dict):
    """Recompute a single verified fact; returns the recomputed value."""
    kind, prm = fact["kind"], fact["params"]
    if kind == "trace_valuation":
        m, n = prm["m"], prm["n"]
        if m == 2 and n >= 3 and is_prime(n):
            return Valuation.of_int(trace_closed_form(2, n)).value
        v, _, _ = trace_valuation(m, n, "truncated")
        return v.value
    if kind == "coefficient_valuation":
        rep = direct_two_special((prm["m"], prm["n"]))
        for ell, w in rep.checked_indices:
            if ell == prm["ell"]:
                return str(w)
        return None
    if kind == "induction_step":
        m, n = prm["m"], prm["n"]
        v, _, _ = trace_valuation(m, n, "truncated")
        twice_hyp, twice_cap = _half_bound(m, n)
        return {"hypothesis": 2 * v.value <= twice_hyp, "valbound": twice_hyp <= twice_cap}
    if kind == "floor_cover":
        return floor_cover_index(prm["n"], prm["trace_valuation"])
    if kind == "resultant_cyclotomic":
        P = multiplier_poly((prm["m"], prm["n"])).poly
        return abs(resultant(P, cyclotomic(prm["ell"])))
    raise ValueError(f"unknown fact kind {kind!r}")


def replay_certificate(cert: Certificate) -> list[tuple[dict, object, bool]]:
    out = []
    for fact in cert.verified_facts:
        again = replay_fact(fact)
        out.append((fact, again, again == fact["value"]))
    return out


# -- identity battery ------------------------------------------------------------------------


@dataclass
class IdentityCheck:
    identity: str
    params: dict
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass
class IdentityReport:
    items: list

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    def failures(self) -> list:
        return [i for i in self.items if not i.ok]


def _prod(polys, var="c") -> IntPoly:
    acc = IntPoly([1], var)
    for p in polys:
        acc = acc * p
    return acc


def check_simpleprod(ell: int, s: int) -> IdentityCheck:
    a = orbit_poly
    c = IntPoly([0, 1])
    lhs = a(ell) * _prod(a(j) for j in range(ell, s + 1))
    rhs = a(s + 1) - c * sum((_prod(a(j) for j in range(i, s + 1))
                              for i in range(ell + 1, s + 2)), IntPoly([]))
    return IdentityCheck("simpleprod", {"ell": ell, "s": s}, lhs, rhs)


def check_prodzero(m: int, n: int, ell: int, r_deg: int) -> IdentityCheck:
    """With R = c^r_deg, H = R a_l prod_{j=l}^{m+n-2} a_j reduces mod
    (a_{m+n-1}+a_{m-1})/c to something vanishing at 0."""
    a = orbit_poly
    g = (a(m + n - 1) + a(m - 1)).shift(-1)
    H = IntPoly.monomial(r_deg) * a(ell) * _prod(a(j) for j in range(ell, m + n - 1))
    return IdentityCheck("prodzero", {"m": m, "n": n, "ell": ell, "deg_R": r_deg}, 0, (H % g)[0])


def check_multiply_by_ck(m: int, n: int, subset: tuple, k: int) -> IdentityCheck:
    a = orbit_poly
    g = a(m + n - 1) + a(m - 1)
    f = IntPoly.monomial(k) * _prod(a(j) for j in subset)
    return IdentityCheck("multiply_by_c^k", {"m": m, "n": n, "S": list(subset), "k": k}, 0, T_sum(f, g))


def check_whole_product(m: int, n: int, k: int) -> IdentityCheck:
    a = orbit_poly
    g = a(m + n - 1) + a(m - 1)
    lhs = T_sum(IntPoly.monomial(k) * _prod(a(j) for j in range(m - 1, m + n - 1)), g)
    rhs = T_sum(IntPoly.monomial(k), g)
    return IdentityCheck("whole_product", {"m": m, "n": n, "k": k}, (1 - (1 << n)) * rhs, (1 << n) * lhs)


def orbit_product_sum_value(m: int, n: int) -> int:
    return 2 - (1 << (n + 1)) if m == 2 else (1 << (m - 2)) - (1 << (m + n - 2))


def check_orbit_product_sum(m: int, n: int, use_residue: bool = False) -> IdentityCheck:
    a = orbit_poly
    g = a(m + n - 1) + a(m - 1)
    f = _prod(a(i) for i in range(m - 1, m + n - 1))
    got = T_residue(f, g) if use_residue else T_sum(f, g)
    return IdentityCheck("orbit_product_sum", {"m": m, "n": n, "residue_formula": use_residue},
                     orbit_product_sum_value(m, n), got)


def check_derivative_recursion(r: int) -> IdentityCheck:
    return IdentityCheck("derivative_recursion", {"r": r}, orbit_poly(r).derivative(), orbit_derivative(r))


def verify_lemma_suite(simpleprod_max: int = 8,
                       ck_params=((4, 2), (4, 3), (5, 2)),
                       whole_params=((4, 1), (4, 2), (5, 2)),
                       product_ms=(2, 3, 4), product_ns=(1, 2, 3),
                       prodzero_params=((3, 2), (4, 2), (4, 3))) -> IdentityReport:
    items = []
    for s in range(1, simpleprod_max):
        for ell in range(1, s + 2):
            items.append(check_simpleprod(ell, s))
    for m, n in ck_params:
        idx = list(range(m - 1, m + n - 1))
        for size in range(1, len(idx)):
            for subset in itertools.combinations(idx, size):
                for k in range(0, (1 << (m - 2)) - 1):
                    items.append(check_multiply_by_ck(m, n, subset, k))
    for m, n in whole_params:
        for k in range(1, (1 << (m - 2)) - 1):
            items.append(check_whole_product(m, n, k))
    for m in product_ms:
        for n in product_ns:
            items.append(check_orbit_product_sum(m, n))
            items.append(check_orbit_product_sum(m, n, use_residue=True))
    for m, n in prodzero_params:
        for ell in range(1, m + n):
            cap = min((1 << (m + n - 2)) - (1 << (m - 2)) - 2, (1 << ell) - 3)
            for r in range(0, cap + 1):
                items.append(check_prodzero(m, n, ell, r))
    for r in range(1, 9):
        items.append(check_derivative_recursion(r))
    return IdentityReport(items)
