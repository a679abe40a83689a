"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, battery
from .cache import Cache
from .certify import (INCONCLUSIVE, PROVEN, Certificate, Inconclusive, ModeMismatch,
                      certify_nonunit, direct_two_special, inductive_two_special, is_p_special,
                      replay_certificate, res_cyclotomic_check)
from .errors import (BudgetExceeded, HypothesisViolated, NotOddPrime, NotPrime,
                     PreconditionViolated)
from .known import KNOWN_TRACE_VALUATIONS
from .multiplier import multiplier_poly, trace_closed_form, trace_mobius
from .numtheory import is_prime, v2
from .orbit import DEFAULT_BUDGET, MisiurewiczType, misiurewicz_poly
from .poly import IntPoly, pretty
from .report import plot_rows, render
from .vtable import cells, compute_table, default_threads

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    mode: str = "auto"
    precision: int | None = None
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    cache_dir: str | None = None
    format: str = "text"

    def __post_init__(self):
        if self.mode not in ("auto", "exact", "truncated", "both"):
            raise UsageError(f"unknown mode {self.mode}")
        if self.precision is not None and self.precision < 1:
            raise UsageError("precision must be positive")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        threads = args.threads or default_threads()
        cache_dir = args.cache_dir or os.environ.get("MISIUREWICZ_CACHE")
        return cls(args.mode, args.precision, args.budget, threads, cache_dir, args.format)

    def cache(self) -> Cache | None:
        return Cache(self.cache_dir) if self.cache_dir else None


def parse_range(text: str) -> list[int]:
    """"3", "2-10" or "3,5,7-11" -> list of ints."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        try:
            if sep:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
    return out


def _type(m: int, n: int) -> MisiurewiczType:
    try:
        return MisiurewiczType(m, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------------------


def cmd_gen(args, cfg: RunConfig) -> int:
    t = _type(args.m, args.n)
    cache = cfg.cache()
    kind = args.kind
    coeffs = cache.get(kind, t.m, t.n, "full") if cache else None
    if coeffs is None:
        if kind == "G":
            coeffs = list(misiurewicz_poly(t, cfg.budget).coeffs)
        else:
            coeffs = list(multiplier_poly(t, cfg.budget).poly.coeffs)
        if cache:
            cache.put(kind, t.m, t.n, "full", coeffs)
    poly = IntPoly(coeffs, "c" if kind == "G" else "x")
    if cfg.format == "json":
        text = json.dumps({"kind": kind, "m": t.m, "n": t.n, "var": poly.var,
                           "degree": poly.degree, "coeffs": list(poly.coeffs)}) + "\n"
    elif cfg.format == "csv":
        text = "power,coeff\n" + "".join(f"{i},{c}\n" for i, c in enumerate(poly.coeffs))
    else:
        text = pretty(poly) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _vtable_pairs(args) -> list[tuple[int, int]]:
    if args.known:
        return [(m, p) for m, p, _ in KNOWN_TRACE_VALUATIONS]
    if not args.m or not args.p:
        raise UsageError("vtable needs --m and --p ranges (or --known)")
    pairs = cells(parse_range(args.m), parse_range(args.p))
    for m, _ in pairs:
        _type(m, 1)
    return pairs


def cmd_vtable(args, cfg: RunConfig) -> int:
    pairs = _vtable_pairs(args)
    mode = "truncated" if cfg.mode == "auto" else cfg.mode
    rows = compute_table(pairs, mode, cfg.precision, cfg.budget, cfg.threads)
    _emit(render(rows, cfg.format, args.timings), args.out)
    plot = args.plot
    if plot is None and args.out and not args.no_plot:
        plot = str(Path(args.out).with_suffix(".png"))
    if plot:
        plot_rows(rows, plot)
        print(f"plot written to {plot}", file=sys.stderr)
    if any(r.status != "ok" for r in rows):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_trace(args, cfg: RunConfig) -> int:
    t = _type(args.m, args.n)
    method = args.method
    if method == "auto":
        method = "closed" if t.n >= 3 and is_prime(t.n) else "mobius"
    bits = None
    if cfg.mode == "truncated":
        from .twoadic import default_precision
        bits = cfg.precision or default_precision(t.m, t.n)
    if method == "closed":
        value = trace_closed_form(t.m, t.n, bits)
    elif method == "mobius":
        value = trace_mobius(t, bits, cfg.budget)
    else:
        if bits is not None:
            raise UsageError("the full construction runs in exact mode only")
        value = multiplier_poly(t, cfg.budget).trace
    if bits is None:
        val = v2(value)
        shown = str(value)
    else:
        from .twoadic import signed, valuation_of
        val = str(valuation_of(value, bits))
        shown = f"{signed(value, bits)} (mod 2^{bits})"
    doc = {"m": t.m, "n": t.n, "method": method, "trace": shown, "v2": val, "precision": bits}
    if cfg.format == "json":
        text = json.dumps(doc) + "\n"
    elif cfg.format == "csv":
        text = ",".join(doc) + "\n" + ",".join(str(v) for v in doc.values()) + "\n"
    else:
        text = f"tr P{t} = {shown}\nv2 = {val}  [{method}]\n"
    _emit(text, args.out)
    return EXIT_OK


def _report_text(rep) -> str:
    lines = [f"P{rep.type}: {rep.verdict}  (method {rep.method}, mode {rep.mode})",
             f"  v2(trace) = {rep.trace_valuation}"]
    if rep.checked_indices:
        lines.append("  checked: " + ", ".join(f"l={e}: v2={w}" for e, w in rep.checked_indices))
    if rep.bound_covered_from:
        lines.append(f"  indices l >= {rep.bound_covered_from} covered by v2(b) >= n*l+1")
    if rep.precision:
        lines.append(f"  precision 2^{rep.precision}, retries {rep.retries}")
    for s in rep.steps:
        lines.append(f"  step m={s['m']}: v2(tr)={s['trace_valuation']} via {s['how']}, {s['by']}")
    for n in rep.notes:
        lines.append(f"  note: {n}")
    return "\n".join(lines) + "\n"


def cmd_check_special(args, cfg: RunConfig) -> int:
    t = _type(args.m, args.n)
    if args.inductive:
        mode = "truncated" if cfg.mode == "auto" else cfg.mode
        rep = inductive_two_special(t.m, t.n, mode, cfg.budget)
    else:
        rep = direct_two_special(t, cfg.mode, cfg.precision, cfg.budget)
    if cfg.format == "json":
        text = json.dumps(rep.to_json(), indent=2) + "\n"
    else:
        text = _report_text(rep)
    _emit(text, args.out)
    if rep.verdict == PROVEN:
        return EXIT_OK
    return EXIT_INCONCLUSIVE if rep.verdict == INCONCLUSIVE else EXIT_FAIL


def cmd_res_check(args, cfg: RunConfig) -> int:
    t = _type(args.m, args.n)
    P = multiplier_poly(t, cfg.budget).poly
    rows = res_cyclotomic_check(P, args.ell_max)
    special = is_p_special(P, 2).holds
    if cfg.format == "json":
        text = json.dumps({"m": t.m, "n": t.n, "two_special": special,
                           "rows": [{"ell": e, "abs_res": r, "flagged": f} for e, r, f in rows]}) + "\n"
    elif cfg.format == "csv":
        text = "ell,abs_res,flagged\n" + "".join(f"{e},{r},{int(f)}\n" for e, r, f in rows)
    else:
        text = f"P{t}: 2-special = {special}\n" + "".join(
            f"  l={e:<3} |Res| = {r}{'  <= 1' if f else ''}\n" for e, r, f in rows)
    _emit(text, args.out)
    # a flagged resultant for a 2-special P would be a contradiction
    return EXIT_FAIL if special and any(f for _, _, f in rows) else EXIT_OK


def cmd_verify_paper(args, cfg: RunConfig) -> int:
    scopes = args.scope or list(battery.SCOPES)
    for s in scopes:
        if s not in battery.SCOPES:
            raise UsageError(f"unknown scope {s!r}; choose from {', '.join(battery.SCOPES)}")
    bcfg = battery.BatteryConfig(cfg.mode, cfg.precision, cfg.budget)
    progress = None
    if cfg.format == "text" and not args.out:
        def progress(it):
            print(f"[{it.status:^12}] {it.scope:<11} {it.name:<32} {it.seconds:8.3f}s  {it.detail}",
                  flush=True)
    items = battery.run(scopes, bcfg, progress)
    counts = battery.summarize(items)
    if cfg.format == "json":
        text = json.dumps({"summary": counts, "items": [i.to_json() for i in items]}, indent=2) + "\n"
    elif cfg.format == "csv":
        text = "scope,name,status,seconds,detail\n" + "".join(
            f"{i.scope},\"{i.name}\",{i.status},{i.seconds},\"{i.detail}\"\n" for i in items)
    else:
        text = "" if progress else "".join(f"[{i.status}] {i.scope} {i.name}: {i.detail}\n"
                                           for i in items)
        text += f"{counts['pass']} passed, {counts['fail']} failed, {counts['inconclusive']} inconclusive\n"
    _emit(text, args.out)
    if counts["fail"]:
        return EXIT_FAIL
    return EXIT_INCONCLUSIVE if counts["inconclusive"] else EXIT_OK


def cmd_certify(args, cfg: RunConfig) -> int:
    if args.replay:
        cert = Certificate.loads(Path(args.replay).read_text())
        results = replay_certificate(cert)
        for fact, again, ok in results:
            print(f"[{'ok' if ok else 'MISMATCH'}] {fact['kind']} {fact['params']}: "
                  f"{fact['value']} -> {again}")
        return EXIT_OK if all(ok for *_, ok in results) else EXIT_FAIL
    if args.m is None or args.n is None or args.p is None:
        raise UsageError("certify needs M N P (or --replay FILE)")
    mode = "truncated" if cfg.mode == "auto" else cfg.mode
    cert = certify_nonunit(args.m, args.n, args.p, mode, cfg.budget)
    text = cert.dumps()
    if args.out:
        Path(args.out).write_text(text)
        print(cert.conclusion)
        print("assuming: " + "; ".join(cert.assumed_hypotheses))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cache(args, cfg: RunConfig) -> int:
    cache = Cache(cfg.cache_dir)
    if args.action == "gc":
        removed = cache.gc()
        print(f"removed {len(removed)} stale entries from {cache.root}")
    else:
        entries = cache.list()
        if cfg.format == "json":
            print(json.dumps(entries, indent=2))
        else:
            for e in entries:
                tag = " (stale)" if e["stale"] else ""
                print(f"{e['kind']} ({e['m']},{e['n']}) {e['provenance']} {e['bytes']}B{tag}")
            print(f"{len(entries)} entries in {cache.root}")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["auto", "exact", "truncated", "both"], default="auto",
                        help="exact integers, coefficients mod 2^K, or both with a cross-check")
    common.add_argument("--precision", type=int, default=None, metavar="K",
                        help="override the 2-adic precision in bits")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest polynomial degree to construct (default %(default)s)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default $MISIUREWICZ_THREADS or CPU count)")
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--cache-dir", default=None,
                        help="polynomial cache directory (default $MISIUREWICZ_CACHE)")

    ap = argparse.ArgumentParser(prog="misiurewicz",
                                 description="Misiurewicz and multiplier polynomials, "
                                             "trace valuations and 2-special certificates")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print G_{m,n} or P_{m,n}")
    p.add_argument("kind", choices=["G", "P"])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("vtable", parents=[common], help="table of v2(tr P_{m,p}) against m+p")
    p.add_argument("--m", help="preperiods, e.g. 2-10")
    p.add_argument("--p", help="candidate periods, non-primes dropped, e.g. 2-50")
    p.add_argument("--known", action="store_true", help="use the built-in reference (m,p) list")
    p.add_argument("--plot", default=None, help="PNG path for the scatter plot")
    p.add_argument("--no-plot", action="store_true", help="skip the plot written next to --out")
    p.add_argument("--timings", action="store_true", help="include per-cell seconds")
    p.set_defaults(func=cmd_vtable)

    p = sub.add_parser("trace", parents=[common], help="tr P_{m,n} and its 2-adic valuation")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["auto", "closed", "mobius", "full"], default="auto")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("check-special", parents=[common], help="is P_{m,n} 2-special?")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--inductive", action="store_true", help="climb m instead of checking directly")
    p.set_defaults(func=cmd_check_special)

    p = sub.add_parser("res-check", parents=[common], help="|Res(P_{m,n}, Phi_l)| for l <= L")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--ell-max", type=int, default=20)
    p.set_defaults(func=cmd_res_check)

    p = sub.add_parser("verify-paper", parents=[common], help="run the verification battery")
    p.add_argument("--scope", action="append", help=f"one of {', '.join(battery.SCOPES)}; repeatable")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("certify", parents=[common],
                       help="certificate that G_{m,p}(c0) is not a unit at roots of G_{m,n}")
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("p", type=int, nargs="?")
    p.add_argument("--replay", metavar="FILE", help="re-execute the facts of a certificate")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("cache", parents=[common], help="inspect or clean the cache")
    p.add_argument("action", choices=["list", "gc"])
    p.set_defaults(func=cmd_cache)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(args, cfg)
    except (UsageError, HypothesisViolated, NotPrime, NotOddPrime, PreconditionViolated,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, Inconclusive) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (ModeMismatch, AssertionError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
