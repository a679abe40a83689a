import random

import pytest

from misiurewicz.known import KNOWN_TRACE_VALUATIONS
from misiurewicz.multiplier import lambda_power_sums, multiplier_poly, trace_closed_form, trace_mobius
from misiurewicz.orbit import misiurewicz_coeffs
from misiurewicz.poly import IntPoly
from misiurewicz.quotient import QuotientCtx, mod_pow
from misiurewicz.twoadic import (TruncPoly, default_precision, signed, trunc_coeffs_from_power_sums,
                                 trunc_ctx, trunc_mod_pow, trunc_trace, truncate, valuation_of)
from misiurewicz.valuation import AmbiguousValuation, Valuation


def test_truncate_example():
    t = truncate(IntPoly([32, -8, 1]), 4)
    assert t.coeffs == (0, 8, 1) and t.bits == 4


def test_trunc_poly_keeps_precision():
    a, b = truncate(IntPoly([1, 2]), 8), truncate(IntPoly([3]), 9)
    with pytest.raises(ValueError):
        a + b
    assert (a * a).bits == 8
    with pytest.raises(ValueError):
        TruncPoly((256,), 8)


def test_trunc_trace_example():
    ctx = trunc_ctx(IntPoly([2, 1]), 8)
    assert trunc_trace(IntPoly([0, 1]), ctx) == 254
    assert signed(254, 8) == -2


def test_valuation_of():
    assert valuation_of(8, 10) == Valuation.exact(3)
    assert valuation_of(0, 10) == Valuation.at_least(10)
    assert valuation_of(1 << 9, 10) == Valuation.exact(9)


def test_ambiguous_comparison_raises():
    with pytest.raises(AmbiguousValuation):
        Valuation.at_least(5) > Valuation.exact(7)
    assert Valuation.at_least(9) > Valuation.exact(7)
    assert Valuation.infinite() > Valuation.exact(100)
    with pytest.raises(AmbiguousValuation):
        Valuation.infinite() > Valuation.at_least(100)


def test_commutes_with_exact_pipeline():
    K = 32
    exact = trace_mobius((4, 3))
    assert trace_mobius((4, 3), K) == exact % (1 << K)
    assert trace_closed_form(4, 3, K) == trace_closed_form(4, 3) % (1 << K)
    _, sums = lambda_power_sums((4, 3), 5)
    _, tsums = lambda_power_sums((4, 3), 5, K)
    assert tsums == [s % (1 << K) for s in sums]


def test_random_pipelines_commute():
    rng = random.Random(7)
    for _ in range(100):
        K = rng.randint(3, 40)
        d = rng.randint(1, 8)
        g = IntPoly([rng.randint(-50, 50) for _ in range(d)] + [1])
        f = IntPoly([rng.randint(-50, 50) for _ in range(rng.randint(0, 12))])
        e = rng.randint(0, 9)
        ctx = QuotientCtx(g)
        r = mod_pow(ctx.reduce(f), e)
        tctx = trunc_ctx(g, K)
        assert trunc_mod_pow(f, e, tctx).coeffs == truncate(r.poly, K).coeffs
        assert trunc_trace(trunc_mod_pow(f, e, tctx).coeffs, tctx) == r.trace() % (1 << K)


def test_truncated_newton_tracks_precision():
    full = multiplier_poly((3, 3))
    K = 20
    _, sums = lambda_power_sums((3, 3), 6, K)
    top = trunc_coeffs_from_power_sums(sums, K)
    for j, (val, prec) in enumerate(top[1:], start=1):
        assert prec <= K
        if prec:
            assert val == full.coefficient(j) % (1 << prec)


@pytest.mark.parametrize("m,p,v", [r for r in KNOWN_TRACE_VALUATIONS if r[0] <= 8])
def test_default_precision_is_enough(m, p, v):
    K = default_precision(m, p)
    assert K > v
    val = valuation_of(trace_closed_form(m, p, K) if p > 2 else trace_mobius((m, p), K), K)
    assert val == Valuation.exact(v)


def test_truncated_misiurewicz_poly():
    K = 12
    assert misiurewicz_coeffs((5, 3), K) == [x % (1 << K) for x in misiurewicz_coeffs((5, 3))]
