import json

import pytest

from misiurewicz.battery import small_types
from misiurewicz.certify import (INCONCLUSIVE, PROVEN, REFUTED, Certificate, base_case_types,
                                 certify_nonunit, direct_two_special, floor_cover_index,
                                 inductive_two_special, is_p_special, replay_certificate,
                                 res_cyclotomic_check, square_qualifying, verify_lemma_suite,
                                 verify_thm_square)
from misiurewicz.errors import HypothesisViolated, NotPrime
from misiurewicz.multiplier import multiplier_poly
from misiurewicz.orbit import misiurewicz_degree
from misiurewicz.poly import IntPoly


def X(*cs):
    return IntPoly(cs, "x")


def test_p_special_examples():
    assert is_p_special(X(32, -8, 1), 2)
    t = is_p_special(X(4, 2, 1), 2)
    assert not t and t.failing_index == 1
    assert is_p_special(X(8, 4, 1), 2)


def test_p_special_zero_coefficients_count_as_infinite():
    # x^2 + 4x: A_0 = 0 has infinite valuation
    assert is_p_special(X(0, 4, 1), 2)
    # odd p uses v_p(2) = 0
    assert is_p_special(X(9, 3, 1), 3)
    assert not is_p_special(X(3, 3, 1), 3)


def test_p_special_needs_monic():
    with pytest.raises(ValueError):
        is_p_special(X(1, 2), 2)


def test_res_cyclotomic_examples():
    rows = res_cyclotomic_check(X(32, -8, 1), 2)
    assert rows == [(1, 25, False), (2, 41, False)]
    assert res_cyclotomic_check(X(-1, 1), 1) == [(1, 0, True)]


def test_thm_square_examples():
    r = verify_thm_square(4, 1)
    assert r.qualifying == 5 and r.ok and len(r.rows) == 5
    r = verify_thm_square(4, 2)
    assert r.qualifying == 2 and r.ok
    r = verify_thm_square(3, 3)
    assert r.qualifying == 0 and r.rows == [] and r.ok


@pytest.mark.parametrize("m,n", [(m, n) for m, n in small_types()
                                 if misiurewicz_degree(m + 1, n) <= 64])
def test_thm_square_small(m, n):
    assert verify_thm_square(m, n).ok


def test_square_qualifying():
    assert square_qualifying(4, 1) == 5
    assert square_qualifying(5, 3) == 4
    assert square_qualifying(2, 1) == 0


def _check_report_invariant(rep):
    v = rep.trace_valuation.value
    assert rep.trace_valuation.is_exact and v > 1
    star = rep.bound_covered_from
    deg = misiurewicz_degree(rep.type.m, rep.type.n)
    assert [e for e, _ in rep.checked_indices] == list(range(2, min(star, deg + 1)))
    assert all(w > rep.trace_valuation for _, w in rep.checked_indices)
    assert star > deg or rep.type.n * star + 1 > v


@pytest.mark.parametrize("t", small_types())
def test_direct_agrees_with_definition(t):
    P = multiplier_poly(t).poly
    rep = direct_two_special(t, "both")
    assert rep.verdict in (PROVEN, REFUTED)
    assert (rep.verdict == PROVEN) == bool(is_p_special(P, 2))
    if rep.verdict == PROVEN:
        _check_report_invariant(rep)
        assert not any(flag for *_, flag in res_cyclotomic_check(P, 20))


def test_direct_checks_some_indices():
    rep = direct_two_special((5, 1), "exact")
    assert [e for e, _ in rep.checked_indices] == [2, 3]
    assert rep.bound_covered_from == 4


def test_direct_truncated_records_precision():
    rep = direct_two_special((5, 2), "truncated")
    assert rep.verdict == PROVEN and rep.precision and rep.retries == 0
    _check_report_invariant(rep)


def test_direct_budget_is_inconclusive():
    rep = direct_two_special((6, 11), budget=1000)
    assert rep.verdict == INCONCLUSIVE and "budget" in rep.notes[0]


def test_floor_cover_index():
    assert floor_cover_index(3, 4) == 2
    assert floor_cover_index(1, 4) == 4


def test_base_case_enumeration():
    cases = base_case_types()
    assert len(cases) == 27
    assert cases[:5] == [(3, n) for n in range(1, 6)]
    assert cases[-6:] == [(6, n) for n in range(6, 12)]


def test_inductive_small_prime():
    rep = inductive_two_special(2, 5)
    assert rep.verdict == PROVEN and rep.trace_valuation.value == 6
    assert rep.steps[0]["by"] == "floor"
    assert inductive_two_special(3, 3).verdict == PROVEN


def test_inductive_doubling_from_eleven():
    rep = inductive_two_special(13, 3)
    assert rep.verdict == PROVEN
    vals = {s["m"]: s["trace_valuation"] for s in rep.steps}
    assert vals[12] == vals[11] + 1 and vals[13] == vals[12] + 1
    assert rep.steps[-2]["how"] == "doubling+spot_check"


def test_certificate_2_6_3():
    cert = certify_nonunit(2, 6, 3)
    assert cert.verdict == PROVEN
    assert any("G_{2,3}" in h and "irreducible" in h for h in cert.assumed_hypotheses)
    assert any("G_{2,6}" in h and "irreducible" in h for h in cert.assumed_hypotheses)
    again = Certificate.loads(cert.dumps())
    assert again == cert
    assert all(ok for *_, ok in replay_certificate(again))
    res = [f for f in cert.verified_facts if f["kind"] == "resultant_cyclotomic"]
    assert res and res[0]["value"] > 1


@pytest.mark.parametrize("args,which", [((3, 3, 3), "n!=p"), ((4, 10, 3), "p|n")])
def test_certificate_hypotheses(args, which):
    with pytest.raises(HypothesisViolated) as info:
        certify_nonunit(*args)
    assert info.value.which == which


def test_certificate_needs_prime():
    with pytest.raises(NotPrime):
        certify_nonunit(3, 8, 4)


def test_certificate_outside_range_is_labelled():
    cert = certify_nonunit(2, 2 * 1031, 1031)
    assert any("outside paper range" in n for n in cert.notes)


def test_certificate_schema_checked():
    doc = json.loads(certify_nonunit(2, 6, 3).dumps())
    doc["schema"] = "old"
    with pytest.raises(ValueError):
        Certificate.loads(json.dumps(doc))


def test_identity_suite_passes():
    rep = verify_lemma_suite()
    assert rep.ok, rep.failures()[:3]
    identities = {i.identity for i in rep.items}
    assert {"simpleprod", "prodzero", "multiply_by_c^k", "whole_product",
            "orbit_product_sum"} <= identities
