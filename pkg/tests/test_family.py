import json
import math
from fractions import Fraction as F

import pytest

from casolag import (DegenerateFamily, FamilySpec, InvalidPreset, Poly, beta,
                     certify_admissible, degenerate_preset, krall_preset,
                     laguerre, match_krall_parameters, omega, parse_poly,
                     q_poly, reduce_representation, render, spec_from_json,
                     spec_to_json)


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(F(1), (), {})
    with pytest.raises(ValueError):
        FamilySpec(F(1), (2, 1), {1: parse_poly("x"), 2: parse_poly("x^2")})
    with pytest.raises(ValueError):
        FamilySpec(F(1), (1,), {1: parse_poly("x^2")})  # degree mismatch
    with pytest.raises(ValueError):
        FamilySpec(F(1), (0,), {0: parse_poly("1")})  # g must be positive
    with pytest.raises(ValueError):
        FamilySpec(F(1), (1, 2), {1: parse_poly("x")})  # missing seed


def test_omega_oracle_nonsegment(nonsegment_spec):
    assert render(omega(nonsegment_spec)) == \
        "-12*x^5+144*x^4-628*x^3+1296*x^2-1280*x+476"


def test_omega_oracle_integer_alpha(integer_alpha_spec):
    assert render(omega(integer_alpha_spec)) == \
        "-6*x^4+16*x^3+54*x^2-208*x+166"


def test_omega_single_seed():
    spec = FamilySpec(F(1), (1,), {1: parse_poly("x+2")})
    # one seed: omega is just the seed shifted down by one
    assert omega(spec) == parse_poly("x+1")


def test_certify_admissible_pass(nonsegment_spec):
    cert = certify_admissible(nonsegment_spec)
    assert cert.passed
    assert cert.verdict == "pass"
    assert cert.fail_n is None
    # the scan bound covers the Cauchy root bound
    assert cert.integer_scan_bound >= 1


def test_certify_admissible_fail_records_n():
    spec = FamilySpec(F(22, 7), (2, 3), {
        2: parse_poly("x^2"), 3: parse_poly("x^3")})
    cert = certify_admissible(spec)
    assert not cert.passed
    assert cert.fail_n == 1


def test_certify_fail_at_one():
    # R_2 = x(x-1) makes Omega = -(x-1)(x-2), fine at 0, zero at 1
    spec = FamilySpec(F(1), (1, 2), {
        1: parse_poly("x"), 2: parse_poly("x^2-x")})
    cert = certify_admissible(spec)
    assert omega(spec)(F(0)) != 0
    assert cert.fail_n == 1


def test_beta_row_structure(nonsegment_spec):
    om = omega(nonsegment_spec)
    m = nonsegment_spec.m
    for n in (0, 1, 3, 6):
        row = beta(nonsegment_spec, n)
        assert len(row.values) == m + 1
        assert row.values[0] == om(F(n))
        assert row.values[m] == (-1) ** m * om(F(n + 1))


def test_beta_annihilates_seeds(nonsegment_spec):
    # sum_j beta_{n,j} R_g(n-j) = 0 for every seed
    for n in (0, 2, 5):
        row = beta(nonsegment_spec, n)
        for g in nonsegment_spec.G:
            s = sum((row.values[j] * nonsegment_spec.R[g](F(n - j))
                     for j in range(len(row.values))), F(0))
            assert s == 0


def test_q_poly_degree_and_lead(nonsegment_spec):
    om = omega(nonsegment_spec)
    for n in range(9):
        q = q_poly(nonsegment_spec, n)
        assert q.degree == n
        assert q.lead == F((-1) ** n) * om(F(n)) / math.factorial(n)


def test_q_poly_is_laguerre_combination(nonsegment_spec):
    spec = nonsegment_spec
    n = 6
    row = beta(spec, n)
    combo = Poly.zero()
    for j, b in enumerate(row.values):
        if n - j >= 0:
            combo = combo + b * laguerre(n - j, spec.alpha)
    assert combo == q_poly(spec, n)


def test_q_poly_degenerate_raises():
    spec = FamilySpec(F(22, 7), (2, 3), {
        2: parse_poly("x^2"), 3: parse_poly("x^3")})
    with pytest.raises(DegenerateFamily):
        q_poly(spec, 1)


def test_seed_mixing_invariance(nonsegment_spec):
    # adding lower seeds to higher ones leaves every q_n unchanged
    spec = nonsegment_spec
    mixed = FamilySpec(spec.alpha, spec.G, {
        1: spec.R[1],
        2: spec.R[2] + 3 * spec.R[1],
        5: spec.R[5] - spec.R[2] + F(1, 2) * spec.R[1],
    })
    for n in range(7):
        assert q_poly(mixed, n) == q_poly(spec, n)


def test_seed_scaling_rescales_q():
    spec = FamilySpec(F(7), (1, 2), {1: parse_poly("x+1"),
                                     2: parse_poly("x^2+x+1")})
    scaled = FamilySpec(F(7), (1, 2), {1: 2 * spec.R[1],
                                       2: spec.R[2]})
    for n in range(5):
        a, b = q_poly(spec, n), q_poly(scaled, n)
        # proportional, never equal-to-zero mismatch
        assert a * b.lead == b * a.lead


def test_reduce_representation(nonsegment_spec):
    red = reduce_representation(nonsegment_spec)
    # powers x^g for lower g in G are absent from higher seeds
    assert red.R[2].coeff(1) == 0
    assert red.R[5].coeff(1) == 0
    assert red.R[5].coeff(2) == 0
    # same family
    for n in range(6):
        assert q_poly(red, n) == q_poly(nonsegment_spec, n)
    # idempotent
    again = reduce_representation(red)
    assert again.R == red.R


def test_krall_preset_seeds():
    spec = krall_preset(2, 2, [F(1), F(1)])
    assert spec.alpha == 2
    assert spec.G == (2, 3)
    assert render(spec.R[2]) == "1/2*x^2+3/2*x+2"
    assert render(spec.R[3]) == "1/6*x^3+x^2+5/6*x+1"
    assert render(omega(spec)) == "-1/12*x^4-11/12*x^2+x+1"


def test_krall_preset_validation():
    with pytest.raises(InvalidPreset):
        krall_preset(1, 2, [F(1), F(1)])  # needs alpha >= m
    with pytest.raises(InvalidPreset):
        krall_preset(2, 2, [F(0), F(1)])  # a_0 must be nonzero
    with pytest.raises(InvalidPreset):
        krall_preset(2, 2, [F(1)])  # wrong length


def test_degenerate_preset_seeds():
    spec = degenerate_preset(1, 2, [F(0), F(2)])
    assert spec.G == (1, 2)
    assert render(spec.R[1]) == "x+1"
    assert render(spec.R[2]) == "1/2*x^2+3/2*x+3"


def test_degenerate_preset_validation():
    with pytest.raises(InvalidPreset):
        degenerate_preset(2, 2, [F(1), F(1)])  # needs alpha <= m-1
    with pytest.raises(InvalidPreset):
        degenerate_preset(1, 2, [F(1)])  # wrong length


def test_degenerate_preset_origin_vanishing():
    # members vanish at 0 to order m - alpha from index m - alpha on
    spec = degenerate_preset(1, 3, [F(0), F(0), F(3)])
    assert certify_admissible(spec).passed
    for n in range(2, 9):
        q = q_poly(spec, n)
        assert q(F(0)) == 0
        assert q.deriv()(F(0)) == 0
    assert q_poly(spec, 1)(F(0)) != 0


def test_degenerate_quotient_is_krall():
    # dividing out the forced origin root turns the degenerate family into
    # a genuine krall family with swapped parameters and a_0 = -a~_1
    spec = degenerate_preset(1, 2, [F(0), F(2)])
    target = krall_preset(2, 1, [F(-2)])
    shift = 1  # m - alpha
    for n in range(6):
        quotient = q_poly(spec, n + shift).shift_down(shift)
        kq = q_poly(target, n)
        assert quotient.degree == n
        assert quotient * kq.lead == kq * quotient.lead


def test_match_krall_roundtrip():
    for a in ([F(1)], [F(2)], [F(-3, 2)]):
        spec = krall_preset(1, 1, a)
        assert match_krall_parameters(spec) == a
    spec = krall_preset(3, 2, [F(2), F(-1)])
    assert match_krall_parameters(spec) == [F(2), F(-1)]
    spec = degenerate_preset(1, 2, [F(0), F(2)])
    assert match_krall_parameters(spec) == [F(0), F(2)]


def test_match_krall_mixing_invariant():
    spec = krall_preset(2, 2, [F(1), F(1)])
    mixed = FamilySpec(spec.alpha, spec.G, {
        2: spec.R[2] * 5,
        3: spec.R[3] + 3 * spec.R[2],
    })
    assert match_krall_parameters(mixed) == [F(1), F(1)]


def test_match_krall_rejects(nonsegment_spec):
    assert match_krall_parameters(nonsegment_spec) is None  # G not a segment
    spec = krall_preset(2, 2, [F(1), F(1)])
    pert = FamilySpec(spec.alpha, spec.G, {
        2: spec.R[2] + parse_poly("x"), 3: spec.R[3]})
    assert match_krall_parameters(pert) is None
    halfint = FamilySpec(F(3, 2), (1, 2), {1: parse_poly("x"),
                                           2: parse_poly("x^2+1")})
    assert match_krall_parameters(halfint) is None


def test_json_roundtrip(nonsegment_spec):
    text = spec_to_json(nonsegment_spec)
    back = spec_from_json(text)
    assert back == nonsegment_spec
    obj = json.loads(text)
    assert obj["alpha"] == "7"
    assert obj["G"] == [1, 2, 5]


def test_json_preset_form():
    text = json.dumps({"preset": "krall", "alpha": 2, "m": 2, "a": [1, 1]})
    spec = spec_from_json(text)
    assert spec == krall_preset(2, 2, [F(1), F(1)])
    text = json.dumps({"preset": "degenerate", "alpha": 1, "m": 2,
                       "a": ["0", "2"]})
    assert spec_from_json(text) == degenerate_preset(1, 2, [F(0), F(2)])


def test_json_rejects_floats():
    with pytest.raises(ValueError):
        spec_from_json(json.dumps(
            {"alpha": 1.5, "G": [1], "R": {"1": "x"}}))
