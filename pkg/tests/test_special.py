import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from casolag import (PoleError, Poly, binom_rat, casoratian,
                     from_binomial_basis, gamma_ratio, parse_poly, poch,
                     to_binomial_basis)
from casolag.special import binom_poly, combinatorial_identity_check


def test_poch_values():
    assert poch(F(3), 0) == 1
    assert poch(F(3), 4) == 3 * 4 * 5 * 6
    assert poch(F(1, 2), 2) == F(3, 4)
    assert poch(F(-2), 3) == 0  # crosses zero


def test_poch_negative_n_rejected():
    with pytest.raises(ValueError):
        poch(F(1), -1)


def test_gamma_ratio_shift_up():
    # Gamma(alpha+s)/Gamma(alpha) for s >= 0
    assert gamma_ratio(F(7), 3) == 7 * 8 * 9
    assert gamma_ratio(F(1, 2), 2) == F(3, 4)
    assert gamma_ratio(F(7), 0) == 1


def test_gamma_ratio_shift_down():
    assert gamma_ratio(F(7), -2) == F(1, 30)  # 1/(5*6)
    assert gamma_ratio(F(7, 2), -1) == F(2, 5)


def test_gamma_ratio_pole():
    with pytest.raises(PoleError):
        gamma_ratio(F(2), -2)  # Gamma(0)/Gamma(2)
    with pytest.raises(PoleError):
        gamma_ratio(F(1), -3)


def test_gamma_ratio_functional_equation():
    for alpha in (F(7), F(3, 2), F(22, 7)):
        for s in range(-2, 4):
            assert gamma_ratio(alpha, s + 1) == gamma_ratio(alpha, s) * (alpha + s)


def test_binom_rat():
    assert binom_rat(F(5), 2) == 10
    assert binom_rat(F(5), 0) == 1
    assert binom_rat(F(5), -1) == 0
    assert binom_rat(F(7, 2), 2) == F(35, 8)
    # upper index smaller than k is fine (falling factorial hits zero)
    assert binom_rat(F(2), 3) == 0


def test_binom_poly():
    assert binom_poly(0) == Poly.one()
    assert binom_poly(2) == parse_poly("1/2*x^2+3/2*x+1")
    assert binom_poly(3).lead == F(1, 6)


def test_binomial_basis_example():
    # x + 2 = 1*binom(x,0) + ... no: binom(x+1,1) = x+1, so x+2 = (x+1) + 1
    assert to_binomial_basis(parse_poly("x+2")) == [F(1), F(1)]
    assert to_binomial_basis(parse_poly("x^2")) == [F(1), F(-3), F(2)]


def test_from_binomial_basis_inverts():
    w = [F(1), F(-2), F(3), F(1, 2)]
    assert to_binomial_basis(from_binomial_basis(w)) == w


rats = st.fractions(min_value=-100, max_value=100, max_denominator=20)


@given(st.lists(rats, min_size=1, max_size=6))
def test_binomial_roundtrip(coeffs):
    p = Poly(coeffs)
    w = to_binomial_basis(p)
    assert from_binomial_basis(w) == p
    assert len(w) == (0 if p.is_zero() else p.degree) + 1


def test_casoratian_single():
    p = parse_poly("x^2+1")
    assert casoratian([p]) == p


def test_casoratian_known_value():
    # det [[p(x), p(x-1)], [q(x), q(x-1)]] for p = x, q = x^2
    d = casoratian([parse_poly("x"), parse_poly("x^2")])
    assert d == parse_poly("-x^2+x")  # x(x-1)^2 - (x-1)x^2


@settings(max_examples=25)
@given(st.lists(rats, min_size=1, max_size=3),
       st.lists(rats, min_size=1, max_size=4))
def test_casoratian_degree_rule_2x2(c1, c2):
    # degree of the determinant is deg p1 + deg p2 - 1 when degrees differ
    p1, p2 = Poly(c1 + [F(1)]), Poly(c2 + [F(1)])
    if p1.degree == p2.degree:
        return
    d = casoratian([p1, p2])
    assert d.degree == p1.degree + p2.degree - 1


def test_casoratian_repeated_rows_vanish():
    p = parse_poly("x^3+x")
    assert casoratian([p, p]).is_zero()


def test_combinatorial_identity_small_grid():
    # sum_j (-1)^j binom(a+j+k-l-1, j) binom(a+u, a+j) = binom(u+l-k, l-k)
    for alpha in (1, 2, 3):
        for k in (0, 1, 2):
            for l in range(alpha + k, alpha + k + 3):
                assert combinatorial_identity_check(alpha, k, l, u_max=12)
