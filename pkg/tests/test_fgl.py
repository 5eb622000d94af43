"""The q-deformed group law: log/exp, closed forms, axioms, adjudications."""

from fractions import Fraction

import pytest

from qfgl import (
    Scalar, ZERO, ONE, Q, S, eval_q0, eval_q1, membership,
    Series, BiSeries, compose, reverse,
    FormalGroupLaw, qmob_series, log_chi, exp_chi,
    f_chi_closed, f_chi_from_log, f_chi_derived_closed, proposition_check,
    multiplicative_law, verify_fgl, drinfeld_form, cp_image,
    fgl_inverse, fgl_eval, cartier_check,
    q_int, pow_bivariate, log1, mob_det, q_mobius,
)


def T(order):
    return Series.generator("T", order)


# -- logarithm and exponential ---------------------------------------------------

def test_log_coefficients():
    lg = log_chi(6)
    assert lg[1] == ONE
    assert lg[2] == (ONE + Q) / Scalar.from_int(2)
    assert lg[5] == Scalar.from_q_coeffs([1, 1, 1, 1, 1]) / Scalar.from_int(5)


def test_log_equals_q_integer_sum():
    lg = log_chi(20)
    for k in range(1, 21):
        assert Scalar.from_int(k) * lg[k] == q_int(k)


def test_log_coefficients_at_q_equal_one():
    lg = log_chi(12)
    for k in range(1, 13):
        assert eval_q1(Scalar.from_int(k) * lg[k]) == k


def test_exp_linear_coefficient():
    assert exp_chi(6)[1] == ONE
    assert exp_chi(6)[0] == ZERO


def test_exp_log_compose_to_identity():
    n = 12
    assert compose(exp_chi(n), log_chi(n)) == T(n)
    assert compose(log_chi(n), exp_chi(n)) == T(n)


def test_exp_equals_reversed_log():
    for n in (8, 12):
        assert exp_chi(n) == reverse(log_chi(n))


# -- orientation images ------------------------------------------------------------

def test_cp_image_point():
    assert cp_image(0) == ONE


def test_cp_image_plane():
    assert cp_image(2) == Scalar.from_q_coeffs([1, 1, 1])


def test_cp_image_family():
    for n in range(11):
        img = cp_image(n)
        assert img == q_int(n + 1)
        assert eval_q1(img) == n + 1


# -- the closed law -----------------------------------------------------------------

def test_closed_law_low_coefficients():
    F = f_chi_closed(6)
    assert F.coeff(0, 0) == ZERO
    assert F.coeff(1, 0) == ONE
    assert F.coeff(0, 1) == ONE
    assert F.coeff(1, 1) == ONE + Q


def test_closed_law_coeff_2_1_by_multiplying_back():
    # expansion * (1 + qXY) must reproduce the numerator X + Y + (1+q)XY
    F = f_chi_closed(8).series
    den = BiSeries(("X", "Y"), 8, {(0, 0): ONE, (1, 1): Q})
    num = BiSeries(("X", "Y"), 8,
                   {(1, 0): ONE, (0, 1): ONE, (1, 1): ONE + Q})
    assert F * den == num
    assert F.coeff(2, 1) == -Q


def test_closed_law_coefficients_integral():
    F = f_chi_closed(12).series
    for (i, j), c in F.terms.items():
        assert membership(c).in_Z_q, f"coefficient at {(i, j)}"


def test_closed_law_axioms():
    assert verify_fgl(f_chi_closed(10), 10).all_passed


def test_closed_law_q0_is_multiplicative():
    # closed rational form comparison: exact at all orders
    num, den = f_chi_closed(2).closed
    num0 = {k: eval_q0(c) for k, c in num.items() if eval_q0(c)}
    den0 = {k: eval_q0(c) for k, c in den.items() if eval_q0(c)}
    assert num0 == {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    assert den0 == {(0, 0): 1}


# -- the transported law and the sign adjudication -----------------------------------

def test_transport_equals_minus_closed_form():
    n = 12
    assert f_chi_from_log(n).series == f_chi_derived_closed(n).series


def test_transport_differs_from_plus_closed_form():
    F_log = f_chi_from_log(4).series
    F_plus = f_chi_closed(4).series
    assert F_log != F_plus
    assert F_log.coeff(1, 1) == -(ONE + Q)
    assert F_plus.coeff(1, 1) == ONE + Q


def test_proposition_adjudication_pattern():
    rep = proposition_check(10)
    outcomes = {c.name: c.passed for c in rep.checks}
    assert outcomes == {
        "transport = plus form (X+Y+(1+q)XY)/(1+qXY)": False,
        "transport = minus form (X+Y-(1+q)XY)/(1-qXY)": True,
    }


def test_minus_law_is_a_law_with_q_integer_logarithm():
    F = f_chi_derived_closed(10)
    assert verify_fgl(F, 10).all_passed
    for (i, j), c in F.series.terms.items():
        assert membership(c).in_Z_q


def test_transport_q0_is_the_other_multiplicative_law():
    F = f_chi_from_log(6).series
    c11 = F.coeff(1, 1)
    assert eval_q0(c11) == -1


# -- axiom checking on other laws ------------------------------------------------------

def test_multiplicative_law_passes():
    assert verify_fgl(multiplicative_law(8), 8).all_passed
    assert verify_fgl(multiplicative_law(8), 8, assoc="generic").all_passed


def test_non_law_fails_associativity_at_degree_four():
    bad = FormalGroupLaw(series=BiSeries(
        ("X", "Y"), 6, {(1, 0): ONE, (0, 1): ONE, (2, 2): ONE}))
    rep = verify_fgl(bad, 6)
    by_name = {c.name: c for c in rep.checks}
    assoc = by_name["associativity (truncated substitution)"]
    assert not assoc.passed
    assert "total degree 4" in assoc.detail
    assert by_name["unit F(X,0) = X"].passed
    assert by_name["commutativity F(X,Y) = F(Y,X)"].passed


def test_generic_and_closed_assoc_routes_agree():
    for make in (f_chi_closed, f_chi_derived_closed, multiplicative_law):
        F = make(8)
        assert verify_fgl(F, 8, assoc="closed").all_passed
        assert verify_fgl(F, 8, assoc="generic").all_passed


# -- rescaled symmetric form ------------------------------------------------------------

def test_drinfeld_coefficients():
    D = drinfeld_form(8)
    assert D.coeff(1, 0) == ONE
    assert D.coeff(0, 1) == ONE
    assert D.coeff(1, 1) == ONE / S + S


def test_drinfeld_two_routes_agree():
    D = drinfeld_form(10)
    num, den = D.closed
    expanded = BiSeries(("X", "Y"), 10, num) / BiSeries(("X", "Y"), 10, den)
    assert D.series == expanded


def test_drinfeld_is_a_law():
    assert verify_fgl(drinfeld_form(10), 10).all_passed


# -- the formal inverse ---------------------------------------------------------------

def test_inverse_of_multiplicative_law():
    iota = fgl_inverse(multiplicative_law(8), 8)
    # -T/(1+T) = -T + T^2 - T^3 + ...
    for k in range(1, 9):
        assert iota[k] == Scalar.from_int((-1) ** k)
    assert iota[0] == ZERO


def test_inverse_of_q_law_closed_form():
    n = 10
    iota = fgl_inverse(f_chi_closed(n), n)
    # -T/(1 + (1+q)T), solved from the closed numerator
    expected = (-T(n)) / Series("T", n, (ONE, ONE + Q))
    assert iota == expected


def test_inverse_composes_to_zero():
    n = 10
    for make in (f_chi_closed, multiplicative_law, f_chi_derived_closed):
        F = make(n)
        iota = fgl_inverse(F, n)
        assert fgl_eval(F, T(n), iota, n).is_zero()


# -- the exponential-character identity ---------------------------------------------------

def test_cartier_adjudication_pinned():
    rep = cartier_check(6, 8)
    outcomes = {c.name: c.passed for c in rep.checks}
    assert outcomes == {
        "exponential-character identity [1-exp(-u), c=1-q]": False,
        "exponential-character identity [1-exp(-u), c=(1-q)^-1]": True,
        "exponential-character identity [exp(u)-1, c=1-q]": False,
        "exponential-character identity [exp(u)-1, c=(1-q)^-1]": False,
    }


def test_cartier_printed_variant_fails_immediately():
    rep = cartier_check(4, 6)
    failing = {c.name: c.detail for c in rep.checks if not c.passed}
    assert failing["exponential-character identity [1-exp(-u), c=1-q]"] \
        == "first failing coefficient t^1 T^1"


def test_t_degree_one_slice():
    # d/dt at t=0 of 1 - U^(-c t) is c * log U
    x_order = 8
    for c in (ONE - Q, ONE / (ONE - Q)):
        U = qmob_series(x_order)
        P = pow_bivariate(U, -c)
        slice1 = P.slice_first(1)
        expected = log1(U).scale(-c)
        n = slice1.order
        assert slice1 == expected.truncate(n)


def test_pow_bivariate_route_matches_per_degree_route():
    # 1 - pow_bivariate(U, -c) against the slice formula used by the check
    x_order, t_order = 6, 3
    c = ONE / mob_det(q_mobius())
    U = qmob_series(x_order + t_order)
    P = pow_bivariate(U, -c)
    L = log1(qmob_series(x_order))
    acc = Series.constant("T", x_order, ONE)
    fact = 1
    for k in range(1, t_order + 1):
        acc = acc * L
        fact *= k
        expected = acc.scale(
            Scalar.from_int((-1) ** (k + 1)) * c ** k
            * Scalar.from_fraction(Fraction(1, fact)))
        got = (-P.slice_first(k)).truncate(x_order)
        assert got == expected.truncate(got.order)
