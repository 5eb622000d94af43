"""Exact scalar arithmetic, canonical forms and membership predicates."""

from fractions import Fraction

import pytest

from qfgl import (
    Scalar, ZERO, ONE, Q, S, cyclotomic, membership, is_cromulent,
    eval_q0, eval_q1, canonical_str,
)
from qfgl.qcomb import q_int, q_fact

from conftest import SEED, random_scalar, random_q_poly


def test_inverse_pair():
    assert (ONE / (ONE - Q)) * (ONE - Q) == ONE


def test_polynomial_division_normalizes():
    assert (ONE - Q ** 2) / (ONE - Q) == ONE + Q


def test_q_int_products_do_not_multiply():
    # (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3, not the 6-term q-integer
    prod = q_int(2) * q_int(3)
    assert prod == Scalar.from_q_coeffs([1, 2, 2, 1])
    assert prod != q_int(6)


def test_structural_equality_is_mathematical(rng):
    for _ in range(50):
        a = random_scalar(rng)
        b = random_scalar(rng)
        c = random_scalar(rng)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a


def test_division_and_powers(rng):
    for _ in range(50):
        a = random_scalar(rng)
        if a.is_zero():
            continue
        assert a / a == ONE
        assert a ** 3 == a * a * a
        assert a ** -2 == ONE / (a * a)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_s_squares_to_q():
    assert S * S == Q
    assert S ** 2 == Q
    assert not S.lives_in_q()
    assert (S ** 4).lives_in_q()


# -- cyclotomic polynomials ---------------------------------------------------

def test_cyclotomic_base_cases():
    assert cyclotomic(1) == Q - ONE
    assert cyclotomic(2) == Q + ONE


def test_cyclotomic_6_by_hand_recursion():
    # (q^6 - 1) / (Phi_1 Phi_2 Phi_3), assembled step by step
    q6m1 = Q ** 6 - ONE
    by_hand = q6m1 / (cyclotomic(1) * cyclotomic(2) * cyclotomic(3))
    assert cyclotomic(6) == by_hand
    assert cyclotomic(6) == Scalar.from_q_coeffs([1, -1, 1])


def test_cyclotomic_product_identity():
    for k in range(1, 31):
        prod = ONE
        for d in range(2, k + 1):
            if k % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == q_int(k), f"k = {k}"


def test_cyclotomic_rejects_bad_index():
    with pytest.raises(ValueError):
        cyclotomic(0)


# -- cromulence ---------------------------------------------------------------

def test_cromulent_examples():
    assert is_cromulent(ONE / (ONE + Q)) is True
    assert is_cromulent(ONE / (ONE - Q)) is False
    assert is_cromulent(ONE / q_int(6)) is True


def test_cromulent_needs_q():
    with pytest.raises(ValueError):
        is_cromulent(S)


def test_cromulent_integrality_matters():
    half = Scalar.from_fraction(Fraction(1, 2))
    assert is_cromulent(half / (ONE + Q)) is False
    assert is_cromulent(Scalar.from_int(7) / (ONE + Q)) is True


def test_cromulent_q_integer_family():
    for k in range(1, 21):
        inv = ONE / q_int(k)
        assert is_cromulent(inv), f"k = {k}"
        assert eval_q0(inv) == 1
        assert eval_q1(inv) == Fraction(1, k)


def test_cromulent_factorial_inverses():
    for k in range(1, 9):
        assert is_cromulent(ONE / q_fact(k))


def test_cromulence_closed_under_ring_ops(rng):
    def random_cromulent():
        num = random_q_poly(rng, 3)
        den = ONE
        for _ in range(rng.randint(0, 2)):
            den = den * cyclotomic(rng.randint(2, 8))
        return num / den

    for _ in range(50):
        a = random_cromulent()
        b = random_cromulent()
        assert is_cromulent(a + b)
        assert is_cromulent(a * b)


def test_cromulent_catches_isolated_cyclotomic_factor():
    # 1/Phi_6 divides a q-integer, so it is invertible in the localization
    # even though 6 exceeds the denominator degree plus one
    assert is_cromulent(ONE / cyclotomic(6)) is True
    assert is_cromulent(ONE / cyclotomic(12)) is True


# -- membership flags ---------------------------------------------------------

def test_membership_tower_examples():
    m = membership(Q ** 2 + ONE)
    assert m.in_Z_q and m.in_Z_q_laurent and m.in_Q_q and m.in_cromulent

    m = membership(Scalar.q_power(-1))
    assert not m.in_Z_q and m.in_Z_q_laurent and m.in_cromulent
    assert not m.in_Q_q

    m = membership((ONE + Q) / Scalar.from_int(2))
    assert not m.in_Z_q and m.in_Q_q and not m.in_cromulent

    m = membership(ONE / (ONE + Q))
    assert not m.in_Z_q_laurent and m.in_cromulent

    m = membership(S)
    assert m.in_Q_s and not m.in_Q_q


def test_membership_chain_random(rng):
    for _ in range(50):
        a = random_scalar(rng)
        shift = rng.randint(-2, 2)
        a = a * Scalar.q_power(shift)
        m = membership(a)
        if m.in_Z_q:
            assert m.in_Z_q_laurent and m.in_Q_q
        if m.in_Z_q_laurent:
            assert m.in_cromulent
        assert m.in_Q_s


# -- evaluation ---------------------------------------------------------------

def test_eval_q0_examples():
    assert eval_q0(q_int(5)) == 1
    assert eval_q0(ONE / (ONE + Q)) == 1
    assert eval_q0(ONE / (ONE - Q)) == 1


def test_eval_q0_pole():
    with pytest.raises(ZeroDivisionError):
        eval_q0(Scalar.q_power(-1))


def test_eval_q1_examples():
    for k in range(1, 11):
        assert eval_q1(q_int(k)) == k
    assert eval_q1(ONE / q_int(3)) == Fraction(1, 3)


def test_eval_q1_pole():
    with pytest.raises(ZeroDivisionError):
        eval_q1(ONE / (ONE - Q))


def test_q_expansion_geometric():
    geo = ONE / (ONE - Q)
    assert geo.q_expansion(6) == [Fraction(1)] * 7


def test_adams_substitute_preserves_canonical_form():
    a = (ONE + Q) / (ONE - Q ** 2)
    assert a == ONE / (ONE - Q)
    assert a.adams_substitute(3) == ONE / (ONE - Q ** 3)


# -- printing ----------------------------------------------------------------

def test_canonical_strings():
    assert canonical_str(ZERO) == "0"
    assert canonical_str((ONE + Q + Q ** 2) / (ONE + Q)) == "(1 + q + q^2)/(1 + q)"
    assert canonical_str((ONE + Q) / Scalar.from_int(2)) == "(1 + q)/2"
    assert canonical_str(Scalar.q_power(-1)) == "q^-1"
    assert canonical_str(S + ONE / S) == "s^-1 + s"
    assert canonical_str(ONE / (ONE + Q)) == "1/(1 + q)"
