from fractions import Fraction

import pytest
from sympy import sympify

from app.errors import DomainError, EvaluationError
from app.qcoeff import ONE, Q, Q_DOMAIN, ZERO, LaurentPoly, RatFunc, gauss_binom, qfactorial, qint


def random_ratfunc(rng):
    num = LaurentPoly({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(3)})
    den = LaurentPoly({rng.randint(-2, 2): rng.randint(1, 4) for _ in range(2)})
    return RatFunc(num) / RatFunc(den)


def test_qint_small_values():
    assert qint(1) == LaurentPoly({0: 1})
    assert qint(2) == LaurentPoly({1: 1, -1: 1})
    assert str(qint(2)) == "q + q^-1"
    assert str(qint(3)) == "q^2 + 1 + q^-2"


def test_qint_in_q_power():
    assert qint(2, 2) == LaurentPoly({2: 1, -2: 1})


def test_qint_rejects_nonpositive():
    with pytest.raises(DomainError):
        qint(0)


def test_gauss_binom():
    for n in range(5):
        assert gauss_binom(n, 0) == 1
    assert gauss_binom(2, 1) == qint(2)
    assert gauss_binom(4, 2).eval_at_one() == 6
    assert gauss_binom(4, 2) == LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_gauss_binom_out_of_range():
    with pytest.raises(DomainError):
        gauss_binom(2, 3)
    with pytest.raises(DomainError):
        gauss_binom(2, -1)


def test_qfactorial():
    assert qfactorial(0) == 1
    assert qfactorial(3) == qint(2) * qint(3)


def test_inverse_of_q_minus_q_inverse():
    value = (Q - Q.inv()).inv()
    assert value == RatFunc.parse("q/(q^2-1)")
    assert str(value) == "q/(q^2 - 1)"


def test_product_of_laurent_values():
    assert (Q + Q.inv()) * (Q - Q.inv()) == RatFunc.q_power(2) - RatFunc.q_power(-2)


def test_eval_at_one():
    assert qint(3).to_ratfunc().eval_at_one() == 3
    assert RatFunc.parse("(q^2 + 1)/(q + 3)").eval_at_one() == Fraction(1, 2)
    with pytest.raises(EvaluationError):
        RatFunc.parse("1/(q - 1)").eval_at_one()


def test_division_by_zero():
    with pytest.raises(EvaluationError):
        ZERO.inv()
    with pytest.raises(EvaluationError):
        ONE / 0


def test_canonical_form_decides_equality():
    a = RatFunc.parse("(q^2 - 1)/(q - 1)")
    assert a == Q + 1
    assert a - (Q + 1) == 0
    assert hash(a) == hash(Q + 1)
    assert a.denominator.LC == 1


@pytest.mark.parametrize("exp", [-1, -3, -5])
def test_negative_powers_of_negative_values_are_canonical(exp):
    minus_q = -Q
    power = minus_q**exp
    assert power == -(Q.inv() ** -exp)
    assert hash(power) == hash(-(Q.inv() ** -exp))
    assert power.raw.denom.LC > 0
    assert (RatFunc.parse("1 - q") ** exp) == (ONE - Q).inv() ** -exp


def test_wraps_sympy_field_elements():
    element = Q_DOMAIN.from_sympy(sympify("(q**2 - 1)/(1 - q)"))
    assert RatFunc(element) == -(Q + 1)
    assert RatFunc(element).raw.denom.LC > 0


def test_rendering():
    assert str(RatFunc.parse("(q^2 - 1)/q")) == "q - q^-1"
    assert str(RatFunc(Fraction(3, 2)) * Q**2 - 1) == "3/2*q^2 - 1"
    assert str(ZERO) == "0"
    assert str(-Q) == "-q"


def test_as_q_power():
    assert RatFunc.q_power(-3).as_q_power() == -3
    assert ONE.as_q_power() == 0
    assert (Q * 2).as_q_power() is None
    assert (Q + 1).as_q_power() is None


def test_laurent_round_trip_through_ratfunc():
    p = LaurentPoly({3: 2, -1: Fraction(1, 3)})
    assert LaurentPoly.from_ratfunc(p.to_ratfunc()) == p
    with pytest.raises(DomainError):
        LaurentPoly.from_ratfunc(RatFunc.parse("1/(q + 1)"))


def test_field_axioms(rng):
    for _ in range(40):
        a, b, c = (random_ratfunc(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        if a:
            assert a * a.inv() == ONE


def test_qint_products_specialize(rng):
    for _ in range(10):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        assert (qint(n) * qint(m)).eval_at_one() == n * m
