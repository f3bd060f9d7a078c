from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qtpaths.qt_field import (
    M, MBAR, ONE, ZERO, DivisionByZero, QtScalar, monomial, poly_terms, q, q_int, qt, t,
)


small = st.integers(-3, 3)


@st.composite
def scalars(draw):
    num = sum((monomial(draw(st.integers(0, 2)), draw(st.integers(0, 2)), draw(small))
               for _ in range(draw(st.integers(0, 3)))), ZERO)
    den = monomial(draw(st.integers(0, 2)), draw(st.integers(0, 2))) + draw(st.integers(1, 3))
    return num / den


def test_constants():
    assert qt == q * t
    assert M + MBAR == qt
    assert ONE - ONE == ZERO
    assert not ZERO and ONE


def test_reduction_is_canonical():
    x = (1 - q * q) / (1 - q)
    assert x == 1 + q
    assert x.is_polynomial()
    assert hash(x) == hash(1 + q)
    assert (t - 1) / (1 - t) == -1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_evaluate_and_fraction():
    x = (q + 2 * t) / (1 - q)
    assert x.evaluate(Fraction(1, 2), 3) == Fraction(13, 1)
    assert QtScalar(Fraction(3, 4)).as_fraction() == Fraction(3, 4)


def test_q_int():
    assert q_int(3) == 1 + q + q * q
    assert q_int(0) == 0
    assert q_int(2, "qt") == 1 + qt
    assert q_int(-2) == -(1 + q)


def test_poly_terms_are_plain_ints():
    terms = poly_terms((3 * q * t - 2).num)
    assert sorted(terms) == [(-2, 0, 0), (3, 1, 1)]
    assert all(type(x) is int for term in terms for x in term)


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a


@settings(max_examples=40, deadline=None)
@given(scalars())
def test_json_roundtrip(a):
    assert QtScalar.from_json(a.to_json()) == a
