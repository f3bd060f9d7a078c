import pytest
from hypothesis import given, settings, strategies as st

from qtpaths.partitions import conjugate, partitions
from qtpaths.qt_field import M, ONE, q, t
from qtpaths.symfunc import BASES, SymFunc, convert, e, h, hall, m, mul, p, s, star


def test_small_conversions():
    assert convert(e(2), "p") == SymFunc("p", {(1, 1): ONE / 2, (2,): -ONE / 2})
    assert convert(h(2), "s") == s(2)
    assert convert(s(1, 1), "e") == e(2)
    assert convert(p(2), "m") == m(2)


def test_zero_and_one():
    assert SymFunc.one().degree() == 0
    assert not SymFunc.zero("s")
    assert SymFunc.one("s") == SymFunc.one("e")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_roundtrip_every_basis(n):
    for lam in partitions(n):
        f = s(*lam) + q * p(*lam)
        for b in BASES:
            assert convert(convert(f, b), "s") == f


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hall_orthonormal_schur(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert hall(s(*lam), s(*mu)) == (1 if lam == mu else 0)


def test_h_and_m_are_dual():
    for lam in partitions(3):
        for mu in partitions(3):
            assert hall(SymFunc.single("h", lam), m(*mu)) == (1 if lam == mu else 0)
    assert hall(e(3), h(3)) == 0
    assert convert(e(3), "s") == s(*conjugate((3,)))


def test_star_on_power_sums():
    # <p_1, p_1>_* = p_1[-M] = -M
    assert star(p(1), p(1)) == -M


def test_product():
    assert mul(e(1), e(1)) == convert(s(2) + s(1, 1), "e")
    assert e(1) * h(1) == p(1, 1)


def test_json_roundtrip():
    f = s(2, 1) * (q - t) + s(3)
    assert SymFunc.from_json(f.to_json()) == f


def test_rejects_unknown_basis():
    with pytest.raises(ValueError):
        SymFunc("x", {})


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(partitions(3) + partitions(2)), st.sampled_from(BASES[:5]))
def test_mul_commutes_with_conversion(lam, basis):
    f = SymFunc.single(basis, lam)
    g = e(1) + h(2)
    assert convert(mul(f, g), "p") == mul(convert(f, "p"), convert(g, "p"))
