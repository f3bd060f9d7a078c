from fractions import Fraction

import pytest

from qtpaths.macdonald import (
    WeightSpec, b_stat, delta_eigenvalue, expand_in_mac, htilde, mac_basis, pi_eigenvalue,
    pieri_coeffs,
)
from qtpaths.partitions import partitions
from qtpaths.qt_field import ONE, q, t
from qtpaths.symfunc import SymFunc, convert, e, s, star


def test_degree_two():
    assert htilde((2,)) == s(2) + q * s(1, 1)
    assert htilde((1, 1)) == s(2) + t * s(1, 1)


def test_b_stat():
    assert b_stat((2, 1)) == 1 + q + t


@pytest.mark.parametrize("n", [2, 3, 4])
def test_star_orthogonal(n):
    data = mac_basis(n)
    for lam in data.parts:
        for mu in data.parts:
            if lam != mu:
                assert star(htilde(lam), htilde(mu)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_normalized_at_s_n(n):
    # <Htilde_lam, s_n> = 1
    for lam in partitions(n):
        assert convert(htilde(lam), "s")[(n,)] == ONE


def test_expand_in_mac_roundtrip():
    f = e(3)
    coeffs = expand_in_mac(f)
    back = sum((htilde(lam).scale(c) for lam, c in coeffs.items()), SymFunc.zero("s"))
    assert convert(back, "e") == f


def test_pieri_support_is_one_cell():
    for nu in pieri_coeffs((2, 1)):
        assert sum(nu) == 4


def test_delta_eigenvalues():
    assert delta_eigenvalue("e", 1, (2, 1)) == b_stat((2, 1))
    assert delta_eigenvalue("h", 0, (3,)) == 1


def test_weight_spec():
    w = WeightSpec.parse("1, 1/2, 0")
    assert w.a == (1, Fraction(1, 2))
    assert w.degree == 1
    assert w.total() == Fraction(3, 2)
    with pytest.raises(ValueError):
        WeightSpec([2, 1])


def test_pi_eigenvalue_is_product_over_cells():
    g = WeightSpec([1, 1])
    assert pi_eigenvalue(g, WeightSpec([1]), (2,)) == 2 * (1 + q)
