import pytest

from qtpaths.macdonald import WeightSpec
from qtpaths.qt_field import ONE, q
from qtpaths.tau import (
    TensorSeries, a_function, basis_det, basis_det_at_one, conjugation_check, ext_delta_check,
    ext_delta_lhs, ext_delta_rhs, leading_coeff_check, pde_check, tau_build, tau_reconstruct,
)

G1 = WeightSpec([1, 1])
G2 = WeightSpec([1, -2, 3])


def test_constant_term_is_one():
    tau = tau_build(G1, G2, 2)
    assert tau.component(0) == [[ONE]]
    assert tau.coefficient(0, (), ()) == 1


def test_symmetric_when_weights_agree():
    tau = tau_build(G1, G1, 2)
    for m in range(3):
        c = tau.component(m)
        assert all(c[i][j] == c[j][i] for i in range(len(c)) for j in range(len(c)))


def test_json_roundtrip():
    tau = tau_build(G1, G2, 2)
    assert TensorSeries.from_json(tau.to_json()) == tau


def test_htilde_form_is_diagonal():
    form = tau_build(G1, G2, 2).htilde_form(2)
    assert form and all(lam == mu for lam, mu in form)


@pytest.mark.parametrize("ell", [1, 2])
def test_pde(ell):
    assert pde_check(G1, G2, ell, 2)


def test_pde_detects_perturbation():
    tau = tau_build(G1, G2, 2).perturbed(1, 0, 0, q)
    assert not pde_check(G1, G2, 1, 2, tau)


def test_pde_needs_room():
    with pytest.raises(ValueError):
        pde_check(G1, G2, 3, 2)


def test_conjugation():
    assert conjugation_check(G1, G2, 1, 2)


def test_reconstruction():
    assert tau_reconstruct(G1, G2, 2) == tau_build(G1, G2, 2)


def test_a_function_window():
    with pytest.raises(ValueError):
        a_function(G1, (2, 1), window=2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_basis_det(n):
    assert basis_det(G2, n) != 0
    got, predicted = basis_det_at_one(G2, n)
    assert got == predicted


def test_leading_coefficient():
    assert leading_coeff_check(G2, 1)
    assert leading_coeff_check(G1, 2)


@pytest.mark.parametrize("n,k,l", [(1, 1, 0), (2, 1, 1), (2, 2, 0), (3, 2, 1)])
def test_ext_delta(n, k, l):
    assert ext_delta_check(n, k, l)


def test_ext_delta_params():
    with pytest.raises(ValueError):
        ext_delta_lhs(2, 3, 0)
    with pytest.raises(ValueError):
        ext_delta_rhs(2, 0, 0)
