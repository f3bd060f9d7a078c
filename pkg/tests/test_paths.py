import pytest
from hypothesis import given, settings, strategies as st

from qtpaths.linop import op_apply, op_equal
from qtpaths.macdonald import WeightSpec
from qtpaths.partitions import partitions
from qtpaths.paths import (
    ENGINES, A_op, AltPath, Q_apply, R_apply, R_operator, R_product_apply, R_product_operator,
    alt_paths, gamma_of, path_operator, psi, psi_inv,
)
from qtpaths.qt_field import qt
from qtpaths.symfunc import SymFunc, convert, e, p


def test_alt_path_validation():
    with pytest.raises(ValueError):
        AltPath((1,))
    with pytest.raises(ValueError):
        AltPath((-1, 0))
    g = AltPath((2, -1, 1, 0))
    assert g.valleys == [0, 1, 2]
    assert g.degree == 2


def test_gamma_of_is_in_R():
    for beta in [(1, -2, 1, 3), (0,), (2, 0, -1)]:
        g = gamma_of(beta)
        assert g.in_R(beta)
        assert g.valley_weight_exponent(beta) == 0


def test_paths_respect_heights():
    beta = (1, -1, 1)
    found = list(alt_paths(beta, 2))
    assert gamma_of(beta) in found
    assert all(g.in_R(beta) for g in found)
    assert len(set(found)) == len(found)


def test_single_step():
    assert convert(R_apply((1,), SymFunc.one()), "e") == -e(1)
    assert R_apply((), p(2)) == p(2)


@pytest.mark.parametrize("beta", [(1,), (-1, 2), (2, -1, 1), (0, 1, 0)])
def test_engines_agree(beta):
    f = p(2) + p(1, 1) + SymFunc.one()
    got = {eng: R_apply(beta, f, eng) for eng in ENGINES}
    assert got["paths"] == got["increments"] == got["voa"]


def test_operator_matches_pointwise():
    op = R_operator((1, -1, 1), 3)
    for lam in partitions(2):
        assert op_apply(op, p(*lam)) == R_apply((1, -1, 1), p(*lam))


def test_path_sum_reassembles_R():
    beta = (1, 0)
    total = None
    for g in alt_paths(beta, 2):
        op = path_operator(g, beta, 2)
        total = op if total is None else total + op
    assert op_equal(total, R_operator(beta, 2), 2)


def test_valley_weights():
    beta = (1, 0)
    assert AltPath((2, -1, 0, 0)).valley_weight(beta) == 1
    g = AltPath((2, 0, 0, -1))
    assert g.in_R(beta)
    assert g.heights(beta) == [0, 1, 0]
    assert g.valley_weight(beta) == qt
    assert not AltPath((0, 0, 1, 0)).in_R(beta)


def test_product_operator():
    betas = [(1,), (1, -1)]
    f = p(1)
    assert op_apply(R_product_operator(betas, 2), f) == R_product_apply(betas, f)
    assert R_product_apply(betas, f, "voa") == R_product_apply(betas, f)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_psi_roundtrip(alpha):
    assert psi(psi_inv(alpha)) == tuple(alpha)


def test_psi_domain():
    with pytest.raises(ValueError):
        psi((0, 1))
    with pytest.raises(ValueError):
        psi_inv(())


def test_Q_is_R_through_psi():
    assert Q_apply((1, 0), SymFunc.one()) == R_apply(psi_inv((1, 0)), SymFunc.one())


def test_A_engines_agree():
    F = WeightSpec([1, 1])
    assert op_equal(A_op(F, 1, 2, "commutator"), A_op(F, 1, 2, "pathsum"), 2)
