import pytest

from qtpaths.linop import (
    D_op, GradedOperator, WindowError, commutator, compose, det, from_vector, identity,
    identity_op, mat_inverse, matmul, mult_op, op_apply, op_equal, op_star_adjoint, s_to_p_matrix,
    p_to_s_matrix, skew_op, star_gram, to_vector,
)
from qtpaths.macdonald import b_stat, htilde
from qtpaths.partitions import partitions
from qtpaths.qt_field import M, ONE, q, t
from qtpaths.symfunc import SymFunc, convert, e, p, s, star


def test_det_and_inverse():
    a = [[q, ONE], [ONE, t]]
    assert det(a) == q * t - 1
    assert matmul(a, mat_inverse(a)) == identity(2)


def test_vector_roundtrip():
    f = convert(s(2, 1) + q * s(3), "p")
    assert from_vector(to_vector(f, 3), 3) == f
    assert to_vector(s(2, 1), 3, "s") == [ONE if lam == (2, 1) else 0 for lam in partitions(3)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_schur_transition_inverse(n):
    assert matmul(s_to_p_matrix(n), p_to_s_matrix(n)) == identity(len(partitions(n)))


def test_multiplication_operator():
    op = mult_op(e(1), 3)
    assert op.shift == 1
    assert convert(op_apply(op, p(2)), "p") == p(2, 1)


def test_skewing_lowers_degree():
    op = skew_op(p(1), 3)
    assert op.shift == -1
    # p_1^perp p_1^2 = 2 p_1
    assert convert(op_apply(op, p(1, 1)), "p") == p(1) * 2


def test_window_is_enforced():
    op = identity_op(2)
    with pytest.raises(WindowError):
        op.block(3)


def test_commutator_of_mult_and_skew():
    # [p_1^perp, p_1] = 1
    c = commutator(skew_op(p(1), 3), mult_op(p(1), 2))
    assert op_equal(c, identity_op(2), 2)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3,)])
def test_D0_eigenvalue(lam):
    f = htilde(lam)
    got = op_apply(D_op(0, 3), f)
    assert convert(got, "p") == convert(f, "p").scale(1 - M * b_stat(lam))


def test_star_adjoint_pairs():
    a = compose(mult_op(e(1), 2), D_op(0, 2))
    adj = op_star_adjoint(a)
    f, g = convert(s(2), "p"), convert(s(2, 1), "p")
    assert star(op_apply(a, f), g) == star(f, op_apply(adj, g))


def test_star_gram_is_diagonal_star():
    g = star_gram(2)
    for i, lam in enumerate(partitions(2)):
        assert g[i] == star(p(*lam), p(*lam))


def test_operator_json():
    data = identity_op(1).to_json()
    assert data["shift"] == 0
    assert isinstance(GradedOperator(0, 1), GradedOperator)
