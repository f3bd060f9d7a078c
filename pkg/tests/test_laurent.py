import pytest

from qtpaths.laurent import (
    LaurentSeries, exchange_kernel, exchange_sides, expansion_coeff, explicit_rhs,
    normal_ordered_sides,
)
from qtpaths.paths import R_product_apply
from qtpaths.qt_field import q, qt
from qtpaths.symfunc import SymFunc, convert


def test_series_arithmetic():
    x = LaurentSeries(1, {(1,): qt})
    one = LaurentSeries.one(1)
    assert (one + x) * (one - x) == one - x * x
    assert (x - x)[(1,)] == 0


@pytest.mark.parametrize("a,b", [(0, 0), (1, -1), (2, -3), (-2, 3), (3, 3)])
def test_d_exchange(a, b):
    lhs, rhs = exchange_sides(a, b, 2)
    assert lhs == rhs


def test_normal_ordered_exchange():
    lhs, rhs = normal_ordered_sides(1, -1, 2)
    assert lhs == rhs


def test_wrong_kernel_breaks_exchange():
    bad = exchange_kernel(q)
    assert any(l != r for a, b in [(1, -1), (0, 1), (2, -1)]
               for l, r in zip(*exchange_sides(a, b, 2, bad)))


@pytest.mark.parametrize("betas", [[(1,)], [(2, -1)], [(1, 0), (1,)], [(-1, 2), (1, 1)]])
def test_explicit_matches_operators(betas):
    assert explicit_rhs(betas) == convert(R_product_apply(betas, SymFunc.one()), "p")


def test_expansion_sides():
    betas = [(1, 0), (1,)]
    f = R_product_apply(betas, SymFunc.one())
    for side, basis in [("schur", "s"), ("monomial", "m"), ("elementary", "e")]:
        g = convert(f, basis)
        for lam in [(2,), (1, 1)]:
            assert expansion_coeff(betas, lam, side) == g[lam]
