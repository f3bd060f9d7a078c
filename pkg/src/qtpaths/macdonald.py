"""Modified Macdonald polynomials as eigenvectors of D_0, and diagonal operators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linop import (
    GradedOperator, d_block, diag_op_from_basis, from_vector, mat_inverse,
    nullspace, transpose,
)
from .partitions import add_cell_set, cells, partitions
from .qt_field import M, ONE, ZERO, QtScalar, monomial, qt_substitute
from .symfunc import SymFunc, convert, star


def b_stat(lam) -> QtScalar:
    total = ZERO
    for i, j in cells(lam):
        total = total + monomial(j - 1, i - 1)
    return total


def cell_weights(lam):
    """The monomials q^(j-1) t^(i-1), one per cell."""
    return [monomial(j - 1, i - 1) for i, j in cells(lam)]


class EigenspaceError(ArithmeticError):
    pass


@dataclass
class MacData:
    n: int
    parts: tuple
    htilde: dict = field(default_factory=dict)     # lam -> SymFunc in the s-basis
    vectors: dict = field(default_factory=dict)    # lam -> p-basis coefficient vector
    eigenvalue: dict = field(default_factory=dict)
    norm_star: dict = field(default_factory=dict)
    b: dict = field(default_factory=dict)

    def to_json(self):
        return {"n": self.n, "polynomials": [
            {"partition": list(lam),
             "htilde": self.htilde[lam].to_json(),
             "eigenvalue": self.eigenvalue[lam].to_json(),
             "norm_star": self.norm_star[lam].to_json(),
             "B": self.b[lam].to_json()} for lam in self.parts]}


@lru_cache(maxsize=None)
def mac_basis(n: int) -> MacData:
    """Solve the D_0 eigenproblem on degree n, normalizing the s_(n) coefficient to 1."""
    parts = partitions(n)
    data = MacData(n, parts)
    block = d_block(0, n)
    for lam in parts:
        bl = b_stat(lam)
        ev = 1 - M * bl
        shifted = [[x - ev if i == j else x for j, x in enumerate(r)] for i, r in enumerate(block)]
        ker = nullspace(shifted)
        if len(ker) != 1:
            raise EigenspaceError(f"eigenspace for {lam} has dimension {len(ker)}")
        v = ker[0]
        # <f, h_n> is the s_(n) coefficient and <p_mu, h_n> = 1
        lead = ZERO
        for x in v:
            lead = lead + x
        if not lead:
            raise EigenspaceError(f"eigenvector for {lam} has no s_({n}) component")
        inv = lead.inverse()
        v = [x * inv for x in v]
        f = from_vector(v, n)
        data.vectors[lam] = v
        data.htilde[lam] = convert(f, "s")
        data.eigenvalue[lam] = ev
        data.b[lam] = bl
        data.norm_star[lam] = star(f, f)
    return data


def htilde(lam) -> SymFunc:
    return mac_basis(sum(lam)).htilde[tuple(lam)]


def expand_in_mac(f: SymFunc) -> dict:
    """Coefficients c_lam with f = sum c_lam Htilde_lam, by star projection."""
    fp = convert(f, "p")
    out = {}
    for n in sorted({sum(lam) for lam in fp.coeffs}):
        data = mac_basis(n)
        comp = fp.component(n)
        for lam in data.parts:
            c = star(comp, from_vector(data.vectors[lam], n))
            if c:
                out[lam] = c / data.norm_star[lam]
    return out


def pieri_coeffs(mu) -> dict:
    """Expansion of -e_1 * Htilde_mu in the Macdonald basis one degree up."""
    from .symfunc import e, mul
    mu = tuple(mu)
    f = -mul(e(1), SymFunc.single("Htilde", mu) if mu else SymFunc.one())
    coeffs = expand_in_mac(f)
    allowed = set(add_cell_set(mu))
    bad = [lam for lam in coeffs if lam not in allowed]
    if bad:
        raise ArithmeticError(f"Pieri expansion of {mu} hits {bad[0]}, not a one-cell addition")
    return coeffs


# -- weights and diagonal operators -------------------------------------------------------

class WeightSpec:
    """Polynomial weight F(x) = sum a_i x^i with rational a_i and a_0 = 1."""

    def __init__(self, coeffs):
        a = [Fraction(c) for c in coeffs]
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if not a or a[0] != 1:
            raise ValueError("weight spec needs a_0 = 1")
        self.a = tuple(a)

    @classmethod
    def parse(cls, text: str) -> "WeightSpec":
        return cls([Fraction(x.strip()) for x in text.split(",") if x.strip()])

    @property
    def degree(self):
        return len(self.a) - 1

    def coeff(self, i):
        return self.a[i] if 0 <= i < len(self.a) else Fraction(0)

    def __call__(self, x) -> QtScalar:
        return qt_substitute([QtScalar(c) for c in self.a], x)

    def total(self) -> Fraction:
        return sum(self.a, Fraction(0))

    def __eq__(self, other):
        return isinstance(other, WeightSpec) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return f"WeightSpec({[str(x) for x in self.a]})"


ONE_WEIGHT = WeightSpec([1])


def elem_of_alphabet(xs, n):
    acc = [ONE] + [ZERO] * n
    for x in xs:
        for k in range(n, 0, -1):
            acc[k] = acc[k] + acc[k - 1] * x
    return acc[n]


def homog_of_alphabet(xs, n):
    acc = [ONE] + [ZERO] * n
    for x in xs:
        for k in range(1, n + 1):
            acc[k] = acc[k] + acc[k - 1] * x
    return acc[n]


def delta_eigenvalue(kind: str, n: int, lam) -> QtScalar:
    xs = cell_weights(lam)
    if kind == "e":
        return elem_of_alphabet(xs, n)
    if kind == "h":
        return homog_of_alphabet(xs, n)
    if kind == "e_prime":
        total = ZERO
        for i in range(n + 1):
            term = elem_of_alphabet(xs, n - i)
            total = total + term if i % 2 == 0 else total - term
        return total
    raise ValueError(f"unknown delta kind {kind!r}")


def diagonal_op(eigen, window: int) -> GradedOperator:
    """Shift-0 operator with Htilde_lam as eigenvectors, eigenvalue eigen(lam)."""
    vecs, evs = {}, {}
    for d in range(window + 1):
        data = mac_basis(d)
        vecs[d] = [data.vectors[lam] for lam in data.parts]
        evs[d] = [QtScalar(eigen(lam)) for lam in data.parts]
    return diag_op_from_basis(vecs, evs, window)


def delta_op(kind: str, n: int, window: int) -> GradedOperator:
    return diagonal_op(lambda lam: delta_eigenvalue(kind, n, lam), window)


def pi_eigenvalue(g1: WeightSpec, g2: WeightSpec, lam) -> QtScalar:
    out = ONE
    for (i, j), x in zip(cells(lam), cell_weights(lam)):
        den = g2(x)
        if not den:
            raise ZeroDivisionError(f"G2 vanishes at cell ({i},{j})")
        out = out * g1(x) / den
    return out


def pi_op(g1: WeightSpec, g2: WeightSpec, window: int) -> GradedOperator:
    return diagonal_op(lambda lam: pi_eigenvalue(g1, g2, lam), window)


def mac_change_of_basis(n: int):
    """Matrix with the p-vectors of Htilde_lam as columns, and its inverse."""
    data = mac_basis(n)
    p = transpose([data.vectors[lam] for lam in data.parts])
    return p, mat_inverse(p)
