"""Truncated Laurent series in z_1..z_l and coefficient extraction.

Ratios z_j/z_i with i < j are always expanded as power series in z_j/z_i.
Exponent vectors are 0-based internally; the public factor functions take
1-based variable indices as in the formulas they implement.
"""

from __future__ import annotations

from functools import lru_cache

from .linop import d_block, d_block_s, identity, is_zero_matrix, mat_add, mat_scale, matmul
from .partitions import conjugate, make_partition, n_partitions
from .qt_field import ONE, ZERO, QtScalar, q, qt, t
from .symfunc import SymFunc, eval_monomials


class LaurentSeries:
    """Finitely supported map exponent vector -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        out = {}
        for ex, c in (terms or {}).items():
            ex = tuple(ex)
            if len(ex) != nvars:
                raise ValueError(f"exponent {ex} has the wrong number of variables")
            if c:
                out[ex] = c
        self.terms = out

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: ONE})

    def __getitem__(self, ex):
        return self.terms.get(tuple(ex), ZERO)

    coefficient = __getitem__

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for ex, c in other.terms.items():
            out[ex] = out[ex] + c if ex in out else c
        return LaurentSeries(self.nvars, out)

    def __neg__(self):
        return LaurentSeries(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, LaurentSeries) and self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def mul(self, other, keep=None):
        """Product; terms whose exponent fails ``keep`` are dropped."""
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                ex = tuple(i + j for i, j in zip(a, b))
                if keep is not None and not keep(ex):
                    continue
                v = x * y
                out[ex] = out[ex] + v if ex in out else v
        return LaurentSeries(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return self.mul(other)
        return LaurentSeries(self.nvars, {k: v * other for k, v in self.terms.items()})

    def __repr__(self):
        return f"LaurentSeries({self.nvars}, {self.terms})"


def _ratio_exp(nvars, i, j, n):
    ex = [0] * nvars
    ex[i - 1] -= n
    ex[j - 1] += n
    return tuple(ex)


def series_in_ratio(coeffs, i, j, nvars=None):
    """sum_n coeffs[n] (z_j/z_i)^n as a LaurentSeries."""
    if i >= j:
        raise ValueError(f"ratio z_{j}/z_{i} must have i < j")
    nvars = nvars or j
    return LaurentSeries(nvars, {_ratio_exp(nvars, i, j, n): c for n, c in enumerate(coeffs)})


def geom_coeffs(c, T):
    c = QtScalar(c)
    out, pw = [], ONE
    for _ in range(T + 1):
        out.append(pw)
        pw = pw * c
    return out


def _poly_mul(a, b, T):
    out = [ZERO] * (T + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if i + j > T:
                break
            out[i + j] = out[i + j] + x * y
    return out


def geom_factor(c, i: int, j: int, T: int, nvars=None) -> LaurentSeries:
    """sum_{n=0}^T c^n (z_j/z_i)^n."""
    return series_in_ratio(geom_coeffs(c, T), i, j, nvars)


def omega_coeffs(T, with_qt=True):
    """Coefficients of (1-x)(1-qt x)/((1-qx)(1-tx)) up to x^T (without the
    (1-qt x) factor when with_qt is False)."""
    num = [ONE, -ONE]
    if with_qt:
        num = _poly_mul(num, [ONE, -qt], T + 1)
    out = _poly_mul(geom_coeffs(q, T), geom_coeffs(t, T), T)
    return _poly_mul(out, num, T)


def omega_factor(i: int, j: int, T: int, nvars=None) -> LaurentSeries:
    return series_in_ratio(omega_coeffs(T), i, j, nvars)


# -- concatenations ----------------------------------------------------------------------

def flatten(betas):
    flat, ends = [], set()
    for b in betas:
        flat.extend(b)
        ends.add(len(flat))
    return tuple(flat), ends


def non_consecutive_indices(betas):
    """Pairs (i, j), 1-based, that carry no qt-denominator in the VOA formula."""
    flat, ends = flatten(betas)
    L = len(flat)
    out = set()
    for i in range(1, L + 1):
        for j in range(i + 1, L + 1):
            if j > i + 1 or i in ends:
                out.add((i, j))
    return out


def _truncation(flat, d=0):
    return sum(max(b, 0) for b in flat) + d + 1


def pair_factor_coeffs(betas, T):
    """Per pair (i, j): coefficients of the series in z_j/z_i of the explicit
    formula's rational factor."""
    flat, _ = flatten(betas)
    L = len(flat)
    ni = non_consecutive_indices(betas)
    base_no = omega_coeffs(T, with_qt=False)
    base_ni = omega_coeffs(T, with_qt=True)
    return {(i, j): (base_ni if (i, j) in ni else base_no)
            for i in range(1, L + 1) for j in range(i + 1, L + 1)}


def rational_factor(betas, T=None, prune=True) -> LaurentSeries:
    """prod_{i<j} (1-x)/((1-qx)(1-tx)) prod_NI (1-qt x), x = z_j/z_i, truncated.

    With ``prune`` the partial products drop terms whose prefix exponent sums
    are already too negative to contribute to [z^beta] against any monomial
    with nonnegative exponents; this is exact because every further factor
    only lowers those prefix sums.
    """
    betas = tuple(tuple(b) for b in betas)
    return _rational_factor(betas, T, prune)


@lru_cache(maxsize=4096)
def _rational_factor(betas, T, prune) -> LaurentSeries:
    flat, _ = flatten(betas)
    L = len(flat)
    n = sum(flat)
    if T is None:
        T = _truncation(flat)
    S = [0]
    for b in flat:
        S.append(S[-1] + b)

    def keep(ex):
        acc = 0
        for k in range(L - 1):
            acc += ex[k]
            if -acc > n - S[k + 1]:
                return False
        return True

    out = LaurentSeries.one(L)
    for (i, j), coeffs in pair_factor_coeffs(betas, T).items():
        out = out.mul(series_in_ratio(coeffs, i, j, L), keep if prune else None)
    return out


def explicit_rhs(betas, T=None) -> SymFunc:
    """[z^beta] of the rational factor times Omega[-(z_1+...+z_l) X], as a SymFunc."""
    flat, _ = flatten(betas)
    n = sum(flat)
    if n < 0:
        return SymFunc.zero("e")
    if not flat:
        return SymFunc.one("e")
    R = rational_factor(betas, T)
    sign = -1 if n % 2 else 1
    coeffs = {}
    for ex, c in R.terms.items():
        gamma = [b - x for b, x in zip(flat, ex)]
        if any(g < 0 for g in gamma):
            continue
        lam = make_partition(gamma)
        coeffs[lam] = coeffs.get(lam, ZERO) + c * sign
    return SymFunc("e", coeffs)


def expansion_coeff(betas, lam, side: str, T=None) -> QtScalar:
    """Dual-Cauchy extraction; equals (-1)^n times the coefficient of
    s_lam / m_lam / e_lam in R_betas . 1."""
    flat, _ = flatten(betas)
    lam = make_partition(lam)
    if sum(lam) != sum(flat):
        raise ValueError(f"|lambda| = {sum(lam)} differs from the total size {sum(flat)}")
    L = len(flat)
    if side not in _SIDES:
        raise ValueError(f"unknown side {side!r}")
    zpart = _z_side(side, lam, L)
    R = rational_factor(betas, T)
    total = ZERO
    for ex, c in zpart.terms.items():
        need = tuple(b - x for b, x in zip(flat, ex))
        total = total + c * R[need]
    return total


_SIDES = {"schur": "s", "monomial": "e", "elementary": "m"}


@lru_cache(maxsize=None)
def _z_side(side, lam, L):
    """The Z-alphabet factor of the dual Cauchy pairing, on z_1..z_L."""
    g = SymFunc.single(_SIDES[side], conjugate(lam) if side == "schur" else lam)
    units = [tuple(int(a == b) for b in range(L)) for a in range(L)]
    return eval_monomials(g, units)


# -- the VOA engine ------------------------------------------------------------------------

def voa_matrix(betas, mat, d):
    """R_betas applied to the columns of ``mat`` (degree d, Schur coordinates), by left-to-right
    extraction.  Between consecutive indices of one block the denominator
    1/(1 - qt z_{i+1}/z_i) carries the valley height h as a power of qt;
    at block ends only h = 0 survives."""
    flat, ends = flatten(betas)
    L = len(flat)
    n = sum(flat)
    if n + d < 0:
        return None
    if L == 0:
        return mat
    S = [0]
    for b in flat:
        S.append(S[-1] + b)
    top = d + n
    # family[h]: operator from degree top - S[m] - h to degree top
    family = {0: identity(n_partitions(top))}
    for m in range(L):
        nxt = {}
        hmax = 0 if (m + 1) in ends else top - S[m + 1]
        for h_new in range(0, hmax + 1):
            src = top - S[m + 1] - h_new
            acc = None
            for h, op in family.items():
                r = h_new + flat[m] - h
                blk = d_block_s(r, src)
                if blk is None:
                    continue
                prod = matmul(op, blk)
                acc = prod if acc is None else mat_add(acc, prod)
            if acc is None or is_zero_matrix(acc):
                continue
            if (m + 1) not in ends and h_new:
                acc = mat_scale(acc, qt ** h_new)
            nxt[h_new] = acc
        family = nxt
        if not family:
            return None
    op = family.get(0)
    if op is None:
        return None
    res = matmul(op, mat)
    return None if is_zero_matrix(res) else res


def voa_apply(betas, f: SymFunc) -> SymFunc:
    from .paths import _per_degree
    betas = [tuple(b) for b in betas]
    n = sum(sum(b) for b in betas)
    return _per_degree(f, lambda mat, d: (voa_matrix(betas, mat, d), d + n))


# -- the exchange relation of D(z) -------------------------------------------------------
# omega(z1/z2) D(z1) D(z2) = omega(z2/z1) D(z2) D(z1) is read after clearing the
# denominators (1 - q u)(1 - t u)(1 - q/u)(1 - t/u), u = z1/z2: both sides then have
# finitely many terms per coefficient of z1^a z2^b.

def _laurent_poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, ZERO) + x * y
    return {k: v for k, v in out.items() if v}


def exchange_kernel(c=qt) -> dict:
    """u-expansion of (1 - u)(1 - c u)(1 - q/u)(1 - t/u); c = qt is the true kernel."""
    out = {0: ONE}
    for f in ({0: ONE, 1: -ONE}, {0: ONE, 1: -QtScalar(c)}, {0: ONE, -1: -q}, {0: ONE, -1: -t}):
        out = _laurent_poly_mul(out, f)
    return out


def _dd_block(i, j, d):
    """D_i D_j at source degree d, or None when it vanishes."""
    if d + j < 0 or d + i + j < 0:
        return None
    inner = d_block(j, d)
    outer = d_block(i, d + j)
    if inner is None or outer is None:
        return None
    return matmul(outer, inner)


def _sum_blocks(pairs, d, rows, cols):
    acc = [[ZERO] * cols for _ in range(rows)]
    for c, (i, j) in pairs:
        blk = _dd_block(i, j, d)
        if blk is not None:
            acc = mat_add(acc, mat_scale(blk, c))
    return acc


def exchange_sides(a: int, b: int, d: int, kernel=None):
    """[z1^a z2^b] of L(z1/z2) D(z1) D(z2) and of L(z1/z2) D(z2) D(z1), at source degree d.

    With L the cleared kernel, D(z2) D(z1) pairs with L(u) = L'(1/u), so the
    right side reads sum_c l_c D_{b-c} D_{a+c}.
    """
    kernel = exchange_kernel() if kernel is None else kernel
    rows, cols = n_partitions(max(d + a + b, 0)), n_partitions(d)
    if d + a + b < 0:
        return [], []
    lhs = _sum_blocks([(c, (a - k, b + k)) for k, c in kernel.items()], d, rows, cols)
    rhs = _sum_blocks([(c, (b - k, a + k)) for k, c in kernel.items()], d, rows, cols)
    return lhs, rhs


def normal_ordered_sides(a: int, b: int, d: int):
    """[z1^a z2^b] of D(z1)D(z2)/omega(z2/z1) and of D(z2)D(z1)/omega(z1/z2), each
    expanded in the ratio that makes the sums finite on degree d."""
    if d + a + b < 0:
        return [], []
    # D_{b-n} kills degree d once b - n < -d
    T = b + d if b + d >= a + d else a + d
    T = max(T, 0)
    inv = _poly_mul(_poly_mul(geom_coeffs(ONE, T), geom_coeffs(qt, T), T),
                    _poly_mul([ONE, -q], [ONE, -t], T), T)
    rows, cols = n_partitions(d + a + b), n_partitions(d)
    lhs = _sum_blocks([(c, (a + n, b - n)) for n, c in enumerate(inv)], d, rows, cols)
    rhs = _sum_blocks([(c, (b + n, a - n)) for n, c in enumerate(inv)], d, rows, cols)
    return lhs, rhs
