"""Homogeneous linear operators on symmetric functions, stored per degree.

A block for source degree ``d`` is a dense matrix ``rows = target p-basis of
degree d+shift``, ``columns = source p-basis of degree d``, both indexed in
``partitions(n)`` order.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import partitions, partition_index, n_partitions, union
from .qt_field import ONE, ZERO, DivisionByZero, QtScalar
from .symfunc import SymFunc, convert, _one_row_p, scale_M, skew_p


class WindowError(ValueError):
    pass


# -- dense matrices over QtScalar -------------------------------------------------

def zeros(r, c):
    return [[ZERO] * c for _ in range(r)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def matmul(a, b):
    if not a or not b:
        return zeros(len(a), len(b[0]) if b else 0)
    n, k, m = len(a), len(b), len(b[0])
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for j in range(k):
            x = row[j]
            if not x:
                continue
            brow = b[j]
            for l in range(m):
                y = brow[l]
                if y:
                    acc[l] = acc[l] + x * y
    return out


def matvec(a, v):
    out = [ZERO] * len(a)
    nz = [(j, x) for j, x in enumerate(v) if x]
    for i, row in enumerate(a):
        acc = ZERO
        for j, x in nz:
            y = row[j]
            if y:
                acc = acc + y * x
        out[i] = acc
    return out


def mat_add(a, b, sign=1):
    if sign == 1:
        return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, c):
    c = QtScalar(c)
    return [[x * c for x in r] for r in a]


def transpose(a, ncols=None):
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a):
    return all(not x for r in a for x in r)


def _row_reduce(a):
    """Reduced row echelon form; returns (rref, pivot columns)."""
    a = [list(r) for r in a]
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def nullspace(a):
    """Basis of the right kernel of ``a`` as a list of column vectors."""
    cols = len(a[0]) if a else 0
    red, pivots = _row_reduce(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def mat_inverse(a):
    n = len(a)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(a)]
    red, pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise DivisionByZero("singular matrix")
    return [r[n:] for r in red]


def det(a):
    n = len(a)
    a = [list(r) for r in a]
    out = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out = out * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


# -- vectors <-> SymFunc ------------------------------------------------------------

def to_vector(f: SymFunc, n: int, basis: str = "p"):
    fp = convert(f, basis)
    idx = partition_index(n)
    v = [ZERO] * len(idx)
    for lam, c in fp.coeffs.items():
        if sum(lam) != n:
            raise ValueError(f"component of degree {sum(lam)} in a degree-{n} vector")
        v[idx[lam]] = c
    return v


def from_vector(v, n: int) -> SymFunc:
    parts = partitions(n)
    return SymFunc._raw("p", {parts[i]: c for i, c in enumerate(v) if c})


def graded_vectors(f: SymFunc) -> dict:
    fp = convert(f, "p")
    out = {}
    for lam, c in fp.coeffs.items():
        n = sum(lam)
        if n not in out:
            out[n] = [ZERO] * n_partitions(n)
        out[n][partition_index(n)[lam]] = c
    return out


def from_graded(vecs: dict) -> SymFunc:
    coeffs = {}
    for n, v in vecs.items():
        parts = partitions(n)
        for i, c in enumerate(v):
            if c:
                coeffs[parts[i]] = c
    return SymFunc._raw("p", coeffs)


# -- the operator type ----------------------------------------------------------------

class GradedOperator:
    """Linear map raising degree by ``shift``, known on sources of degree <= window."""

    __slots__ = ("shift", "window", "blocks")

    def __init__(self, shift: int, window: int, blocks=None):
        self.shift = shift
        self.window = window
        self.blocks = {}
        for d, blk in (blocks or {}).items():
            if d < 0 or d > window or d + shift < 0:
                continue
            if len(blk) != n_partitions(d + shift) or any(len(r) != n_partitions(d) for r in blk):
                raise ValueError(f"block at degree {d} has wrong shape")
            if not is_zero_matrix(blk):
                self.blocks[d] = blk

    def source_degrees(self):
        return range(max(0, -self.shift), self.window + 1)

    def block(self, d):
        if d > self.window:
            raise WindowError(f"degree {d} is outside the window {self.window}")
        blk = self.blocks.get(d)
        if blk is None:
            return zeros(n_partitions(d + self.shift), n_partitions(d))
        return blk

    def restrict(self, window: int) -> "GradedOperator":
        if window > self.window:
            raise WindowError(f"cannot extend window {self.window} to {window}")
        return GradedOperator(self.shift, window,
                              {d: b for d, b in self.blocks.items() if d <= window})

    def apply(self, f: SymFunc) -> SymFunc:
        return op_apply(self, f)

    def __call__(self, f):
        return op_apply(self, f)

    def __add__(self, other):
        return op_add(self, other)

    def __sub__(self, other):
        return op_add(self, other, -1)

    def __neg__(self):
        return op_scale(self, -1)

    def __mul__(self, c):
        return op_scale(self, c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f"GradedOperator(shift={self.shift}, window={self.window}, blocks={sorted(self.blocks)})"

    def to_json(self):
        return {"shift": self.shift, "window": self.window,
                "blocks": {str(d): [[x.to_json() for x in r] for r in b]
                           for d, b in sorted(self.blocks.items())}}


def zero_op(shift, window):
    return GradedOperator(shift, window, {})


def identity_op(window):
    return GradedOperator(0, window, {d: identity(n_partitions(d)) for d in range(window + 1)})


def op_apply(op: GradedOperator, f: SymFunc) -> SymFunc:
    out = {}
    for d, v in graded_vectors(f).items():
        if d > op.window:
            raise WindowError(f"input degree {d} exceeds operator window {op.window}")
        if d + op.shift < 0 or d not in op.blocks:
            continue
        out[d + op.shift] = matvec(op.blocks[d], v)
    return from_graded(out)


def op_from_action(action, shift: int, window: int) -> GradedOperator:
    blocks = {}
    for d in range(max(0, -shift), window + 1):
        tgt = d + shift
        cols = []
        for mu in partitions(d):
            img = convert(action(SymFunc._raw("p", {mu: ONE})), "p")
            bad = [lam for lam in img.coeffs if sum(lam) != tgt]
            if bad:
                raise ValueError(f"action maps degree {d} outside degree {tgt}: {bad[0]}")
            cols.append(to_vector(img, tgt))
        blocks[d] = transpose(cols, n_partitions(tgt)) if cols else []
    return GradedOperator(shift, window, blocks)


def op_add(a, b, sign=1):
    if a.shift != b.shift:
        raise ValueError(f"cannot add operators of shifts {a.shift} and {b.shift}")
    window = min(a.window, b.window)
    blocks = {}
    for d in range(max(0, -a.shift), window + 1):
        x, y = a.blocks.get(d), b.blocks.get(d)
        if x is None and y is None:
            continue
        if x is None:
            blocks[d] = y if sign == 1 else mat_scale(y, -1)
        elif y is None:
            blocks[d] = x
        else:
            blocks[d] = mat_add(x, y, sign)
    return GradedOperator(a.shift, window, blocks)


def op_scale(a, c):
    c = QtScalar(c)
    return GradedOperator(a.shift, a.window, {d: mat_scale(b, c) for d, b in a.blocks.items()})


def op_sum(ops, shift=None, window=None):
    ops = list(ops)
    if not ops:
        return zero_op(shift or 0, window or 0)
    acc = ops[0]
    for o in ops[1:]:
        acc = op_add(acc, o)
    return acc


def compose(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    """The operator ``a o b`` (b applied first)."""
    window = min(b.window, a.window - b.shift)
    if window < 0:
        raise WindowError("composition has an empty window")
    shift = a.shift + b.shift
    blocks = {}
    for d in range(max(0, -shift, -b.shift), window + 1):
        bb = b.blocks.get(d)
        ab = a.blocks.get(d + b.shift)
        if bb is None or ab is None:
            continue
        blocks[d] = matmul(ab, bb)
    return GradedOperator(shift, window, blocks)


def commutator(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    return op_add(compose(a, b), compose(b, a), -1)


op_commutator = commutator


@lru_cache(maxsize=None)
def star_gram(n: int):
    """Diagonal of the star Gram matrix on the p-basis of degree n."""
    from .symfunc import star_weight
    return tuple(star_weight(mu) for mu in partitions(n))


def op_star_adjoint(a: GradedOperator) -> GradedOperator:
    """Adjoint for the star scalar product: block G_d^-1 B^T G_{d+k}."""
    k = a.shift
    window = a.window + k
    if window < 0:
        raise WindowError("adjoint has an empty window")
    blocks = {}
    for d, blk in a.blocks.items():
        gd = star_gram(d)
        ge = star_gram(d + k)
        blocks[d + k] = [[blk[j][i] * ge[j] / gd[i] for j in range(len(ge))]
                         for i in range(len(gd))]
    return GradedOperator(-k, window, blocks)


def op_equal(a: GradedOperator, b: GradedOperator, window: int) -> bool:
    if a.shift != b.shift:
        raise ValueError(f"shift mismatch: {a.shift} vs {b.shift}")
    if window > a.window or window > b.window:
        raise WindowError(f"window {window} exceeds operator windows {a.window}, {b.window}")
    for d in range(max(0, -a.shift), window + 1):
        x, y = a.blocks.get(d), b.blocks.get(d)
        if x is None and y is None:
            continue
        if x is None:
            if not is_zero_matrix(y):
                return False
        elif y is None:
            if not is_zero_matrix(x):
                return False
        elif x != y:
            return False
    return True


def op_difference(a, b, window):
    """First (degree, row, col, lhs, rhs) where a and b differ, else None."""
    for d in range(max(0, -a.shift), window + 1):
        x, y = a.block(d), b.block(d)
        for i, (r, s) in enumerate(zip(x, y)):
            for j, (u, v) in enumerate(zip(r, s)):
                if u != v:
                    return d, i, j, u, v
    return None


# -- the basic step operators ------------------------------------------------------------

@lru_cache(maxsize=None)
def mult_block(g_key, d):
    """Block of multiplication by the p-expansion ``g_key`` (tuple of (mu, c))."""
    k = sum(g_key[0][0]) if g_key else 0
    tgt = d + k
    idx = partition_index(tgt)
    out = zeros(n_partitions(tgt), n_partitions(d))
    for j, mu in enumerate(partitions(d)):
        for nu, c in g_key:
            out[idx[union(nu, mu)]][j] += c
    return out


@lru_cache(maxsize=None)
def skew_block(g_key, d):
    k = sum(g_key[0][0]) if g_key else 0
    tgt = d - k
    idx = partition_index(tgt)
    out = zeros(n_partitions(tgt), n_partitions(d))
    for j, mu in enumerate(partitions(d)):
        for nu, c in g_key:
            r = skew_p(nu, mu)
            if r is not None:
                out[idx[r[0]]][j] += c * r[1]
    return out


def _key(f: SymFunc):
    fp = convert(f, "p")
    return tuple(sorted(((lam, c) for lam, c in fp.coeffs.items()), key=lambda x: x[0]))


def mult_op(g: SymFunc, window: int) -> GradedOperator:
    k = g.degree()
    key = _key(g)
    return GradedOperator(k, window, {d: mult_block(key, d) for d in range(window + 1)})


def skew_op(g: SymFunc, window: int) -> GradedOperator:
    k = g.degree()
    key = _key(g)
    return GradedOperator(-k, window, {d: skew_block(key, d) for d in range(k, window + 1)})


@lru_cache(maxsize=None)
def _e_key(m):
    c = (-1) ** m
    return tuple(sorted(((mu, QtScalar(x * c)) for mu, x in _one_row_p("e", m).items()),
                        key=lambda x: x[0]))


@lru_cache(maxsize=None)
def _hM_key(n):
    out = []
    for mu, x in _one_row_p("h", n).items():
        w = QtScalar(x)
        for k in mu:
            w = w * scale_M(k)
        out.append((mu, w))
    return tuple(sorted(out, key=lambda x: x[0]))


def step_block(m: int, d: int):
    """Block at source degree d of the step operator O(m).

    O(m) is multiplication by (-1)^m e_m for m > 0, skewing by h_{-m}[MX] for
    m < 0 and the identity for m = 0.  Returns None when the block is zero.
    """
    if m == 0:
        return _identity_block(d)
    if m > 0:
        return mult_block(_e_key(m), d)
    if d + m < 0:
        return None
    return skew_block(_hM_key(-m), d)


@lru_cache(maxsize=None)
def _identity_block(d):
    return identity(n_partitions(d))


def step_op(m: int, window: int) -> GradedOperator:
    return GradedOperator(m, window, {d: b for d in range(window + 1)
                                      if (b := step_block(m, d)) is not None})


@lru_cache(maxsize=None)
def d_block(k: int, d: int):
    """Block of D_k = sum_{m-n=k} O(m) O(-n) at source degree d."""
    tgt = d + k
    if tgt < 0:
        return None
    out = None
    for n in range(0, d + 1):
        m = k + n
        if m < 0:
            continue
        hb = step_block(-n, d)
        eb = step_block(m, d - n)
        prod = matmul(eb, hb)
        out = prod if out is None else mat_add(out, prod)
    return out


def D_op(k: int, window: int) -> GradedOperator:
    return GradedOperator(k, window, {d: b for d in range(window + 1)
                                      if (b := d_block(k, d)) is not None})


def diag_op_from_basis(vectors_by_degree: dict, eigen_by_degree: dict, window: int) -> GradedOperator:
    """Operator with the given eigenvectors (columns, p-basis) and eigenvalues."""
    blocks = {}
    for d in range(window + 1):
        vecs = vectors_by_degree[d]
        evs = eigen_by_degree[d]
        p = transpose(vecs)
        pinv = mat_inverse(p)
        dmat = [[x * evs[j] for j, x in enumerate(r)] for r in p]
        blocks[d] = matmul(dmat, pinv)
    return GradedOperator(0, window, blocks)


# -- Schur coordinates ----------------------------------------------------------------
# Step operators have integer-polynomial matrices in the Schur basis, so path
# engines run there and convert back to the p-basis once per block.

@lru_cache(maxsize=None)
def s_to_p_matrix(n: int):
    """C with p-coordinates = C . s-coordinates."""
    from .symfunc import transition_to_p
    rows = transition_to_p("s", n)
    return tuple(tuple(QtScalar(rows[j][i]) for j in range(len(rows))) for i in range(len(rows)))


@lru_cache(maxsize=None)
def p_to_s_matrix(n: int):
    from .symfunc import transition_from_p
    rows = transition_from_p("s", n)
    return tuple(tuple(QtScalar(rows[j][i]) for j in range(len(rows))) for i in range(len(rows)))


def block_p_to_s(blk, d, k):
    return matmul(matmul([list(r) for r in p_to_s_matrix(d + k)], blk), [list(r) for r in s_to_p_matrix(d)])


def block_s_to_p(blk, d, k):
    return matmul(matmul([list(r) for r in s_to_p_matrix(d + k)], blk), [list(r) for r in p_to_s_matrix(d)])


def vector_p_to_s(v, n):
    return matvec(p_to_s_matrix(n), v)


def vector_s_to_p(v, n):
    return matvec(s_to_p_matrix(n), v)


@lru_cache(maxsize=None)
def step_block_s(m: int, d: int):
    blk = step_block(m, d)
    return None if blk is None else block_p_to_s(blk, d, m)


@lru_cache(maxsize=None)
def d_block_s(k: int, d: int):
    blk = d_block(k, d)
    return None if blk is None else block_p_to_s(blk, d, k)
