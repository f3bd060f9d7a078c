"""Alternating paths and the path operators R_beta, Q_alpha.

Three engines compute R_beta on a homogeneous input:

* ``paths``: sum over every alternating path above gamma_beta, applying the
  operator word step by step (rightmost step first).
* ``increments``: sum over valley increment tuples of weighted products of
  the D_k operators.
* ``voa``: left-to-right iterated coefficient extraction (module laurent).

Engines work on matrices whose columns are input vectors, so the same code
applies an operator to one function or materializes a whole block.  They run
in Schur coordinates, where every step operator has integer polynomial
entries; results are converted back to the p-basis.

Height bound: on inputs of degree <= d, a word whose suffix step sums drop
below -d vanishes, so every point of a contributing path has height at most
|beta| + d.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .linop import (
    GradedOperator, WindowError, block_s_to_p, commutator, compose, d_block_s,
    graded_vectors, from_graded, identity, is_zero_matrix, mat_add, mat_scale,
    matmul, mult_op, op_add, op_scale, step_block_s, vector_p_to_s, vector_s_to_p,
    D_op,
)
from .partitions import n_partitions
from .qt_field import M, ONE, QtScalar, qt
from .symfunc import SymFunc, e

ENGINES = ("paths", "increments", "voa")


def _prefix(beta):
    out = [0]
    for b in beta:
        out.append(out[-1] + b)
    return out


class AltPath:
    """Alternating path with steps (g_1, ..., g_2n); odd steps up, even steps down."""

    __slots__ = ("steps",)

    def __init__(self, steps):
        steps = tuple(int(x) for x in steps)
        if len(steps) % 2:
            raise ValueError("an alternating path has an even number of steps")
        for i, g in enumerate(steps):
            if (i % 2 == 0 and g < 0) or (i % 2 == 1 and g > 0):
                raise ValueError(f"step {i + 1} of {steps} has the wrong direction")
        self.steps = steps

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, AltPath) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"AltPath({self.steps})"

    @property
    def points(self):
        return _prefix(self.steps)

    @property
    def valleys(self):
        """y-coordinates y_0, y_2, ..., y_2n."""
        return self.points[0::2]

    @property
    def peaks(self):
        return self.points[1::2]

    @property
    def degree(self):
        return sum(self.steps)

    def heights(self, beta):
        s = _prefix(beta)
        return [y - s[j] for j, y in enumerate(self.valleys)]

    def in_R(self, beta) -> bool:
        if len(self.steps) != 2 * len(beta) or self.degree != sum(beta):
            return False
        return all(h >= 0 for h in self.heights(beta))

    def valley_weight_exponent(self, beta) -> int:
        return sum(self.heights(beta))

    def valley_weight(self, beta) -> QtScalar:
        return qt ** self.valley_weight_exponent(beta)


def gamma_of(beta) -> AltPath:
    steps = []
    for b in beta:
        steps += [max(0, b), min(0, b)]
    return AltPath(steps)


# -- applying words ----------------------------------------------------------------------

def _apply_word(steps, mat, d):
    """Apply O(steps[0]) ... O(steps[-1]) to a matrix at degree d; None if zero."""
    for m in reversed(steps):
        blk = step_block_s(m, d)
        if blk is None:
            return None
        mat = matmul(blk, mat)
        d += m
        if is_zero_matrix(mat):
            return None
    return mat


def _per_degree(f: SymFunc, fn):
    """Apply fn(matrix, degree) -> (matrix, out_degree) to each homogeneous part.

    fn sees and returns Schur coordinates; input and output are p-based.
    """
    out = {}
    for d, v in graded_vectors(f).items():
        res = fn([[x] for x in vector_p_to_s(v, d)], d)
        if res is None:
            continue
        mat, deg = res
        if mat is None or deg < 0:
            continue
        col = vector_s_to_p([row[0] for row in mat], deg)
        if deg in out:
            out[deg] = [a + b for a, b in zip(out[deg], col)]
        else:
            out[deg] = col
    return from_graded(out)


def path_op_apply(gamma: AltPath, beta, f: SymFunc) -> SymFunc:
    """vw_beta(gamma) O(g_1) ... O(g_2n) f."""
    if not isinstance(gamma, AltPath):
        gamma = AltPath(gamma)
    if not gamma.in_R(beta):
        raise ValueError(f"{gamma} is not in R_{tuple(beta)}")
    w = gamma.valley_weight(beta)

    def fn(mat, d):
        res = _apply_word(gamma.steps, mat, d)
        return (mat_scale(res, w) if res is not None else None), d + gamma.degree

    return _per_degree(f, fn)


def alt_paths(beta, d: int):
    """All paths of R_beta that can act nontrivially on degree d (points <= |beta| + d)."""
    beta = tuple(beta)
    L = len(beta)
    S = _prefix(beta)
    top = S[-1] + d
    if top < 0:
        return
    if L == 0:
        yield AltPath(())
        return

    def rec(j, y, steps):
        # y is the valley y_2j
        if j == L:
            if y == S[-1]:
                yield AltPath(steps)
            return
        for peak in range(y, top + 1):
            lo = S[-1] if j == L - 1 else S[j + 1]
            for nxt in range(lo, peak + 1):
                if j == L - 1 and nxt != S[-1]:
                    continue
                yield from rec(j + 1, nxt, steps + [peak - y, nxt - peak])

    yield from rec(0, 0, [])


def word_operator(steps, window: int) -> GradedOperator:
    """O(steps[0]) ... O(steps[-1]) on sources of degree <= window."""
    op = None
    shift = 0
    for m in reversed(steps):
        w = max(window + shift, 0)
        blocks = {dd: b for dd in range(w + 1) if (b := step_block_s(m, dd)) is not None}
        cur = GradedOperator(m, w, {dd: block_s_to_p(b, dd, m) for dd, b in blocks.items()})
        op = cur if op is None else compose(cur, op)
        shift += m
    if op is None:
        return GradedOperator(0, window, {dd: identity(n_partitions(dd)) for dd in range(window + 1)})
    return op.restrict(window)


def path_operator(gamma: AltPath, beta, window: int) -> GradedOperator:
    """vw_beta(gamma) O(gamma), materialized."""
    if not gamma.in_R(beta):
        raise ValueError(f"{gamma} is not in R_{tuple(beta)}")
    return op_scale(word_operator(gamma.steps, window), gamma.valley_weight(beta))


# -- engines ---------------------------------------------------------------------------

def _acc(acc, mat):
    return mat if acc is None else mat_add(acc, mat)


def _paths_engine(beta, mat, d, stats=None):
    """Sum over alternating paths, built from the right end."""
    L = len(beta)
    n = sum(beta)
    S = _prefix(beta)
    top = n + d
    if L == 0:
        return mat
    if n + d < 0:
        return None
    acc = [None]
    qt_pows = {}

    def weight(k):
        if k not in qt_pows:
            qt_pows[k] = qt ** k
        return qt_pows[k]

    def dfs(k, y, cur, wexp):
        # steps k+1..2L applied; cur sits at degree d + n - y
        deg = d + n - y
        if k == 0:
            if stats is not None:
                stats["paths"] = stats.get("paths", 0) + 1
            acc[0] = _acc(acc[0], mat_scale(cur, weight(wexp)) if wexp else cur)
            return
        if k % 2 == 0:
            # step k goes down into y, position k-1 is a peak
            choices = range(y, top + 1)
        else:
            j = (k - 1) // 2
            if j == 0:
                choices = range(0, 1) if y >= 0 else range(0)
            else:
                choices = range(S[j], min(y, top) + 1)
        for yp in choices:
            step = y - yp
            blk = step_block_s(step, deg)
            if blk is None:
                continue
            nxt = matmul(blk, cur)
            if is_zero_matrix(nxt):
                continue
            extra = (yp - S[(k - 1) // 2]) if k % 2 == 1 else 0
            dfs(k - 1, yp, nxt, wexp + extra)

    dfs(2 * L, n, mat, 0)
    return acc[0]


def increment_tuples(beta, d):
    """Valley increment tuples with nonzero action on degree d."""
    L = len(beta)
    n = sum(beta)
    S = _prefix(beta)
    top = n + d
    if L == 0:
        yield (), 0
        return
    ranges = [range(S[j], top + 1) for j in range(1, L)]
    for mid in product(*ranges):
        s = (0,) + mid + (n,)
        r = tuple(s[j] - s[j - 1] for j in range(1, L + 1))
        yield r, sum(s[j] - S[j] for j in range(1, L))


def _increments_engine(beta, mat, d):
    n = sum(beta)
    if n + d < 0:
        return None
    acc = None
    for r, wexp in increment_tuples(beta, d):
        cur = mat
        deg = d
        for k in reversed(r):
            blk = d_block_s(k, deg)
            if blk is None:
                cur = None
                break
            cur = matmul(blk, cur)
            deg += k
            if is_zero_matrix(cur):
                cur = None
                break
        if cur is None:
            continue
        acc = _acc(acc, mat_scale(cur, qt ** wexp) if wexp else cur)
    return acc


def _run_engine(beta, mat, d, engine):
    if engine == "paths":
        return _paths_engine(tuple(beta), mat, d)
    if engine == "increments":
        return _increments_engine(tuple(beta), mat, d)
    if engine == "voa":
        from .laurent import voa_matrix
        return voa_matrix([tuple(beta)], mat, d)
    raise ValueError(f"unknown engine {engine!r}")


def R_apply(beta, f: SymFunc, engine: str = "increments") -> SymFunc:
    beta = tuple(beta)
    n = sum(beta)
    return _per_degree(f, lambda mat, d: (_run_engine(beta, mat, d, engine), d + n))


def R_product_apply(betas, f: SymFunc, engine: str = "increments") -> SymFunc:
    """R_{beta^(1)} ... R_{beta^(m)} f, rightmost factor first."""
    betas = [tuple(b) for b in betas]
    if engine == "voa":
        from .laurent import voa_apply
        return voa_apply(betas, f)
    for beta in reversed(betas):
        f = R_apply(beta, f, engine)
    return f


@lru_cache(maxsize=None)
def R_operator(beta, window: int, engine: str = "increments") -> GradedOperator:
    beta = tuple(beta)
    n = sum(beta)
    blocks = {}
    for d in range(max(0, -n), window + 1):
        res = _run_engine(beta, identity(n_partitions(d)), d, engine)
        if res is not None:
            blocks[d] = block_s_to_p(res, d, n)
    return GradedOperator(n, window, blocks)


def R_product_operator(betas, window: int, engine: str = "increments") -> GradedOperator:
    betas = tuple(tuple(b) for b in betas)
    if engine == "voa":
        from .laurent import voa_matrix
        total = sum(sum(b) for b in betas)
        blocks = {}
        for d in range(max(0, -total), window + 1):
            res = voa_matrix(list(betas), identity(n_partitions(d)), d)
            if res is not None:
                blocks[d] = block_s_to_p(res, d, total)
        return GradedOperator(total, window, blocks)
    shifts = [sum(b) for b in betas]
    # each factor needs a window large enough for the degrees it sees
    op = None
    for i in range(len(betas) - 1, -1, -1):
        inner = sum(shifts[i + 1:])
        factor = R_operator(betas[i], max(window + inner, 0), engine)
        op = factor if op is None else compose(factor, op)
    return op.restrict(window) if op.window >= window else op


# -- the psi reparametrization -------------------------------------------------------------

def psi(beta) -> tuple:
    beta = tuple(beta)
    if not beta or beta[0] <= 0 or any(b < 0 for b in beta[1:]):
        raise ValueError(f"psi needs beta in Z_>0 x Z_>=0^(l-1), got {beta}")
    alpha = []
    for idx, b in enumerate(beta):
        alpha += [0] * b
        if idx < len(beta) - 1:
            alpha[-1] += 1
    return tuple(alpha)


def psi_inv(alpha) -> tuple:
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("psi_inv is undefined on the empty sequence")
    if any(a < 0 for a in alpha):
        raise ValueError(f"psi_inv needs nonnegative entries, got {alpha}")
    length = 1 + sum(alpha)
    beta = [0] * length
    peak = 0
    beta[0] = 1
    for a in alpha[:-1]:
        peak += a
        beta[peak] += 1
    return tuple(beta)


def Q_apply(alpha, f: SymFunc, engine: str = "increments") -> SymFunc:
    return R_apply(psi_inv(alpha), f, engine)


def Q_operator(alpha, window: int, engine: str = "increments") -> GradedOperator:
    return R_operator(psi_inv(tuple(alpha)), window, engine)


# -- path extensions and particle moves -------------------------------------------------------

def extend_step(gamma: AltPath, j: int, kmax: int):
    """Extensions of step j with new step size k <= kmax, with their valley pair."""
    g = list(gamma.steps)
    r = g[j - 1]
    out = []
    if r == 0:
        return out
    for k in range(1, kmax + 1):
        for i in range(1, min(k, abs(r)) + 1):
            new = (k, -(k - i), r - i) if r > 0 else (r + i, k - i, -k)
            steps = g[:j - 1] + list(new) + g[j:]
            gp = AltPath(steps)
            x = 2 * (j // 2)
            pts = gp.points
            out.append((gp, pts[x], pts[x + 2]))
    return out


def gamma_plus(gamma: AltPath, i: int):
    """Raise the 2i-th step by one when it is a genuine down step, else None."""
    g = list(gamma.steps)
    if g[2 * i - 1] >= 0:
        return None
    g[2 * i - 1] += 1
    return AltPath(g)


def alpha_plus(alpha, i):
    a = list(alpha)
    a[i - 1] += 1
    return tuple(a)


def alpha_insert(alpha, i, m):
    """(alpha_1, ..., alpha_i, m, alpha_{i+1}, ...)."""
    return tuple(alpha[:i]) + (m,) + tuple(alpha[i:])


def alpha_split(alpha, i, r1, r2):
    return tuple(alpha[:i - 1]) + (r1, r2) + tuple(alpha[i:])


# -- the A_F operator family -----------------------------------------------------------------

@lru_cache(maxsize=None)
def ad_e1(i: int, window: int) -> GradedOperator:
    """ad^i_{D_0/(-M)}(-e_1), materialized on at least the given window."""
    if i == 0:
        return mult_op(-e(1), window)
    # D_0 keeps degrees, so the commutator needs it one degree past the window
    inner = ad_e1(i - 1, window)
    d0 = op_scale(D_op(0, window + 1), -M.inverse())
    return commutator(d0, inner)


def A_F(F, window: int) -> GradedOperator:
    acc = None
    for i, a in enumerate(F.a):
        if a == 0:
            continue
        term = op_scale(ad_e1(i, window), QtScalar(a))
        acc = term if acc is None else op_add(acc, term)
    return acc


@lru_cache(maxsize=None)
def A_op(F, ell: int, window: int, engine: str = "commutator", q_engine: str = "paths") -> GradedOperator:
    """A_F^(ell) on sources of degree <= window."""
    if ell < 1:
        raise ValueError("A_F^(ell) is defined for ell >= 1")
    if engine == "commutator":
        if ell == 1:
            d0 = op_scale(D_op(0, window + 1), -M.inverse())
            res = commutator(d0, A_F(F, window))
        else:
            prev = A_op(F, ell - 1, window + 1, "commutator")
            res = op_scale(commutator(A_F(F, window + ell - 1), prev), M.inverse())
        if res.window < window:
            raise WindowError("internal window bookkeeping failed")
        return res.restrict(window)
    if engine == "pathsum":
        acc = None
        K = F.degree
        for alpha in product(range(K + 1), repeat=ell):
            c = ONE
            for a in alpha:
                c = c * QtScalar(F.coeff(a))
            if not c:
                continue
            term = op_scale(Q_operator(alpha, window, q_engine), c)
            acc = term if acc is None else op_add(acc, term)
        return acc
    raise ValueError(f"unknown engine {engine!r}")


def q_sym_operator(alpha, window: int, engine: str = "increments") -> GradedOperator:
    from itertools import permutations
    acc = None
    for perm in permutations(range(len(alpha))):
        op = Q_operator(tuple(alpha[i] for i in perm), window, engine)
        acc = op if acc is None else op_add(acc, op)
    return acc
