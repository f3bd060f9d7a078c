"""Symmetric functions over Q(q,t) with finite support.

Everything pivots through the power-sum basis: a SymFunc in any basis is
converted to ``p`` for arithmetic, and transition matrices between ``p`` and
the classical bases are computed once per degree with Fraction entries.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import (
    make_partition, partitions, partition_index, remove_sub, union, z_const,
)
from .qt_field import ONE, ZERO, QtScalar, q, t

BASES = ("p", "m", "e", "h", "s", "Htilde")


def _clean(coeffs):
    return {lam: c for lam, c in coeffs.items() if c}


class SymFunc:
    """A symmetric function ``sum(coeffs[lam] * b_lam)`` in basis ``b``."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        out = {}
        for lam, c in (coeffs or {}).items():
            lam = make_partition(lam)
            c = QtScalar(c)
            if c:
                out[lam] = out.get(lam, ZERO) + c
        self.coeffs = _clean(out)

    @classmethod
    def _raw(cls, basis, coeffs):
        obj = object.__new__(cls)
        obj.basis = basis
        obj.coeffs = coeffs
        return obj

    @classmethod
    def one(cls, basis="p"):
        return cls._raw(basis, {(): ONE})

    @classmethod
    def zero(cls, basis="p"):
        return cls._raw(basis, {})

    @classmethod
    def single(cls, basis, lam, c=1):
        return cls(basis, {tuple(lam): c})

    # -- basic structure ------------------------------------------------------
    def __bool__(self):
        return bool(self.coeffs)

    def degrees(self):
        return sorted({sum(lam) for lam in self.coeffs})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("not a nonzero homogeneous symmetric function")
        return ds[0]

    def component(self, n: int) -> "SymFunc":
        return SymFunc._raw(self.basis, {k: v for k, v in self.coeffs.items() if sum(k) == n})

    def __getitem__(self, lam):
        return self.coeffs.get(tuple(lam), ZERO)

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    # -- linear structure -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc._raw(self.basis, _clean(out))

    def __neg__(self):
        return SymFunc._raw(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = QtScalar(c)
        if not c:
            return SymFunc._raw(self.basis, {})
        return SymFunc._raw(self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return convert(self, "p").coeffs == convert(other, "p").coeffs

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam in sorted(self.coeffs, key=_order_key):
            name = f"{self.basis}{list(lam)}" if lam else "1"
            parts.append(f"({self.coeffs[lam]})*{name}")
        return " + ".join(parts)

    # -- JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {"basis": self.basis,
                "terms": [{"partition": list(lam), "coeff": self.coeffs[lam].to_json()}
                          for lam in sorted(self.coeffs, key=_order_key)]}

    @classmethod
    def from_json(cls, obj) -> "SymFunc":
        if isinstance(obj, (int, str)) and str(obj).strip().lstrip("-").isdigit():
            return cls("p", {(): int(obj)})
        if not isinstance(obj, dict) or "basis" not in obj or "terms" not in obj:
            raise ValueError("SymFunc JSON needs 'basis' and 'terms'")
        coeffs = {}
        for term in obj["terms"]:
            lam = tuple(term["partition"])
            if any((not isinstance(x, int)) or x < 1 for x in lam) or list(lam) != sorted(lam, reverse=True):
                raise ValueError(f"bad partition {term['partition']!r}")
            c = QtScalar.from_json(term["coeff"])
            coeffs[lam] = coeffs.get(lam, ZERO) + c
        return cls(obj["basis"], coeffs)


def _order_key(lam):
    return (sum(lam), tuple(-x for x in lam))


def p(*parts):
    return SymFunc.single("p", make_partition(parts))


def e(n):
    return SymFunc.single("e", (n,) if n else ())


def h(n):
    return SymFunc.single("h", (n,) if n else ())


def s(*parts):
    return SymFunc.single("s", make_partition(parts))


def m(*parts):
    return SymFunc.single("m", make_partition(parts))


# -- transition matrices ---------------------------------------------------------
# _to_p(basis, n)[i][j]: coefficient of p_{mu_j} in b_{lam_i}, lam/mu in partitions(n) order.

def _mat_inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _one_row_p(kind: str, n: int) -> dict:
    """p-expansion of e_n or h_n."""
    out = {}
    for mu in partitions(n):
        c = Fraction(1, z_const(mu))
        if kind == "e" and (n - len(mu)) % 2:
            c = -c
        out[mu] = c
    return out


def _pmul_dicts(a: dict, b: dict) -> dict:
    out = {}
    for mu, x in a.items():
        for nu, y in b.items():
            key = union(mu, nu)
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _mult_p(kind: str, lam) -> dict:
    if not lam:
        return {(): Fraction(1)}
    return _pmul_dicts(_mult_p(kind, lam[1:]), _one_row_p(kind, lam[0]))


def _schur_in_h(lam) -> dict:
    """Jacobi-Trudi: s_lam = det(h_{lam_i - i + j}) as a map h-partition -> int."""
    n = len(lam)
    out = {}
    for perm in permutations(range(n)):
        parts = []
        ok = True
        for i in range(n):
            k = lam[i] - i + perm[i]
            if k < 0:
                ok = False
                break
            if k:
                parts.append(k)
        if not ok:
            continue
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        key = make_partition(parts)
        out[key] = out.get(key, 0) + (-1) ** inv
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _to_p(basis: str, n: int):
    parts = partitions(n)
    idx = partition_index(n)
    size_ = len(parts)
    mat = [[Fraction(0)] * size_ for _ in range(size_)]
    if basis == "p":
        for i in range(size_):
            mat[i][i] = Fraction(1)
    elif basis in ("e", "h"):
        for i, lam in enumerate(parts):
            for mu, c in _mult_p(basis, lam).items():
                mat[i][idx[mu]] = c
    elif basis == "m":
        hmat = _to_p("h", n)
        # <m_lam, h_nu> = delta  =>  M . diag(z) . H^T = I
        ht = [[hmat[j][i] * z_const(parts[i]) for j in range(size_)] for i in range(size_)]
        mat = _mat_inverse(ht)
    elif basis == "s":
        hmat = _to_p("h", n)
        for i, lam in enumerate(parts):
            for nu, c in _schur_in_h(lam).items():
                row = hmat[idx[nu]]
                for j in range(size_):
                    if row[j]:
                        mat[i][j] += c * row[j]
    else:
        raise ValueError(f"no classical transition for basis {basis!r}")
    return tuple(tuple(r) for r in mat)


@lru_cache(maxsize=None)
def _from_p(basis: str, n: int):
    return tuple(tuple(r) for r in _mat_inverse([list(r) for r in _to_p(basis, n)]))


def transition_to_p(basis: str, n: int):
    """Fraction matrix whose row i is the p-expansion of b_{partitions(n)[i]}."""
    return _to_p(basis, n)


def transition_from_p(basis: str, n: int):
    return _from_p(basis, n)


def _apply_matrix(coeffs: dict, mat_for_degree) -> dict:
    out = {}
    for lam, c in coeffs.items():
        n = sum(lam)
        parts = partitions(n)
        row = mat_for_degree(n)[partition_index(n)[lam]]
        for j, x in enumerate(row):
            if x:
                mu = parts[j]
                out[mu] = out.get(mu, ZERO) + c * x
    return _clean(out)


def _htilde_to_p(coeffs: dict) -> dict:
    from .macdonald import mac_basis
    out = {}
    for lam, c in coeffs.items():
        hp = convert(mac_basis(sum(lam)).htilde[lam], "p")
        for mu, x in hp.coeffs.items():
            out[mu] = out.get(mu, ZERO) + c * x
    return _clean(out)


def _p_to_htilde(coeffs: dict) -> dict:
    from .macdonald import expand_in_mac
    out = {}
    for n in sorted({sum(lam) for lam in coeffs}):
        comp = SymFunc._raw("p", {k: v for k, v in coeffs.items() if sum(k) == n})
        out.update(expand_in_mac(comp))
    return out


def convert(f: SymFunc, target: str) -> SymFunc:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if f.basis == "p":
        pc = f.coeffs
    elif f.basis == "Htilde":
        pc = _htilde_to_p(f.coeffs)
    else:
        pc = _apply_matrix(f.coeffs, lambda n: _to_p(f.basis, n))
    if target == "p":
        return SymFunc._raw("p", pc)
    if target == "Htilde":
        return SymFunc._raw("Htilde", _p_to_htilde(pc))
    return SymFunc._raw(target, _apply_matrix(pc, lambda n: _from_p(target, n)))


# -- products, scalar products, plethystic scalings ------------------------------

def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    a = convert(f, "p").coeffs
    b = convert(g, "p").coeffs
    out = {}
    for mu, x in a.items():
        for nu, y in b.items():
            key = union(mu, nu)
            out[key] = out.get(key, ZERO) + x * y
    return SymFunc._raw("p", _clean(out))


def _diag_pair(f, g, weight):
    a = convert(f, "p").coeffs
    b = convert(g, "p").coeffs
    total = ZERO
    for mu, x in a.items():
        y = b.get(mu)
        if y is not None:
            total = total + x * y * weight(mu)
    return total


def hall(f: SymFunc, g: SymFunc) -> QtScalar:
    return _diag_pair(f, g, lambda mu: QtScalar(z_const(mu)))


@lru_cache(maxsize=None)
def p_minus_M(mu) -> QtScalar:
    """p_mu[-M] = (-1)^l(mu) prod (1 - q^mu_i)(1 - t^mu_i)."""
    out = ONE
    for k in mu:
        out = out * (-(1 - q ** k) * (1 - t ** k))
    return out


@lru_cache(maxsize=None)
def star_weight(mu) -> QtScalar:
    return p_minus_M(mu) * z_const(mu)


def star(f: SymFunc, g: SymFunc) -> QtScalar:
    return _diag_pair(f, g, star_weight)


def pleth_diag(f: SymFunc, scale) -> SymFunc:
    """Multiply the coefficient of p_mu by prod scale(mu_i)."""
    cache = {}

    def sc(k):
        if k not in cache:
            cache[k] = QtScalar(scale(k))
        return cache[k]

    out = {}
    for mu, c in convert(f, "p").coeffs.items():
        w = ONE
        for k in mu:
            w = w * sc(k)
        out[mu] = c * w
    return SymFunc._raw("p", _clean(out))


def scale_M(k):
    return (1 - q ** k) * (1 - t ** k)


def scale_minus_M(k):
    return -(1 - q ** k) * (1 - t ** k)


def skew_p(nu, mu):
    """p_nu^perp p_mu as (partition, Fraction) or None."""
    rest = remove_sub(mu, nu)
    if rest is None:
        return None
    return rest, Fraction(z_const(mu), z_const(rest))


def skew_hall(g: SymFunc, f: SymFunc) -> SymFunc:
    """g^perp f, the adjoint of multiplication by g for the Hall product."""
    a = convert(g, "p").coeffs
    b = convert(f, "p").coeffs
    out = {}
    for nu, x in a.items():
        for mu, y in b.items():
            r = skew_p(nu, mu)
            if r is None:
                continue
            rest, c = r
            out[rest] = out.get(rest, ZERO) + x * y * c
    return SymFunc._raw("p", _clean(out))


def eval_monomials(f: SymFunc, args):
    """Substitute the alphabet ``args`` into f.

    ``args`` is a list of ``(coeff, exponent_vector)`` pairs, each a Laurent
    monomial ``coeff * z^exponent``; plain exponent vectors mean coefficient 1.
    """
    from .laurent import LaurentSeries
    mons = []
    nv = None
    for a in args:
        if isinstance(a, tuple) and len(a) == 2 and isinstance(a[1], (tuple, list)):
            c, ex = QtScalar(a[0]), tuple(a[1])
        else:
            c, ex = ONE, tuple(a)
        nv = len(ex) if nv is None else nv
        if len(ex) != nv:
            raise ValueError("monomials with different numbers of variables")
        mons.append((c, ex))
    nv = nv or 0
    pk_cache = {}

    def pk(k):
        if k not in pk_cache:
            terms = {}
            for c, ex in mons:
                key = tuple(k * x for x in ex)
                terms[key] = terms.get(key, ZERO) + c ** k
            pk_cache[k] = LaurentSeries(nv, terms)
        return pk_cache[k]

    total = LaurentSeries(nv, {})
    for mu, c in convert(f, "p").coeffs.items():
        term = LaurentSeries(nv, {(0,) * nv: c})
        for k in mu:
            term = term * pk(k)
        total = total + term
    return total
