"""Exact arithmetic in the rational function field Q(q, t).

A :class:`QtScalar` is a reduced fraction of two integer polynomials in
``q`` and ``t``.  Polynomials are FLINT ``fmpz_mpoly`` objects; the GCD,
products and exact divisions all run inside FLINT.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

import flint

CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "lex")
IntPoly2 = flint.fmpz_mpoly

_ZERO_POLY = CTX.from_dict({})
_ONE_POLY = CTX.from_dict({(0, 0): 1})


def int_poly(terms) -> IntPoly2:
    """Build an integer polynomial from ``{(a, b): c}`` meaning ``c q^a t^b``."""
    return CTX.from_dict({k: int(v) for k, v in dict(terms).items() if v})


def poly_terms(p: IntPoly2) -> list[tuple[int, int, int]]:
    """Terms ``(c, a, b)`` of ``p`` sorted by exponent pair ascending."""
    return sorted(((int(c), int(a), int(b)) for (a, b), c in p.to_dict().items()),
                  key=lambda x: (x[1], x[2]))


class DivisionByZero(ZeroDivisionError):
    pass


class QtScalar:
    """Element of Q(q, t), stored as ``num / den`` in lowest terms.

    The denominator's term with the lexicographically least exponent pair is
    positive, so equal field elements compare equal structurally.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if isinstance(num, QtScalar):
            if den is not None:
                raise TypeError("den given with a QtScalar numerator")
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        n = _to_poly_pair(num)
        if den is None:
            self.num, self.den = n
        else:
            d = _to_poly_pair(den)
            self.num, self.den = _reduce(n[0] * d[1], n[1] * d[0])
            return
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def fraction(cls, num: IntPoly2, den: IntPoly2) -> "QtScalar":
        n, d = _reduce(num, den)
        return cls._raw(n, d)

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other):
        if not isinstance(other, QtScalar):
            try:
                other = QtScalar(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QtScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b.is_one() and d.is_one():
            return QtScalar._raw(a + c, b)
        if b == d:
            return QtScalar._raw(*_reduce(a + c, b))
        if b.is_constant() and d.is_constant():
            return QtScalar._raw(*_reduce(a * d + c * b, b * d))
        g = b.gcd(d)
        if g.is_one():
            return QtScalar._raw(*_reduce(a * d + c * b, b * d))
        b1 = b / g
        d1 = d / g
        return QtScalar._raw(*_reduce(a * d1 + c * b1, b1 * d))

    __radd__ = __add__

    def __neg__(self):
        return QtScalar._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, QtScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QtScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return ZERO
        if b.is_one() and d.is_one():
            return QtScalar._raw(a * c, b)
        if b.is_constant() and d.is_constant():
            return QtScalar._raw(*_reduce(a * c, b * d))
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        return QtScalar._raw(*_normalize_sign(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self) -> "QtScalar":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in Q(q,t)")
        return QtScalar._raw(*_normalize_sign(self.den, self.num))

    def __truediv__(self, other):
        if not isinstance(other, QtScalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QtScalar._raw(self.num ** k, self.den ** k)

    # -- evaluation / conversion --------------------------------------------
    def evaluate(self, q, t) -> Fraction:
        """Specialize ``q`` and ``t`` to rational numbers."""
        q, t = Fraction(q), Fraction(t)
        n = _eval_poly(self.num, q, t)
        d = _eval_poly(self.den, q, t)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at q={q}, t={t}")
        return n / d

    def as_fraction(self) -> Fraction:
        """Value of a constant scalar as a Fraction."""
        if not (self.num.is_constant() and self.den.is_constant()):
            raise ValueError(f"{self} is not a rational constant")
        return Fraction(int(self.num.coefficient(0)) if not self.num.is_zero() else 0,
                        int(self.den.coefficient(0)))

    def to_json(self) -> dict:
        return {"num": [[str(c), a, b] for c, a, b in poly_terms(self.num)],
                "den": [[str(c), a, b] for c, a, b in poly_terms(self.den)]}

    @classmethod
    def from_json(cls, obj) -> "QtScalar":
        if isinstance(obj, (int, str)):
            return cls(int(obj))
        num = int_poly({(a, b): int(c) for c, a, b in obj["num"]})
        den = int_poly({(a, b): int(c) for c, a, b in obj.get("den", [["1", 0, 0]])})
        if den.is_zero():
            raise DivisionByZero("zero denominator in QtScalar JSON")
        return cls.fraction(num, den)

    def __repr__(self):
        if self.den.is_one():
            return f"QtScalar({self.num})"
        return f"QtScalar(({self.num})/({self.den}))"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _eval_poly(p, q, t):
    return sum((Fraction(int(c)) * q ** int(a) * t ** int(b) for (a, b), c in p.to_dict().items()),
               Fraction(0))


def _normalize_sign(num, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator in Q(q,t)")
    # lex order lists terms by decreasing exponent; the last one is the least
    if den.coeffs()[-1] < 0:
        return -num, -den
    return num, den


def _reduce(num, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator in Q(q,t)")
    if num.is_zero():
        return _ZERO_POLY, _ONE_POLY
    if den.is_constant():
        c = int(den.coefficient(0))
        g = igcd(int(num.content()), c)
        if g != 1:
            num = num / g
            den = den / g
            c //= g
        if c < 0:
            num, den = -num, -den
        return num, den
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    return _normalize_sign(num, den)


def _to_poly_pair(x):
    if isinstance(x, bool):
        raise TypeError("bool is not a field element")
    if isinstance(x, int):
        return CTX.from_dict({(0, 0): x} if x else {}), _ONE_POLY
    if isinstance(x, Fraction):
        return (CTX.from_dict({(0, 0): x.numerator} if x else {}),
                CTX.from_dict({(0, 0): x.denominator}))
    if isinstance(x, flint.fmpz_mpoly):
        return x, _ONE_POLY
    if isinstance(x, QtScalar):
        return x.num, x.den
    raise TypeError(f"cannot interpret {type(x).__name__} as an element of Q(q,t)")


def _coerce(x):
    try:
        n, d = _to_poly_pair(x)
    except TypeError:
        return None
    if d.is_one():
        return QtScalar._raw(n, d)
    return QtScalar._raw(*_reduce(n, d))


ZERO = QtScalar(0)
ONE = QtScalar(1)
q = QtScalar(CTX.gens()[0])
t = QtScalar(CTX.gens()[1])
qt = q * t
M = (1 - q) * (1 - t)
MBAR = q + t - 1


def qt_arith(x: QtScalar, y: QtScalar, kind: str) -> QtScalar:
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    raise ValueError(f"unknown operation {kind!r}")


_BASES = {"q": q, "t": t, "qt": qt, "q/t": q / t, "t/q": t / q}


def q_int(m: int, base="q") -> QtScalar:
    """The q-integer ``[m]_x``; ``base`` is a QtScalar or one of
    ``'q', 't', 'qt', 'q/t', 't/q'``.

    ``[m] = 1 + x + ... + x^(m-1)`` for ``m > 0``, ``-(1 + x + ... + x^(-m-1))``
    for ``m < 0`` and ``0`` for ``m = 0``.
    """
    x = _BASES[base] if isinstance(base, str) else QtScalar(base)
    total, power = ZERO, ONE
    for _ in range(abs(m)):
        total = total + power
        power = power * x
    return total if m >= 0 else -total


def qt_substitute(coeffs, point) -> QtScalar:
    """Evaluate ``sum(coeffs[i] * x**i)`` at ``x = point`` (Horner)."""
    point = QtScalar(point)
    acc = ZERO
    for c in reversed(list(coeffs)):
        acc = acc * point + c
    return acc


def monomial(a: int, b: int, c=1) -> QtScalar:
    """``c q^a t^b`` with possibly negative exponents."""
    num = int_poly({(max(a, 0), max(b, 0)): c})
    den = int_poly({(max(-a, 0), max(-b, 0)): 1})
    return QtScalar.fraction(num, den)
