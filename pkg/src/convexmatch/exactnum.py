"""Exact rational scalars and the ordered ring R[w]/(w^3) of quadratic jets.

All geometry in this package runs over exact rationals.  ``Scalar`` is
gmpy2's ``mpq`` when available (about 10x faster than ``fractions.Fraction``)
and ``Fraction`` otherwise; both are arbitrary-precision, canonical
(positive denominator, reduced) rationals.  ``Jet`` adjoins an infinitesimal
``w`` with ``w**3 == 0``; jets are ordered lexicographically by coefficients,
which matches the sign of the represented polynomial for all sufficiently
small real ``w > 0``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

try:
    from gmpy2 import mpq as _mpq

    Scalar = _mpq
    _RATIONAL_TYPES = (int, type(_mpq(0)), Fraction)
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = Fraction
    Scalar = Fraction
    _RATIONAL_TYPES = (int, Fraction)

ZERO = _mpq(0)
ONE = _mpq(1)


def Q(value, den=None):
    """Build an exact rational from int, string 'p/q', Fraction or mpq."""
    if den is not None:
        return _mpq(value, den)
    if isinstance(value, str):
        s = value.strip()
        if "/" in s:
            num, _, d = s.partition("/")
            return _mpq(int(num), int(d))
        return _mpq(int(s))
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass rationals")
    return _mpq(value)


def format_scalar(x) -> str:
    """Serialize a rational as 'p' or 'p/q' (q > 1 only)."""
    num, den = x.numerator, x.denominator
    return f"{num}" if den == 1 else f"{num}/{den}"


def is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES) or isinstance(x, Rational)


def isqrt_ceil_ratio(p: int, q: int) -> int:
    """Smallest integer k >= 0 with k*k >= p/q, for p >= 0, q > 0."""
    if p <= 0:
        return 0
    k = isqrt((p + q - 1) // q)
    while k * k * q < p:
        k += 1
    while k >= 1 and (k - 1) * (k - 1) * q >= p:
        k -= 1
    return k


def _as_coeff(x):
    if is_rational(x):
        return _mpq(x)
    raise TypeError(f"cannot use {type(x).__name__} as a jet coefficient")


class Jet:
    """Element c0 + c1*w + c2*w**2 of R[w]/(w^3), w an infinitesimal > 0.

    Total order is lexicographic on (c0, c1, c2).  Division requires an
    invertible element (c0 != 0).
    """

    __slots__ = ("c0", "c1", "c2")

    def __init__(self, c0, c1=0, c2=0):
        self.c0 = _as_coeff(c0)
        self.c1 = _as_coeff(c1)
        self.c2 = _as_coeff(c2)

    @classmethod
    def lift(cls, x):
        return x if isinstance(x, Jet) else cls(x)

    def coeffs(self):
        return (self.c0, self.c1, self.c2)

    def __repr__(self):
        return f"Jet({self.c0}, {self.c1}, {self.c2})"

    def __hash__(self):
        if self.c1 == 0 and self.c2 == 0:
            return hash(self.c0)
        return hash((self.c0, self.c1, self.c2))

    def __bool__(self):
        return bool(self.c0) or bool(self.c1) or bool(self.c2)

    def __neg__(self):
        return Jet(-self.c0, -self.c1, -self.c2)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self < 0 else self

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)
        if is_rational(other):
            return Jet(self.c0 + other, self.c1, self.c2)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet(self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)
        if is_rational(other):
            return Jet(self.c0 - other, self.c1, self.c2)
        return NotImplemented

    def __rsub__(self, other):
        if is_rational(other):
            return Jet(other - self.c0, -self.c1, -self.c2)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Jet):
            a0, a1, a2 = self.c0, self.c1, self.c2
            b0, b1, b2 = other.c0, other.c1, other.c2
            return Jet(a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0)
        if is_rational(other):
            return Jet(self.c0 * other, self.c1 * other, self.c2 * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        if not self.c0:
            raise ZeroDivisionError("jet with zero real part is not invertible")
        b0, b1, b2 = self.c0, self.c1, self.c2
        i0 = 1 / _mpq(b0)
        i1 = -b1 * i0 * i0
        i2 = (b1 * b1 - b0 * b2) * i0 * i0 * i0
        return Jet(i0, i1, i2)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.inverse()
        if is_rational(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            return Jet(self.c0 / other, self.c1 / other, self.c2 / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Jet(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _cmp(self, other):
        other = Jet.lift(other)
        if self.c0 != other.c0:
            return -1 if self.c0 < other.c0 else 1
        if self.c1 != other.c1:
            return -1 if self.c1 < other.c1 else 1
        if self.c2 != other.c2:
            return -1 if self.c2 < other.c2 else 1
        return 0

    def __eq__(self, other):
        if isinstance(other, Jet) or is_rational(other):
            return self._cmp(other) == 0
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, Jet) or is_rational(other):
            return self._cmp(other) != 0
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Jet) or is_rational(other):
            return self._cmp(other) < 0
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Jet) or is_rational(other):
            return self._cmp(other) <= 0
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Jet) or is_rational(other):
            return self._cmp(other) > 0
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Jet) or is_rational(other):
            return self._cmp(other) >= 0
        return NotImplemented


OMEGA = Jet(0, 1, 0)


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Product in R[w]/(w^3): degree >= 3 terms are dropped."""
    return Jet.lift(a) * Jet.lift(b)


def jet_cmp(a, b) -> int:
    """-1, 0 or 1: the sign of a - b for all sufficiently small w > 0."""
    return Jet.lift(a)._cmp(b)


def real_part(x):
    """The w -> 0 limit of a scalar or jet."""
    return x.c0 if isinstance(x, Jet) else x
