"""Exact Gaussian-rational scalars.

Values are ``re + im*i`` with arbitrary-precision rational parts.  The
rational type is :class:`gmpy2.mpq` when gmpy2 is importable and
:class:`fractions.Fraction` otherwise; both reduce automatically, so the
canonical form of a value is unique.
"""
from __future__ import annotations

import numbers
from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction

__all__ = ["GaussianRational", "Rational", "as_exact", "det2", "is_exact_scalar"]

_RATIONAL_TYPES = (int, Fraction, type(Rational(0)))


def _to_rational(x):
    if isinstance(x, bool):
        return Rational(int(x))
    if isinstance(x, _RATIONAL_TYPES):
        return Rational(x)
    if isinstance(x, str):
        return Rational(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """An element of Q(i) with exact arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_rational(re)
        self.im = _to_rational(im)

    @classmethod
    def _new(cls, re, im):
        z = object.__new__(cls)
        z.re = re
        z.im = im
        return z

    # coercion -----------------------------------------------------------
    @staticmethod
    def _parts(other):
        if isinstance(other, GaussianRational):
            return other.re, other.im
        if isinstance(other, _RATIONAL_TYPES):
            return Rational(other), Rational(0)
        return None

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, (float, complex)):
                return complex(self) + other
            return NotImplemented
        return self._new(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, (float, complex)):
                return complex(self) - other
            return NotImplemented
        return self._new(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, (float, complex)):
                return other - complex(self)
            return NotImplemented
        return self._new(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, (float, complex)):
                return complex(self) * other
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        if not b and not d:
            return self._new(a * c, b)
        return self._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, (float, complex)):
                return complex(self) / other
            return NotImplemented
        c, d = p
        den = c * c + d * d
        if not den:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return self._new((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, (float, complex)):
                return other / complex(self)
            return NotImplemented
        return self._new(*p) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (GaussianRational(1) / self) ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return self._new(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return self._new(self.re, -self.im)

    conj = conjugate

    def abs2(self):
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        return abs(complex(self))

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, numbers.Complex):
                return complex(self) == other
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # conversion ---------------------------------------------------------
    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def __repr__(self):
        return f"GaussianRational({_qstr(self.re)!r}, {_qstr(self.im)!r})"

    def __str__(self):
        """Machine text ``p/q+r/s i`` (imaginary part omitted when zero)."""
        if not self.im:
            return _qstr(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{_qstr(self.re)}{sign}{_qstr(abs(self.im))} i"


def _qstr(q) -> str:
    q = Rational(q)
    num, den = q.numerator, q.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def is_exact_scalar(x) -> bool:
    return isinstance(x, (GaussianRational,) + _RATIONAL_TYPES)


def as_exact(x) -> GaussianRational:
    """Convert an int/rational/GaussianRational to :class:`GaussianRational`.

    Floats are rejected: the exact carrier never guesses at binary fractions.
    """
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, _RATIONAL_TYPES):
        return GaussianRational(x)
    raise TypeError(f"{x!r} is not an exact scalar")


def det2(op):
    """Determinant ``m1*m4 - m2*m3`` of a 2x2 operator.

    ``op`` may be a :class:`~slocc.state.LocalOperator` or any 4-sequence in
    row-major order.
    """
    m1, m2, m3, m4 = op
    return m1 * m4 - m2 * m3
