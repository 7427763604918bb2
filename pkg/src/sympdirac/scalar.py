"""Exact Gaussian rationals."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

RATIONAL = "rational"
GAUSSIAN = "gaussian"
SCALAR_MODES = (RATIONAL, GAUSSIAN)


class ScalarModeError(ValueError):
    """An imaginary value was requested while running in rational mode."""


def check_mode(mode: str) -> str:
    if mode not in SCALAR_MODES:
        raise ValueError(f"unknown scalar mode {mode!r}; expected one of {SCALAR_MODES}")
    return mode


class Scalar:
    """Element ``re + im*i`` of Q(i), both parts held as ``Fraction``.

    Instances are immutable and hashable. Ints, Fractions and other
    Scalars mix freely in arithmetic.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = re if type(re) is Fraction else Fraction(re)
        self._im = im if type(im) is Fraction else Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @classmethod
    def i(cls) -> "Scalar":
        return cls(0, 1)

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def conjugate(self) -> "Scalar":
        return Scalar(self._re, -self._im)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self._re, -self._im)

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        den = self._re * self._re + self._im * self._im
        if not den:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar(self._re / den, -self._im / den)

    def __truediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        if not self._im:
            return f"Scalar({str(self._re)!r})"
        return f"Scalar({str(self._re)!r}, {str(self._im)!r})"

    def __str__(self):
        if not self._im:
            return str(self._re)
        if not self._re:
            return f"{self._im}i"
        sign = "+" if self._im > 0 else "-"
        return f"{self._re}{sign}{abs(self._im)}i"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
