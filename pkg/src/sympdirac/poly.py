"""Sparse polynomials in base variables x_1..x_2n and spinor variables q_1..q_n.

Coefficients live in Q(i). Internally a polynomial is stored as two integer
term maps (real and imaginary numerators) over one shared positive
denominator, which lets every linear operator with integer matrix entries
run on plain ints through :mod:`sympdirac.kernels`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, NamedTuple

from . import kernels
from .scalar import Scalar

BASE = "base"
SPINOR = "spinor"


class DimensionMismatch(ValueError):
    pass


class Monomial(NamedTuple):
    xexp: tuple
    qexp: tuple

    @property
    def base_degree(self) -> int:
        return sum(self.xexp)

    @property
    def spinor_degree(self) -> int:
        return sum(self.qexp)

    @property
    def n(self) -> int:
        return len(self.qexp)

    def key(self) -> tuple:
        return self.xexp + self.qexp


def order_key(key: tuple, n: int) -> tuple:
    """Canonical sort key of a flat exponent tuple.

    Graded by (base degree, spinor degree); within a bidegree, exponent
    vectors are compared lexicographically with larger exponents of earlier
    variables first, so ``x1`` precedes ``x2``.
    """
    x = key[: 2 * n]
    q = key[2 * n:]
    return (sum(x), sum(q), tuple(-e for e in x), tuple(-e for e in q))


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _scalar_parts(c: Scalar) -> tuple[int, int, int]:
    """``c = (P + R i) / S`` with integers and ``S > 0``."""
    s = _lcm(c.re.denominator, c.im.denominator)
    return c.re.numerator * (s // c.re.denominator), c.im.numerator * (s // c.im.denominator), s


class SPoly:
    """Immutable sparse spinor-valued polynomial for a fixed half-dimension ``n``."""

    __slots__ = ("n", "_re", "_im", "_den", "_hash")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        re: dict = {}
        im: dict = {}
        den = 1
        if terms:
            items = list(terms.items())
            scal = []
            for mono, c in items:
                key = self._check_key(mono)
                c = Scalar.coerce(c)
                scal.append((key, c))
                den = _lcm(den, _lcm(c.re.denominator, c.im.denominator))
            for key, c in scal:
                if c.re:
                    re[key] = re.get(key, 0) + c.re.numerator * (den // c.re.denominator)
                if c.im:
                    im[key] = im.get(key, 0) + c.im.numerator * (den // c.im.denominator)
        self._set(re, im, den)

    def _check_key(self, mono) -> tuple:
        if isinstance(mono, Monomial):
            key = mono.key()
        else:
            key = tuple(mono)
            if len(key) == 2 and isinstance(key[0], tuple):
                key = tuple(key[0]) + tuple(key[1])
        if len(key) != 3 * self.n or any((type(e) is not int) or e < 0 for e in key):
            raise DimensionMismatch(
                f"monomial {mono!r} does not fit n={self.n} (needs {2 * self.n} x- and {self.n} q-exponents)"
            )
        return key

    def _set(self, re: dict, im: dict, den: int) -> None:
        re = {k: v for k, v in re.items() if v}
        im = {k: v for k, v in im.items() if v}
        if not re and not im:
            den = 1
        else:
            g = gcd(den, *re.values(), *im.values())
            if g != 1:
                den //= g
                re = {k: v // g for k, v in re.items()}
                im = {k: v // g for k, v in im.items()}
        self._re = re
        self._im = im
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, n: int, re: dict, im: dict, den: int) -> "SPoly":
        p = cls.__new__(cls)
        p.n = n
        p._set(re, im, den)
        return p

    # constructors

    @classmethod
    def zero(cls, n: int) -> "SPoly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c=1) -> "SPoly":
        return cls(n, {(0,) * (3 * n): c})

    @classmethod
    def monomial(cls, n: int, xexp: Iterable[int], qexp: Iterable[int], coeff=1) -> "SPoly":
        return cls(n, {Monomial(tuple(xexp), tuple(qexp)): coeff})

    @classmethod
    def var(cls, n: int, bank: str, index: int) -> "SPoly":
        pos = _position(n, bank, index)
        e = [0] * (3 * n)
        e[pos] = 1
        return cls(n, {tuple(e): 1})

    # inspection

    def __len__(self):
        return len(self._re.keys() | self._im.keys())

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return not self._im

    def keys(self) -> list:
        """Flat exponent tuples in canonical order."""
        n = self.n
        return sorted(self._re.keys() | self._im.keys(), key=lambda k: order_key(k, n))

    def coefficient(self, mono) -> Scalar:
        key = self._check_key(mono)
        return Scalar(Fraction(self._re.get(key, 0), self._den), Fraction(self._im.get(key, 0), self._den))

    def terms(self) -> Iterator[tuple[Monomial, Scalar]]:
        n2 = 2 * self.n
        d = self._den
        for k in self.keys():
            yield Monomial(k[:n2], k[n2:]), Scalar(Fraction(self._re.get(k, 0), d), Fraction(self._im.get(k, 0), d))

    def as_dict(self) -> dict:
        return dict(self.terms())

    def bidegree_support(self) -> set:
        n2 = 2 * self.n
        return {(sum(k[:n2]), sum(k[n2:])) for k in self._re.keys() | self._im.keys()}

    def base_degrees(self) -> set:
        return {b for b, _ in self.bidegree_support()}

    def homogeneous_degree(self):
        """Base degree if every term shares it, else ``None`` (zero gives ``None``)."""
        degs = self.base_degrees()
        return degs.pop() if len(degs) == 1 else None

    def max_spinor_degree(self) -> int:
        return max((s for _, s in self.bidegree_support()), default=0)

    # arithmetic

    def _check_n(self, other: "SPoly") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"n mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "SPoly":
        if isinstance(other, SPoly):
            self._check_n(other)
            return other
        return SPoly.const(self.n, Scalar.coerce(other))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(o, -1)

    def __rsub__(self, other):
        return (-self) + other

    def _combine(self, o: "SPoly", sign: int) -> "SPoly":
        den = _lcm(self._den, o._den)
        a, b = den // self._den, sign * (den // o._den)
        re = kernels.lin_comb(self._re, a, o._re, b)
        im = kernels.lin_comb(self._im, a, o._im, b)
        return SPoly._raw(self.n, re, im, den)

    def __neg__(self):
        return SPoly._raw(self.n, {k: -v for k, v in self._re.items()}, {k: -v for k, v in self._im.items()}, self._den)

    def scale(self, c) -> "SPoly":
        c = Scalar.coerce(c)
        p, r, s = _scalar_parts(c)
        # (re + i im) (p + i r) = (p re - r im) + i (p im + r re)
        if r:
            re = kernels.lin_comb(self._re, p, self._im, -r)
            im = kernels.lin_comb(self._im, p, self._re, r)
        else:
            re = {k: p * v for k, v in self._re.items()}
            im = {k: p * v for k, v in self._im.items()}
        return SPoly._raw(self.n, re, im, self._den * s)

    def __mul__(self, other):
        if isinstance(other, SPoly):
            self._check_n(other)
            mt = kernels.mul_terms
            rr = mt(self._re, other._re)
            ii = mt(self._im, other._im)
            ri = mt(self._re, other._im)
            ir = mt(self._im, other._re)
            re = kernels.lin_comb(rr, 1, ii, -1)
            im = kernels.lin_comb(ri, 1, ir, 1)
            return SPoly._raw(self.n, re, im, self._den * other._den)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        try:
            c = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = SPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SPoly):
            return self.n == other.n and self._den == other._den and self._re == other._re and self._im == other._im
        try:
            return self == SPoly.const(self.n, Scalar.coerce(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._den, frozenset(self._re.items()), frozenset(self._im.items())))
        return self._hash

    def __repr__(self):
        from .textio import serialize

        return f"SPoly(n={self.n}, {serialize(self)!r})"

    # calculus and filtering

    def apply_words(self, words) -> "SPoly":
        """Apply an integer-coefficient combination of variable words (see :mod:`kernels`)."""
        aw = kernels.apply_words
        return SPoly._raw(self.n, aw(self._re, words), aw(self._im, words), self._den)

    def diff(self, bank: str, index: int) -> "SPoly":
        pos = _position(self.n, bank, index)
        return self.apply_words([(1, ((pos, kernels.DIFF),))])

    def _filter(self, pred) -> "SPoly":
        return SPoly._raw(
            self.n,
            {k: v for k, v in self._re.items() if pred(k)},
            {k: v for k, v in self._im.items() if pred(k)},
            self._den,
        )

    def graded_part(self, basedeg: int) -> "SPoly":
        n2 = 2 * self.n
        return self._filter(lambda k: sum(k[:n2]) == basedeg)

    def spinor_truncate(self, dmax: int) -> "SPoly":
        n2 = 2 * self.n
        return self._filter(lambda k: sum(k[n2:]) <= dmax)

    def spinor_parity_part(self, parity: int) -> "SPoly":
        n2 = 2 * self.n
        return self._filter(lambda k: sum(k[n2:]) % 2 == parity)

    def graded_parts(self) -> dict:
        return {d: self.graded_part(d) for d in sorted(self.base_degrees())}


def _position(n: int, bank: str, index: int) -> int:
    if bank == BASE:
        if not 1 <= index <= 2 * n:
            raise IndexError(f"base variable index {index} out of range 1..{2 * n}")
        return index - 1
    if bank == SPINOR:
        if not 1 <= index <= n:
            raise IndexError(f"spinor variable index {index} out of range 1..{n}")
        return 2 * n + index - 1
    raise ValueError(f"unknown variable bank {bank!r}")


def add(p: SPoly, r: SPoly) -> SPoly:
    return p + r


def mul(p: SPoly, r: SPoly) -> SPoly:
    return p * r


def diff(p: SPoly, bank: str, index: int) -> SPoly:
    return p.diff(bank, index)


def graded_part(p: SPoly, basedeg: int) -> SPoly:
    return p.graded_part(basedeg)


def spinor_truncate(p: SPoly, dmax: int) -> SPoly:
    return p.spinor_truncate(dmax)


def bidegree_support(p: SPoly) -> set:
    return p.bidegree_support()


def monomials(n: int, basedeg: int, dmax: int, dmin: int = 0) -> list:
    """All monomials of base degree ``basedeg`` and spinor degree in ``dmin..dmax``, canonically ordered."""
    xs = list(_compositions(basedeg, 2 * n))
    keys = []
    for d in range(dmin, dmax + 1):
        for qe in _compositions(d, n):
            for xe in xs:
                keys.append(xe + qe)
    keys.sort(key=lambda k: order_key(k, n))
    n2 = 2 * n
    return [Monomial(k[:n2], k[n2:]) for k in keys]


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
