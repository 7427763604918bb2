"""Symplectic Clifford generators and the operators built from them.

Conventions
-----------
* Base variables ``x_1..x_2n`` and spinor variables ``q_1..q_n``.
* ``e_j`` acts as multiplication by ``q_j`` and ``f_j`` as ``-d/dq_j``, so
  ``e_i f_j - f_j e_i = delta_ij`` holds over the rationals.
* ``X_s = sum_j (x_{2j-1} f_j + x_{2j} e_j)`` and
  ``D_s = sum_j (d/dx_{2j-1} e_j - d/dx_{2j} f_j)`` use interleaved coordinates.
* The sp(2n) vector fields ``X_ij, Y_ij, Z_ij`` use block coordinates,
  pairing ``x_i`` with ``x_{n+i}``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Sequence

from . import kernels
from .poly import SPoly
from .scalar import GAUSSIAN, RATIONAL, Scalar, ScalarModeError, check_mode

# atomic generator names
MULX, DDX, MULQ, DDQ, E, F = "mulx", "ddx", "mulq", "ddq", "e", "f"
_ATOMS = (MULX, DDX, MULQ, DDQ, E, F)


def _atom_range(name: str, n: int) -> int:
    return 2 * n if name in (MULX, DDX) else n


def _check_atom(atom, n: int):
    name, idx = atom
    if name not in _ATOMS:
        raise ValueError(f"unknown generator {name!r}")
    if not 1 <= idx <= _atom_range(name, n):
        raise IndexError(f"generator {name}({idx}) out of range for n={n}")
    return atom


def _expand_atom(atom, n: int) -> list:
    """Atom -> list of (int sign, kernel action) under the default realization."""
    name, idx = atom
    if name == MULX:
        return [(1, (idx - 1, kernels.MUL))]
    if name == DDX:
        return [(1, (idx - 1, kernels.DIFF))]
    qpos = 2 * n + idx - 1
    if name in (MULQ, E):
        return [(1, (qpos, kernels.MUL))]
    if name == DDQ:
        return [(1, (qpos, kernels.DIFF))]
    return [(-1, (qpos, kernels.DIFF))]  # f_j = -d/dq_j


class OperatorExpr:
    """Linear combination of words in the atomic generators.

    A word ``(a, b, c)`` denotes the composite ``a o b o c``: ``c`` acts
    first. Composition of expressions is ``A @ B`` (apply ``B`` first) and
    ``A(p)`` applies to an :class:`SPoly`.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable = ()):
        self.n = n
        acc: dict = {}
        for coef, word in terms:
            word = tuple(_check_atom(tuple(a), n) for a in word)
            acc[word] = acc.get(word, Scalar(0)) + Scalar.coerce(coef)
        self.terms = [(c, w) for w, c in acc.items() if not c.is_zero()]

    @classmethod
    def identity(cls, n: int, c=1) -> "OperatorExpr":
        return cls(n, [(c, ())])

    @classmethod
    def atom(cls, n: int, name: str, idx: int) -> "OperatorExpr":
        return cls(n, [(1, ((name, idx),))])

    def _same(self, other: "OperatorExpr") -> None:
        if other.n != self.n:
            raise ValueError(f"operator n mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            other = OperatorExpr.identity(self.n, Scalar.coerce(other))
        self._same(other)
        return OperatorExpr(self.n, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return OperatorExpr(self.n, [(-c, w) for c, w in self.terms])

    def __sub__(self, other):
        return self + (-other if isinstance(other, OperatorExpr) else -Scalar.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        c = Scalar.coerce(c)
        return OperatorExpr(self.n, [(c * a, w) for a, w in self.terms])

    __rmul__ = __mul__

    def __matmul__(self, other: "OperatorExpr") -> "OperatorExpr":
        self._same(other)
        return OperatorExpr(self.n, [(a * b, wa + wb) for a, wa in self.terms for b, wb in other.terms])

    def __pow__(self, k: int) -> "OperatorExpr":
        out = OperatorExpr.identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def _kernel_words(self):
        """Split into integer kernel words for the real and imaginary coefficient parts over one denominator."""
        den = 1
        for c, _ in self.terms:
            for part in (c.re, c.im):
                den = den // gcd(den, part.denominator) * part.denominator
        re_words, im_words = [], []
        n = self.n
        for c, word in self.terms:
            expanded = [(1, ())]
            for atom in reversed(word):
                expanded = [(s * t, acts + (act,)) for s, acts in expanded for t, act in _expand_atom(atom, n)]
            for s, acts in expanded:
                if c.re:
                    re_words.append((s * int(c.re * den), acts))
                if c.im:
                    im_words.append((s * int(c.im * den), acts))
        return re_words, im_words, den

    def apply(self, p: SPoly) -> SPoly:
        if p.n != self.n:
            raise ValueError(f"operator n={self.n} applied to polynomial with n={p.n}")
        re_w, im_w, den = self._kernel_words()
        out = p.apply_words(re_w) if re_w else SPoly.zero(self.n)
        if im_w:
            out = out + p.apply_words(im_w).scale(Scalar(0, 1))
        return out / den if den != 1 else out

    __call__ = apply

    def __repr__(self):
        parts = []
        for c, w in self.terms:
            word = "*".join(f"{a}{i}" for a, i in w) or "1"
            parts.append(f"({c})*{word}")
        return f"OperatorExpr(n={self.n}: " + " + ".join(parts) + ")"


# --- the symplectic Clifford generators ------------------------------------


def clifford_apply(gen: str, j: int, p: SPoly) -> SPoly:
    if gen not in (E, F):
        raise ValueError(f"Clifford generator must be 'e' or 'f', got {gen!r}")
    return OperatorExpr.atom(p.n, gen, j)(p)


def e_op(n: int, j: int) -> OperatorExpr:
    return OperatorExpr.atom(n, E, j)


def f_op(n: int, j: int) -> OperatorExpr:
    return OperatorExpr.atom(n, F, j)


# --- X_s, D_s, Euler, Gamma --------------------------------------------------


def Xs_expr(n: int) -> OperatorExpr:
    terms = []
    for j in range(1, n + 1):
        terms.append((1, ((MULX, 2 * j - 1), (F, j))))
        terms.append((1, ((MULX, 2 * j), (E, j))))
    return OperatorExpr(n, terms)


def Ds_expr(n: int) -> OperatorExpr:
    terms = []
    for j in range(1, n + 1):
        terms.append((1, ((DDX, 2 * j - 1), (E, j))))
        terms.append((-1, ((DDX, 2 * j), (F, j))))
    return OperatorExpr(n, terms)


def Euler_expr(n: int) -> OperatorExpr:
    return OperatorExpr(n, [(1, ((MULX, j), (DDX, j))) for j in range(1, 2 * n + 1)])


def Gamma_expr(n: int) -> OperatorExpr:
    eu = Euler_expr(n)
    return Xs_expr(n) @ Ds_expr(n) - (eu @ (eu + (2 * n - 1))) * Fraction(1, 2)


@lru_cache(maxsize=None)
def _words(name: str, n: int):
    expr = {"Xs": Xs_expr, "Ds": Ds_expr}[name](n)
    re_w, im_w, den = expr._kernel_words()
    assert not im_w and den == 1
    return tuple(re_w)


def apply_Ds(p: SPoly) -> SPoly:
    return p.apply_words(_words("Ds", p.n))


def apply_Xs(p: SPoly) -> SPoly:
    return p.apply_words(_words("Xs", p.n))


def apply_Euler(p: SPoly) -> SPoly:
    out = SPoly.zero(p.n)
    for k, part in p.graded_parts().items():
        if k:
            out = out + part.scale(k)
    return out


def apply_Gamma(p: SPoly) -> SPoly:
    """``X_s D_s p - (1/2) E (2n - 1 + E) p``."""
    n = p.n
    out = apply_Xs(apply_Ds(p))
    for k, part in p.graded_parts().items():
        c = Fraction(k * (2 * n - 1 + k), 2)
        if c:
            out = out - part.scale(c)
    return out


def apply_power(op: Callable[[SPoly], SPoly], k: int, p: SPoly) -> SPoly:
    for _ in range(k):
        if p.is_zero():
            break
        p = op(p)
    return p


def _as_callable(A) -> Callable[[SPoly], SPoly]:
    if isinstance(A, OperatorExpr):
        return A.apply
    if callable(A):
        return A
    raise TypeError(f"not an operator: {A!r}")


def commutator(A, B, p: SPoly) -> SPoly:
    """``A(B(p)) - B(A(p))`` for operators given as expressions or callables."""
    a, b = _as_callable(A), _as_callable(B)
    return a(b(p)) - b(a(p))


# --- sp(2n) vector fields -----------------------------------------------------


STANDARD, LITERAL = "standard", "literal"


def _check_convention(convention: str) -> None:
    if convention not in (STANDARD, LITERAL):
        raise ValueError(f"convention must be {STANDARD!r} or {LITERAL!r}, got {convention!r}")


def sp_vectorfield_expr(kind: str, i: int, j: int, n: int, convention: str = STANDARD) -> OperatorExpr:
    """First-order operator of an sp(2n) generator.

    ``X_ij`` is ``x_j d_i - x_(n+i) d_(n+j)`` in the standard convention and
    ``x_j d_i - x_(n+j) d_(n+i)`` in the literal one; the two agree for
    ``i == j``. Only the standard form closes under brackets with ``Y``, ``Z``.
    """
    _check_convention(convention)
    for idx in (i, j):
        if not 1 <= idx <= n:
            raise IndexError(f"vector field index {idx} out of range 1..{n}")
    if kind == "X":
        a, b = (n + i, n + j) if convention == STANDARD else (n + j, n + i)
        terms = [(1, ((MULX, j), (DDX, i))), (-1, ((MULX, a), (DDX, b)))]
    elif kind == "Y":
        terms = [(1, ((MULX, n + j), (DDX, i))), (1, ((MULX, n + i), (DDX, j)))]
    elif kind == "Z":
        terms = [(1, ((MULX, j), (DDX, n + i))), (1, ((MULX, i), (DDX, n + j)))]
    else:
        raise ValueError(f"vector field kind must be X, Y or Z, got {kind!r}")
    return OperatorExpr(n, terms)


def sp_vectorfield(kind: str, i: int, j: int, p: SPoly, convention: str = STANDARD) -> SPoly:
    return sp_vectorfield_expr(kind, i, j, p.n, convention)(p)


# --- sp(2n) matrices and the two quadratic-element maps ----------------------


class SpMatrix:
    """Square exact matrix; used for the 2n x 2n images of quadratic Clifford elements."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(Scalar.coerce(v) for v in r) for r in rows)

    @classmethod
    def zeros(cls, size: int) -> "SpMatrix":
        return cls([[0] * size for _ in range(size)])

    @classmethod
    def unit(cls, size: int, i: int, j: int) -> "SpMatrix":
        """The matrix unit ``E_{i,j}`` (1-based)."""
        rows = [[0] * size for _ in range(size)]
        rows[i - 1][j - 1] = 1
        return cls(rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, o):
        return SpMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __neg__(self):
        return SpMatrix([[-a for a in r] for r in self.rows])

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, c):
        c = Scalar.coerce(c)
        return SpMatrix([[a * c for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, o):
        cols = list(zip(*o.rows))
        return SpMatrix([[sum((a * b for a, b in zip(r, c)), Scalar(0)) for c in cols] for r in self.rows])

    def transpose(self):
        return SpMatrix(list(zip(*self.rows)))

    def bracket(self, o):
        return self @ o - o @ self

    def is_zero(self) -> bool:
        return all(v.is_zero() for r in self.rows for v in r)

    def __eq__(self, o):
        return isinstance(o, SpMatrix) and self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SpMatrix(" + "; ".join(" ".join(str(v) for v in r) for r in self.rows) + ")"


def symplectic_form(n: int) -> SpMatrix:
    """``J`` with ``omega(e_i, f_j) = delta_ij``: e-block first, f-block second."""
    m = 2 * n
    rows = [[0] * m for _ in range(m)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = -1
    return SpMatrix(rows)


def in_sp(M: SpMatrix, n: int) -> bool:
    J = symplectic_form(n)
    return (M.transpose() @ J + J @ M).is_zero()


def sp_matrix(kind: str, i: int, j: int, n: int, convention: str = STANDARD) -> SpMatrix:
    """``X_ij``, ``Y_ij`` or ``Z_ij`` built from matrix units.

    Standard ``X_ij = E_(i,j) - E_(n+j,n+i)``; literal
    ``X_ij = E_(i,j) - E_(n+i,n+j)``, which leaves sp(2n) when ``i != j``.
    """
    _check_convention(convention)
    m = 2 * n
    U = lambda a, b: SpMatrix.unit(m, a, b)  # noqa: E731
    if kind == "X":
        return U(i, j) - (U(n + j, n + i) if convention == STANDARD else U(n + i, n + j))
    if kind == "Y":
        return U(i, n + j) + U(j, n + i)
    if kind == "Z":
        return U(n + i, j) + U(n + j, i)
    raise ValueError(f"kind must be X, Y or Z, got {kind!r}")


# Quadratic Clifford elements: basis keys ("ee", i, j) = e_i e_j,
# ("ff", i, j) = f_i f_j, ("ef", i, j) = e_i f_j + f_j e_i.
EE, FF, EF = "ee", "ff", "ef"


class QuadraticError(ValueError):
    pass


def quad(kind: str, i: int, j: int) -> dict:
    if kind in (EE, FF) and i > j:
        i, j = j, i  # e_i e_j = e_j e_i, f_i f_j = f_j f_i
    if kind not in (EE, FF, EF):
        raise QuadraticError(f"not a quadratic Clifford shape: {kind!r}")
    return {(kind, i, j): Scalar(1)}


def quadratic_basis(n: int) -> list:
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            out.append((EE, i, j))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            out.append((FF, i, j))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out.append((EF, i, j))
    return out


def parse_quadratic(word: str) -> dict:
    """Read ``"e1e2"``, ``"f1f1"`` or ``"e1f2+f2e1"`` into a quadratic element."""
    import re

    w = word.replace(" ", "")
    m = re.fullmatch(r"([ef])(\d+)([ef])(\d+)", w)
    if m:
        a, i, b, j = m.group(1), int(m.group(2)), m.group(3), int(m.group(4))
        if a == b == "e":
            return quad(EE, i, j)
        if a == b == "f":
            return quad(FF, i, j)
        raise QuadraticError(f"{word!r}: mixed products must be symmetrized, e.g. 'e{i}f{j}+f{j}e{i}'")
    m = re.fullmatch(r"e(\d+)f(\d+)\+f(\d+)e(\d+)", w)
    if m and m.group(1) == m.group(4) and m.group(2) == m.group(3):
        return quad(EF, int(m.group(1)), int(m.group(2)))
    raise QuadraticError(f"not a quadratic Clifford word: {word!r}")


def _check_quad(u: dict, n: int) -> None:
    for kind, i, j in u:
        if kind not in (EE, FF, EF):
            raise QuadraticError(f"not a quadratic Clifford shape: {kind!r}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"quadratic element index out of range for n={n}")


def rho_star(u: dict, n: int, convention: str = STANDARD) -> SpMatrix:
    """``e_i e_j -> -Y_ij``, ``f_i f_j -> Z_ij``, ``e_i f_j + f_j e_i -> 2 X_ij``, extended linearly."""
    _check_quad(u, n)
    out = SpMatrix.zeros(2 * n)
    for (kind, i, j), c in u.items():
        if kind == EE:
            out = out - sp_matrix("Y", i, j, n) * c
        elif kind == FF:
            out = out + sp_matrix("Z", i, j, n) * c
        else:
            out = out + sp_matrix("X", i, j, n, convention) * (2 * c)
    return out


def rho_star_inverse(M: SpMatrix, n: int, convention: str = STANDARD):
    """Quadratic element ``w`` with ``rho_star(w) == M``, or ``None`` if ``M`` is not in the image."""
    w = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            c = M[i - 1, n + j - 1]
            if i == j:
                c = c / 2
            if c:
                w[(EE, i, j)] = -c
            c = M[n + i - 1, j - 1]
            if i == j:
                c = c / 2
            if c:
                w[(FF, i, j)] = c
        for j in range(1, n + 1):
            c = M[i - 1, j - 1] / 2
            if c:
                w[(EF, i, j)] = c
    return w if rho_star(w, n, convention) == M else None


STATED, INDUCED = "stated", "induced"


def L_star(u: dict, n: int, scalar: str = GAUSSIAN, variant: str = STATED) -> OperatorExpr:
    """Image of a quadratic element as an operator on the spinor variables.

    ``e_i e_j -> i q_i q_j`` and ``f_i f_j -> -i d_i d_j`` in both variants.
    The mixed element ``e_i f_j + f_j e_i`` goes to ``q_i d_j + q_j d_i``
    (``variant="stated"``) or to ``2 q_i d_j + delta_ij`` (``variant="induced"``,
    the form forced by the commutation relations once the first two are fixed).
    """
    if check_mode(scalar) == RATIONAL:
        raise ScalarModeError("L_star needs the imaginary unit; switch to gaussian scalar mode")
    if variant not in (STATED, INDUCED):
        raise ValueError(f"variant must be {STATED!r} or {INDUCED!r}, got {variant!r}")
    _check_quad(u, n)
    I = Scalar(0, 1)
    terms = []
    for (kind, i, j), c in u.items():
        if kind == EE:
            terms.append((c * I, ((MULQ, i), (MULQ, j))))
        elif kind == FF:
            terms.append((-c * I, ((DDQ, i), (DDQ, j))))
        elif variant == STATED:
            terms.append((c, ((MULQ, i), (DDQ, j))))
            terms.append((c, ((MULQ, j), (DDQ, i))))
        else:
            terms.append((2 * c, ((MULQ, i), (DDQ, j))))
            if i == j:
                terms.append((c, ()))
    return OperatorExpr(n, terms)


def clifford_quadratic_expr(u: dict, n: int) -> OperatorExpr:
    """The quadratic element as an operator under the default (rational) realization."""
    _check_quad(u, n)
    terms = []
    for (kind, i, j), c in u.items():
        if kind == EE:
            terms.append((c, ((E, i), (E, j))))
        elif kind == FF:
            terms.append((c, ((F, i), (F, j))))
        else:
            terms.append((c, ((E, i), (F, j))))
            terms.append((c, ((F, j), (E, i))))
    return OperatorExpr(n, terms)


def bracket_compatibility(n: int, samples: list, variant: str = STATED, convention: str = STANDARD) -> list:
    """Compare operator brackets of ``L_star`` images with matrix brackets of ``rho_star`` images.

    For every pair ``(u, v)`` of quadratic basis elements (``u`` before
    ``v``), ``w`` is read off from ``[rho(u), rho(v)] = rho(w)`` and
    ``[L(u), L(v)]`` is compared with ``L(w)`` on the spinor polynomials in
    ``samples``. Returns one record per pair: ``status`` is ``"match"``,
    ``"central"`` (the two operators differ by a nonzero constant, reported
    in ``constant``) or ``"mismatch"``.
    """
    basis = quadratic_basis(n)
    out = []
    one = SPoly.const(n, 1)
    for a, ka in enumerate(basis):
        for kb in basis[a + 1:]:
            u, v = {ka: Scalar(1)}, {kb: Scalar(1)}
            M = rho_star(u, n, convention).bracket(rho_star(v, n, convention))
            w = rho_star_inverse(M, n, convention)
            rec = {"u": ka, "v": kb, "w": w}
            if w is None:
                rec["status"] = "outside-image"
                out.append(rec)
                continue
            Lu, Lv, Lw = (L_star(x, n, variant=variant) for x in (u, v, w))
            diffs = [commutator(Lu, Lv, p) - Lw(p) for p in [one] + list(samples)]
            if all(d.is_zero() for d in diffs):
                rec["status"] = "match"
            else:
                c = diffs[0].coefficient((0,) * (3 * n)) if diffs[0].homogeneous_degree() == 0 or diffs[0].is_zero() else None
                central = c is not None and all(d == p.scale(c) for d, p in zip(diffs, [one] + list(samples)))
                rec["status"] = "central" if central else "mismatch"
                rec["constant"] = c if central else None
            out.append(rec)
    return out


def describe_quadratic(u: dict) -> str:
    parts = []
    for (kind, i, j), c in u.items():
        word = {EE: f"e{i}e{j}", FF: f"f{i}f{j}", EF: f"(e{i}f{j}+f{j}e{i})"}[kind]
        parts.append(word if c == 1 else f"({c}){word}")
    return " + ".join(parts) or "0"
