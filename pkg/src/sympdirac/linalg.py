"""Exact sparse linear algebra over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import kernels


def _integer_rows(rows):
    out = []
    for r in rows:
        den = 1
        for v in r.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append({c: int(v * den) for c, v in r.items() if v})
    return out


def rref(rows, ncols: int):
    """Reduced row echelon form (rows primitive, pivots positive) and pivot columns.

    ``rows`` are ``{column: int | Fraction}`` dicts; rational rows are
    cleared of denominators first, which does not change the row space.
    """
    return kernels.ff_rref(_integer_rows(rows), ncols)


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int) -> list:
    """Basis of ``{v : A v = 0}`` as ``{column: Fraction}`` dicts.

    One vector per free column, scaled so its lowest-index entry is 1.
    """
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for r, c in zip(red, pivots):
            a = r.get(f)
            if a:
                v[c] = Fraction(-a, r[c])
        lead = v[min(v)]
        if lead != 1:
            v = {c: x / lead for c, x in v.items()}
        out.append(v)
    return out


def matvec(rows, vec: dict) -> dict:
    out = {}
    for i, r in enumerate(rows):
        s = sum((a * vec[c] for c, a in r.items() if c in vec), 0)
        if s:
            out[i] = s
    return out
