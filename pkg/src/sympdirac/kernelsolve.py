"""Truncated symplectic monogenics as exact nullspaces.

A *slice* is the finite space of polynomials with base degree ``k`` and
spinor degree at most ``dmax``. ``D_s`` maps it into base degree ``k - 1``
and spinor degree at most ``dmax + 1``; the codomain is never truncated, so
every vector found lies in the true kernel.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import linalg
from .fischer import casimir_value
from .operators import apply_Ds, apply_Xs
from .poly import Monomial, SPoly, monomials, order_key
from .verdict import Verdict

DEFAULT_SIZE_CAP = 200_000
EVEN, ODD = "even", "odd"
PARITIES = (EVEN, ODD)


class SizeLimitError(RuntimeError):
    def __init__(self, k: int, d: int, size: int, cap: int):
        super().__init__(f"domain dimension {size} at (k={k}, d={d}) exceeds size cap {cap}")
        self.k, self.d, self.size, self.cap = k, d, size, cap


def slice_dimension(n: int, k: int, dmax: int) -> int:
    return comb(k + 2 * n - 1, 2 * n - 1) * sum(comb(d + n - 1, n - 1) for d in range(dmax + 1))


def _parity_ok(mono: Monomial, parity) -> bool:
    return parity is None or mono.spinor_degree % 2 == (0 if parity == EVEN else 1)


@dataclass
class TruncatedSlice:
    n: int
    k: int
    dmax: int
    basis: list

    @classmethod
    def build(cls, n: int, k: int, dmax: int, parity=None, size_cap: int = DEFAULT_SIZE_CAP) -> "TruncatedSlice":
        if parity is not None and parity not in PARITIES:
            raise ValueError(f"parity must be 'even', 'odd' or None, got {parity!r}")
        size = slice_dimension(n, k, dmax)
        if size > size_cap:
            raise SizeLimitError(k, dmax, size, size_cap)
        basis = [m for m in monomials(n, k, dmax) if _parity_ok(m, parity)]
        return cls(n, k, dmax, basis)

    def __len__(self):
        return len(self.basis)

    def element(self, vec: dict) -> SPoly:
        """Polynomial with coefficients ``vec[column]`` on the basis monomials."""
        return SPoly(self.n, {self.basis[c]: v for c, v in vec.items()})


@dataclass
class SparseMatrix:
    """Exact matrix with monomial-labelled rows and columns; rows stored as ``{col: int}``."""

    row_labels: list
    col_labels: list
    rows: list

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def dense(self) -> list:
        return [[r.get(c, 0) for c in range(len(self.col_labels))] for r in self.rows]


def operator_matrix(op: Callable[[SPoly], SPoly], n: int, domain: list) -> SparseMatrix:
    """Matrix of a linear operator with integer action on the given monomials."""
    cols = []
    seen = set()
    for m in domain:
        img = op(SPoly(n, {m: 1}))
        if not img.is_real() or img._den != 1:
            raise ValueError("operator matrix needs integer images")
        cols.append(img._re)
        seen.update(img._re)
    row_keys = sorted(seen, key=lambda key: order_key(key, n))
    index = {key: i for i, key in enumerate(row_keys)}
    rows = [dict() for _ in row_keys]
    for c, col in enumerate(cols):
        for key, v in col.items():
            rows[index[key]][c] = v
    n2 = 2 * n
    return SparseMatrix([Monomial(k[:n2], k[n2:]) for k in row_keys], list(domain), rows)


def assemble_Ds_matrix(sl: TruncatedSlice) -> SparseMatrix:
    """Matrix of ``D_s`` on a slice.

    Rows are the monomials that actually occur in an image (all of base
    degree ``k - 1`` and spinor degree at most ``dmax + 1``); zero rows of
    the full codomain are omitted.
    """
    return operator_matrix(apply_Ds, sl.n, sl.basis)


@dataclass
class KernelBasis:
    slice: TruncatedSlice
    vectors: list
    parity: str | None = None
    rank: int = 0
    meta: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def monogenic_basis(n: int, k: int, dmax: int, parity=None, size_cap: int = DEFAULT_SIZE_CAP) -> KernelBasis:
    """Exact basis of ``ker D_s`` on the slice (base degree ``k``, spinor degree <= ``dmax``)."""
    sl = TruncatedSlice.build(n, k, dmax, parity, size_cap)
    A = assemble_Ds_matrix(sl)
    null = linalg.nullspace(A.rows, len(sl))
    vectors = [sl.element(v) for v in null]
    return KernelBasis(
        sl,
        vectors,
        parity,
        rank=len(sl) - len(null),
        meta={"casimir": casimir_value(k, n)},
    )


def dimension_table(n: int, kmax: int, dmax: int, size_cap: int = DEFAULT_SIZE_CAP) -> list:
    """Rows ``(n, k, d, parity, dim)`` for ``k <= kmax``, ``d <= dmax``, parity in even/odd/all."""
    for k in range(kmax + 1):
        size = slice_dimension(n, k, dmax)
        if size > size_cap:
            raise SizeLimitError(k, dmax, size, size_cap)
    rows = []
    for k in range(kmax + 1):
        for d in range(dmax + 1):
            dims = {p: monogenic_basis(n, k, d, p, size_cap).dimension for p in PARITIES}
            rows.append((n, k, d, EVEN, dims[EVEN]))
            rows.append((n, k, d, ODD, dims[ODD]))
            rows.append((n, k, d, "all", dims[EVEN] + dims[ODD]))
    return rows


def dimension_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "dmax", "parity", "dim"])
    w.writerows(rows)
    return buf.getvalue()


def xs_injectivity_check(n: int, k: int, dmax: int, size_cap: int = DEFAULT_SIZE_CAP) -> Verdict:
    """Full column rank of ``X_s`` on base degree ``k``, spinor degree <= ``dmax``."""
    sl = TruncatedSlice.build(n, k, dmax, None, size_cap)
    A = operator_matrix(apply_Xs, n, sl.basis)
    r = linalg.rank(A.rows, len(sl))
    ok = r == len(sl)
    return Verdict("X_s injective on slice", ok, f"n={n} k={k} dmax={dmax} rank={r} cols={len(sl)}", data={"rank": r, "cols": len(sl)})
