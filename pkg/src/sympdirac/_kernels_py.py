"""Pure-Python versions of the integer kernels.

Every function here has a drop-in twin in ``_ckernels.pyx``. Polynomials
are plain ``dict`` objects mapping exponent tuples to nonzero ``int``.
A *word* is ``(coef, actions)`` where ``actions`` is a tuple of
``(position, kind)`` pairs applied first to last; ``kind`` 0 multiplies by
the variable at ``position`` and ``kind`` 1 differentiates by it.
"""
from math import gcd

MUL = 0
DIFF = 1


def apply_words(terms, words):
    out = {}
    get = out.get
    for key, c in terms.items():
        for coef, actions in words:
            e = list(key)
            f = coef
            for pos, kind in actions:
                if kind:
                    k = e[pos]
                    if not k:
                        f = 0
                        break
                    f *= k
                    e[pos] = k - 1
                else:
                    e[pos] += 1
            if f:
                t = tuple(e)
                out[t] = get(t, 0) + f * c
    return {k: v for k, v in out.items() if v}


def mul_terms(a, b):
    out = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            t = tuple([x + y for x, y in zip(ka, kb)])
            out[t] = get(t, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def lin_comb(a, sa, b, sb):
    """Return ``sa*a + sb*b`` with zero entries dropped."""
    out = {k: sa * v for k, v in a.items()} if sa != 1 else dict(a)
    get = out.get
    for k, v in b.items():
        out[k] = get(k, 0) + sb * v
    return {k: v for k, v in out.items() if v}


def ff_rref(rows, ncols):
    """Fraction-free Gauss-Jordan reduction of sparse integer rows.

    ``rows`` is a list of ``{column: int}`` dicts and is not modified.
    Pivots are taken at the first column (in index order) that has a
    nonzero entry in any remaining row; the first such row in input order
    wins. Each row is kept primitive (content divided out, pivot positive).

    Returns ``(reduced_rows, pivot_columns)`` with one row per pivot.
    """
    work = [dict(r) for r in rows if r]
    # column -> set of row indices holding a nonzero there
    occ = {}
    for idx, r in enumerate(work):
        for c in r:
            occ.setdefault(c, set()).add(idx)
    done = []
    pivots = []
    used = set()
    for col in range(ncols):
        holders = occ.get(col)
        if not holders:
            continue
        cand = holders - used
        if not cand:
            continue
        pr = min(cand)
        used.add(pr)
        prow = work[pr]
        p = prow[col]
        for ridx in sorted(holders):
            if ridx == pr:
                continue
            r = work[ridx]
            a = r[col]
            g = gcd(p, a)
            mp, ma = p // g, a // g
            for c in r:
                r[c] *= mp
            for c, v in prow.items():
                nv = r.get(c, 0) - ma * v
                if nv:
                    if c not in r:
                        occ.setdefault(c, set()).add(ridx)
                    r[c] = nv
                else:
                    if c in r:
                        del r[c]
                        occ[c].discard(ridx)
            _make_primitive(r)
        # the pivot column is now clear except for the pivot row
        occ[col] = {pr}
        done.append(pr)
        pivots.append(col)
    out = []
    for idx in done:
        r = work[idx]
        _make_primitive(r)
        out.append(r)
    return out, pivots


def _make_primitive(r):
    if not r:
        return
    g = gcd(*r.values())
    first = r[min(r)]
    if first < 0:
        g = -g
    if g != 1:
        for c in r:
            r[c] //= g
