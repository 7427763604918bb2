# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the integer kernels in ``_kernels_py``.

Semantics are identical; coefficients stay Python ints so results are
exact at any size. The speedup comes from typed loops over exponents and
word actions.
"""
from math import gcd


def apply_words(dict terms, words):
    cdef dict out = {}
    cdef list e
    cdef tuple actions, key
    cdef Py_ssize_t pos, kind, k, nact, a
    cdef object f, c, coef, t
    cdef list compiled = []
    for coef, actions in words:
        compiled.append((coef, actions))
    for key, c in terms.items():
        for coef, actions in compiled:
            e = list(key)
            f = coef
            nact = len(actions)
            for a in range(nact):
                pos = actions[a][0]
                kind = actions[a][1]
                if kind:
                    k = e[pos]
                    if k == 0:
                        f = 0
                        break
                    f = f * k
                    e[pos] = k - 1
                else:
                    e[pos] = <Py_ssize_t>e[pos] + 1
            if f:
                t = tuple(e)
                out[t] = out.get(t, 0) + f * c
    return {k2: v for k2, v in out.items() if v}


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb
    cdef Py_ssize_t i, m
    cdef list e
    cdef object ca, cb, t
    for ka, ca in a.items():
        m = len(ka)
        for kb, cb in b.items():
            e = [0] * m
            for i in range(m):
                e[i] = <Py_ssize_t>ka[i] + <Py_ssize_t>kb[i]
            t = tuple(e)
            out[t] = out.get(t, 0) + ca * cb
    return {k2: v for k2, v in out.items() if v}


def lin_comb(dict a, object sa, dict b, object sb):
    cdef dict out
    cdef object k, v
    if sa != 1:
        out = {k: sa * v for k, v in a.items()}
    else:
        out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sb * v
    return {k: v for k, v in out.items() if v}


cdef void _make_primitive(dict r):
    if not r:
        return
    cdef object g = gcd(*r.values())
    if r[min(r)] < 0:
        g = -g
    if g != 1:
        for c in list(r):
            r[c] = r[c] // g


def ff_rref(list rows, Py_ssize_t ncols):
    cdef list work = [dict(r) for r in rows if r]
    cdef dict occ = {}
    cdef Py_ssize_t idx, col, pr, ridx
    cdef dict r, prow
    cdef object p, a, g, mp, ma, nv, c, v
    cdef list done = [], pivots = [], out = []
    cdef set used = set(), holders, cand
    for idx in range(len(work)):
        for c in work[idx]:
            occ.setdefault(c, set()).add(idx)
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
            mp = p // g
            ma = a // g
            for c in r:
                r[c] = r[c] * mp
            for c, v in prow.items():
                nv = r.get(c, 0) - ma * v
                if nv:
                    if c not in r:
                        occ.setdefault(c, set()).add(ridx)
                    r[c] = nv
                elif c in r:
                    del r[c]
                    (<set>occ[c]).discard(ridx)
            _make_primitive(r)
        occ[col] = {pr}
        done.append(pr)
        pivots.append(col)
    for idx in done:
        r = work[idx]
        _make_primitive(r)
        out.append(r)
    return out, pivots
