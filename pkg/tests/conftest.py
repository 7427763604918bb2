import random

import pytest
import sympy as sp
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sympdirac.poly import SPoly
from sympdirac.scalar import Scalar

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=60)
settings.load_profile("default")


# --- sympy bridge used by the independent oracles --------------------------------


def syms(n):
    xs = sp.symbols(f"x1:{2 * n + 1}")
    qs = sp.symbols(f"q1:{n + 1}")
    return xs, qs


def to_sympy(p: SPoly):
    xs, qs = syms(p.n)
    out = sp.Integer(0)
    for mono, c in p.terms():
        term = sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)
        for v, e in zip(xs, mono.xexp):
            term *= v**e
        for v, e in zip(qs, mono.qexp):
            term *= v**e
        out += term
    return sp.expand(out)


def from_sympy(expr, n) -> SPoly:
    xs, qs = syms(n)
    expr = sp.expand(expr)
    if expr == 0:
        return SPoly.zero(n)
    poly = sp.Poly(expr, *xs, *qs)
    terms = {}
    for exps, c in poly.terms():
        re, im = sp.re(c), sp.im(c)
        from fractions import Fraction

        terms[(tuple(exps[: 2 * n]), tuple(exps[2 * n:]))] = Scalar(
            Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q))
        )
    return SPoly(n, terms)


def oracle_Ds(expr, n):
    """D_s straight from its definition with e_j = q_j*, f_j = -d/dq_j."""
    xs, qs = syms(n)
    out = 0
    for j in range(n):
        out += qs[j] * sp.diff(expr, xs[2 * j])
        out -= -sp.diff(sp.diff(expr, xs[2 * j + 1]), qs[j])
    return sp.expand(out)


def oracle_Xs(expr, n):
    xs, qs = syms(n)
    out = 0
    for j in range(n):
        out += xs[2 * j] * (-sp.diff(expr, qs[j]))
        out += xs[2 * j + 1] * qs[j] * expr
    return sp.expand(out)


# --- hypothesis strategies -----------------------------------------------------------

fractions_st = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def spolys(draw, n=None, max_base=4, max_spinor=4, gaussian=True, max_terms=5):
    if n is None:
        n = draw(st.integers(1, 3))
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        bd = draw(st.integers(0, max_base))
        sd = draw(st.integers(0, max_spinor))
        x = [0] * (2 * n)
        q = [0] * n
        for _ in range(bd):
            x[draw(st.integers(0, 2 * n - 1))] += 1
        for _ in range(sd):
            q[draw(st.integers(0, n - 1))] += 1
        re = draw(fractions_st)
        im = draw(fractions_st) if gaussian else 0
        terms[(tuple(x), tuple(q))] = Scalar(re, im)
    return SPoly(n, terms)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
