import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sympdirac import operators as ops
from sympdirac.kernelsolve import xs_injectivity_check
from sympdirac.operators import (
    INDUCED,
    LITERAL,
    STATED,
    OperatorExpr,
    apply_Ds,
    apply_Euler,
    apply_Gamma,
    apply_Xs,
    clifford_apply,
    commutator,
)
from sympdirac.poly import SPoly
from sympdirac.sampling import random_spoly
from sympdirac.scalar import Scalar, ScalarModeError
from sympdirac.textio import parse

from conftest import from_sympy, oracle_Ds, oracle_Xs, spolys, to_sympy


def P(s, n=1):
    return parse(s, n)


# --- Clifford generators ------------------------------------------------------------


def test_clifford_examples():
    assert clifford_apply("e", 1, P("1")) == P("q1")
    assert clifford_apply("f", 1, P("q1^3")) == P("-3q1^2")
    p = P("x1 q1^2 + 3q1 - 1/2")
    e1, f1 = ops.e_op(1, 1), ops.f_op(1, 1)
    assert commutator(e1, f1, p) == p
    e1, e2 = ops.e_op(2, 1), ops.e_op(2, 2)
    assert commutator(e1, e2, P("q1", 2)).is_zero()


def test_clifford_index_range():
    with pytest.raises(IndexError):
        clifford_apply("e", 2, P("1"))
    with pytest.raises(ValueError):
        clifford_apply("g", 1, P("1"))


@given(st.data())
def test_clifford_relations(data):
    n = data.draw(st.integers(1, 3))
    p = data.draw(spolys(n=n))
    i, j = data.draw(st.integers(1, n)), data.draw(st.integers(1, n))
    ei, ej, fi, fj = ops.e_op(n, i), ops.e_op(n, j), ops.f_op(n, i), ops.f_op(n, j)
    assert commutator(ei, ej, p).is_zero()
    assert commutator(fi, fj, p).is_zero()
    assert commutator(ei, fj, p) == (p if i == j else SPoly.zero(n))


# --- D_s, X_s, Euler, Gamma examples --------------------------------------------------


def test_Ds_examples():
    assert apply_Ds(P("q1^3")).is_zero()
    assert apply_Ds(P("x1")) == P("q1")
    assert apply_Ds(P("x2 q1")) == P("1")
    assert apply_Ds(P("2x1 - x2 q1^2")).is_zero()


def test_Xs_examples():
    assert apply_Xs(SPoly.zero(1)).is_zero()
    assert apply_Xs(P("1")) == P("x2 q1")
    assert apply_Xs(P("q1")) == P("-x1 + x2 q1^2")


def test_Euler_examples():
    assert apply_Euler(P("q1^5")).is_zero()
    assert apply_Euler(P("x1 x2 q1")) == P("2x1 x2 q1")
    assert apply_Euler(P("x1 + x1^2")) == P("x1 + 2x1^2")


def test_Gamma_examples():
    assert apply_Gamma(P("1")).is_zero()
    m = P("2x1 - x2 q1^2")
    assert apply_Gamma(m) == -m
    assert apply_Gamma(P("x2 q1")).is_zero()


def test_commutator_example():
    p = P("x1 x2 q1")
    assert commutator(apply_Ds, apply_Xs, p) == p.scale(3)


@given(st.data())
def test_Ds_Xs_match_sympy_oracle(data):
    n = data.draw(st.integers(1, 3))
    p = data.draw(spolys(n=n))
    e = to_sympy(p)
    assert apply_Ds(p) == from_sympy(oracle_Ds(e, n), n)
    assert apply_Xs(p) == from_sympy(oracle_Xs(e, n), n)


@given(st.data())
def test_expression_and_fast_paths_agree(data):
    n = data.draw(st.integers(1, 2))
    p = data.draw(spolys(n=n, max_base=3, max_spinor=3))
    assert ops.Ds_expr(n)(p) == apply_Ds(p)
    assert ops.Xs_expr(n)(p) == apply_Xs(p)
    assert ops.Euler_expr(n)(p) == apply_Euler(p)
    assert ops.Gamma_expr(n)(p) == apply_Gamma(p)


@given(st.data())
def test_sl2_relations(data):
    n = data.draw(st.integers(1, 3))
    p = data.draw(spolys(n=n))
    En = ops.Euler_expr(n) + OperatorExpr.identity(n, n)
    Ds, Xs = ops.Ds_expr(n), ops.Xs_expr(n)
    assert commutator(En, Ds, p) == -apply_Ds(p)
    assert commutator(En, Xs, p) == apply_Xs(p)
    assert commutator(Ds, Xs, p) == En(p)
    assert commutator(apply_Gamma, apply_Xs, p).is_zero()
    assert commutator(apply_Gamma, apply_Ds, p).is_zero()


@given(st.data())
def test_degree_shifts(data):
    n = data.draw(st.integers(1, 3))
    k = data.draw(st.integers(0, 4))
    p = data.draw(spolys(n=n)).graded_part(k)
    ds, xs = apply_Ds(p), apply_Xs(p)
    assert ds.is_zero() or ds.homogeneous_degree() == k - 1
    assert xs.is_zero() or xs.homogeneous_degree() == k + 1
    for (b, s) in ds.bidegree_support() | xs.bidegree_support():
        assert any(abs(s - s0) == 1 for _, s0 in p.bidegree_support())


def test_operator_algebra():
    n = 1
    p = P("x1 q1 + 2x2")
    A = ops.Xs_expr(n) @ ops.Ds_expr(n)
    assert A(p) == apply_Xs(apply_Ds(p))
    assert (ops.Ds_expr(n) ** 2)(p) == apply_Ds(apply_Ds(p))
    assert (ops.Ds_expr(n) * 3 - ops.Ds_expr(n))(p) == apply_Ds(p).scale(2)
    with pytest.raises(ValueError):
        ops.Ds_expr(1) + ops.Ds_expr(2)


def test_xs_injective_examples():
    assert xs_injectivity_check(1, 0, 0).ok
    assert xs_injectivity_check(1, 1, 2).ok
    assert xs_injectivity_check(2, 2, 2).ok


# --- sp(2n) vector fields and matrices ---------------------------------------------------


def test_vectorfield_examples():
    assert ops.sp_vectorfield("X", 1, 1, P("x1")) == P("x1")
    assert ops.sp_vectorfield("Z", 1, 1, P("x1")).is_zero()
    assert ops.sp_vectorfield("Z", 1, 1, P("x2")) == P("2x1")
    with pytest.raises(IndexError):
        ops.sp_vectorfield("X", 2, 1, P("x1"))


def test_vectorfield_bracket_X11_Z11(rng):
    X = ops.sp_vectorfield_expr("X", 1, 1, 1)
    Z = ops.sp_vectorfield_expr("Z", 1, 1, 1)
    for _ in range(20):
        p = random_spoly(rng, 1, (0, 4), 2, (1, 5), True)
        assert commutator(X, Z, p) == Z(p).scale(2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrices_in_sp(n):
    for kind in "XYZ":
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert ops.in_sp(ops.sp_matrix(kind, i, j, n), n)
    for key in ops.quadratic_basis(n):
        assert ops.in_sp(ops.rho_star({key: Scalar(1)}, n), n)


def test_literal_X_leaves_sp():
    assert ops.in_sp(ops.sp_matrix("X", 1, 1, 2, LITERAL), 2)
    assert not ops.in_sp(ops.sp_matrix("X", 1, 2, 2, LITERAL), 2)


@pytest.mark.parametrize("n", [1, 2])
def test_vectorfields_represent_matrices(n):
    """Named fields are V_M = sum M_ab x_b d_a of their matrices, and [V_A, V_B] = -V_[A,B]."""
    rng = random.Random(n)
    gens = [(k, i, j) for k in "XYZ" for i in range(1, n + 1) for j in range(1, n + 1)]
    samples = [random_spoly(rng, n, (0, 3), 0, (1, 4)) for _ in range(4)]

    def field(M):
        m = 2 * n
        terms = []
        for a in range(m):
            for b in range(m):
                c = M[a, b]
                if c:
                    terms.append((c, ((ops.MULX, b + 1), (ops.DDX, a + 1))))
        return OperatorExpr(n, terms)

    for g in gens:
        M = ops.sp_matrix(*g, n)
        for p in samples:
            assert ops.sp_vectorfield_expr(*g, n)(p) == field(M)(p)
    for ga in gens:
        for gb in gens:
            A, B = ops.sp_matrix(*ga, n), ops.sp_matrix(*gb, n)
            VA, VB = ops.sp_vectorfield_expr(*ga, n), ops.sp_vectorfield_expr(*gb, n)
            for p in samples[:2]:
                assert commutator(VA, VB, p) == -field(A.bracket(B))(p)


def test_rho_star_examples():
    two_x11 = ops.sp_matrix("X", 1, 1, 1) * 2
    assert ops.rho_star(ops.parse_quadratic("e1f1+f1e1"), 1) == two_x11
    assert ops.rho_star(ops.parse_quadratic("f1f1"), 1) == ops.sp_matrix("Z", 1, 1, 1)
    r12 = ops.rho_star(ops.parse_quadratic("e1e2"), 2)
    assert r12 == -ops.sp_matrix("Y", 1, 2, 2)
    assert r12 == ops.rho_star(ops.parse_quadratic("e2e1"), 2)


def test_parse_quadratic_errors():
    for bad in ["e1f1", "e1", "e1e2e3", "e1f2+f1e2", "g1g1"]:
        with pytest.raises(ops.QuadraticError):
            ops.parse_quadratic(bad)
    with pytest.raises(IndexError):
        ops.rho_star(ops.parse_quadratic("e1e3"), 2)


def test_L_star_examples():
    L = ops.L_star(ops.parse_quadratic("e1e1"), 1)
    assert L(P("1")) == P("i q1^2")
    L = ops.L_star(ops.parse_quadratic("f1f1"), 1)
    assert L(P("q1^2")) == P("-2i")
    L = ops.L_star(ops.parse_quadratic("e1f2+f2e1"), 2)
    assert L(P("q2", 2)) == P("q1", 2)
    with pytest.raises(ScalarModeError):
        ops.L_star(ops.parse_quadratic("e1e1"), 1, "rational")


def test_rho_inverse_round_trip():
    for n in (1, 2):
        for key in ops.quadratic_basis(n):
            u = {key: Scalar(1)}
            assert ops.rho_star_inverse(ops.rho_star(u, n), n) == u


@pytest.mark.parametrize("n", [1, 2, 3])
def test_induced_L_star_bracket_compatible(n):
    rng = random.Random(7 + n)
    samples = [random_spoly(rng, n, 0, 4, (1, 5), True) for _ in range(4)]
    recs = ops.bracket_compatibility(n, samples, variant=INDUCED)
    assert recs and all(r["status"] == "match" for r in recs)


def test_stated_L_star_bracket_findings():
    """The mixed-element rule as printed is not bracket-compatible; the discrepancy is pinned down here."""
    rng = random.Random(1)
    samples = [random_spoly(rng, 1, 0, 4, (1, 5), True) for _ in range(4)]
    recs = ops.bracket_compatibility(1, samples, variant=STATED)
    status = {(r["u"], r["v"]): r["status"] for r in recs}
    assert status[(("ee", 1, 1), ("ff", 1, 1))] == "central"
    assert list(status.values()).count("match") == 2
    recs2 = ops.bracket_compatibility(2, samples and [random_spoly(rng, 2, 0, 3, (1, 4), True)], variant=STATED)
    assert any(r["status"] == "mismatch" for r in recs2)
    assert all(r["status"] != "outside-image" for r in recs2)


def test_literal_convention_leaves_image():
    rng = random.Random(3)
    samples = [random_spoly(rng, 2, 0, 3, (1, 4), True)]
    recs = ops.bracket_compatibility(2, samples, variant=INDUCED, convention=LITERAL)
    assert any(r["status"] == "outside-image" for r in recs)
