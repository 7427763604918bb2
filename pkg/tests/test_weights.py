from fractions import Fraction

import pytest

from sympdirac.fischer import casimir_value
from sympdirac.weights import (
    Weight,
    casimir_eigenvalue,
    delta,
    fundamental,
    infinitesimal_character_check,
    mu,
    nu,
    weight_from_fundamental,
)

h = Fraction(1, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_delta(n):
    assert delta(n).coords == tuple(range(n, 0, -1))


def test_conversion_examples():
    assert mu(0, 2).coords == (-h, -h)
    assert nu(0, 2).coords == (-h, Fraction(-3, 2))
    assert weight_from_fundamental([1, 0, 0]).coords == (1, 0, 0)
    assert weight_from_fundamental([0, 0, 1]).coords == (1, 1, 1)
    assert fundamental(0, 3).coords == (0, 0, 0)
    with pytest.raises(ValueError):
        fundamental(4, 3)
    with pytest.raises(ValueError):
        weight_from_fundamental([])


def test_norm_and_arithmetic():
    w = Weight((h, -3, 2))
    assert w.norm2() == Fraction(1, 4) + 9 + 4
    assert (w + w).coords == w.scale(2).coords
    assert (w - w).norm2() == 0
    with pytest.raises(ValueError):
        w + Weight((1,))


def test_norm_examples_n2():
    d = delta(2)
    assert (mu(3, 2) + d).norm2() == (nu(3, 2) + d).norm2()
    assert (mu(0, 2) + d).norm2() != (nu(1, 2) + d).norm2()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_infinitesimal_character_n_ge_2(n):
    v = infinitesimal_character_check(n, 20, 20)
    assert v.ok, v.detail


def test_infinitesimal_character_n1_counterexamples():
    """At n = 1 the weight omega_(n-1) is zero and nu_b + delta collapses to (b - 1/2)."""
    v = infinitesimal_character_check(1, 20, 20)
    assert not v.ok
    bad = v.data["counterexamples"]
    assert bad[0][:2] == (0, 1)
    # equalities sit exactly at b = a + 1; the diagonal fails for every a >= 1
    assert {(a, b) for a, b, ma, nb in bad if ma == nb} == {(a, a + 1) for a in range(20)}
    assert {(a, b) for a, b, ma, nb in bad if ma != nb} == {(a, a) for a in range(1, 21)}


def test_casimir_eigenvalue():
    assert casimir_eigenvalue(0, 3) == 0
    assert casimir_eigenvalue(1, 1) == -1
    for n in (1, 2, 3):
        vals = [casimir_eigenvalue(l, n) for l in range(8)]
        assert vals == [casimir_value(l, n) for l in range(8)]
        assert len(set(vals)) == len(vals)
    with pytest.raises(ValueError):
        casimir_eigenvalue(-1, 1)
