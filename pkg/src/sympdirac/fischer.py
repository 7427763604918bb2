"""Fischer decomposition of spinor-valued polynomials into symplectic monogenics.

Every homogeneous ``p`` of base degree ``k`` splits uniquely as
``p = sum_l X_s^(k-l) m_l`` with ``D_s m_l = 0``. Two projector families
pick out the summands:

* ``project_explicit(p, k, i)`` evaluates ``sum_j a(i,k,j) X_s^(i+j) D_s^(i+j)``;
  its index ``i`` counts ``X_s`` factors (monogenic degree ``k - i``);
* ``project_casimir(p, k, ell)`` is the spectral projector of the Casimir
  and is indexed by the monogenic degree ``ell`` itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, perm

from .operators import apply_Ds, apply_Xs, apply_power
from .poly import SPoly
from .verdict import Verdict


class NotHomogeneous(ValueError):
    pass


class NotMonogenic(ValueError):
    pass


def coeff_c(j: int, k: int, l: int, n: int) -> Fraction:
    """Scalar with ``D_s^j X_s^k m = c X_s^(k-j) m`` for ``m`` monogenic of degree ``l``."""
    if min(j, k, l) < 0 or n < 1:
        raise ValueError(f"coeff_c needs j, k, l >= 0 and n >= 1 (got j={j}, k={k}, l={l}, n={n})")
    if j > k:
        return Fraction(0)
    return Fraction(perm(k, j) * perm(2 * n + 2 * l + k - 1, j), 2**j)


def coeff_a(i: int, k: int, j: int, n: int) -> Fraction:
    """Coefficient of ``X_s^(i+j) D_s^(i+j)`` in the projector ``pi^k_i``.

    Leading term ``1 / c(i, i, k-i)`` times the factor
    ``(-2)^j / j! * (alpha - j)! / alpha!`` with ``alpha = 2n + 2k - 2i - 2``.
    """
    if n < 1 or not 0 <= i <= k or not 0 <= j <= k - i:
        raise ValueError(f"coeff_a needs 0 <= i <= k and 0 <= j <= k - i (got i={i}, k={k}, j={j}, n={n})")
    c0 = coeff_c(i, i, k - i, n)
    assert c0 > 0
    alpha = 2 * n + 2 * k - 2 * i - 2
    return Fraction((-2) ** j, factorial(j) * perm(alpha, j)) / c0


def coeff_a_display(i: int, k: int, j: int, n: int) -> Fraction:
    """The projector coefficient in its commonly displayed closed form.

    Kept for comparison only: its final denominator ``2n + 2k - i - 1`` is
    missing the factorial that :func:`coeff_a` carries, and it does not
    give a projector in general.
    """
    if n < 1 or not 0 <= i <= k or not 0 <= j <= k - i:
        raise ValueError(f"coeff_a_display needs 0 <= i <= k and 0 <= j <= k - i (got i={i}, k={k}, j={j})")
    num = (-1) ** j * (2 * n + 2 * k - 2 * i - 1) * 2 ** (i + j) * factorial(2 * n + 2 * k - 2 * i - j - 2)
    return Fraction(num, factorial(i) * factorial(j) * (2 * n + 2 * k - i - 1))


def _require_degree(p: SPoly, k: int) -> None:
    if p.is_zero():
        return
    d = p.homogeneous_degree()
    if d is None:
        raise NotHomogeneous(f"input has base degrees {sorted(p.base_degrees())}; decompose graded parts separately")
    if d != k:
        raise NotHomogeneous(f"input has base degree {d}, expected {k}")


def _d_powers(p: SPoly, top: int) -> list:
    out = [p]
    for _ in range(top):
        out.append(apply_Ds(out[-1]))
    return out


def _explicit_from_powers(dp: list, k: int, i: int, n: int) -> SPoly:
    # X^i (sum_j a_j X^j D^(i+j) p), Horner in X
    r = dp[k].scale(coeff_a(i, k, k - i, n))
    for j in range(k - i - 1, -1, -1):
        r = apply_Xs(r) + dp[i + j].scale(coeff_a(i, k, j, n))
    return apply_power(apply_Xs, i, r)


def project_explicit(p: SPoly, k: int, i: int) -> SPoly:
    """Component of ``p`` in ``X_s^i M_(k-i)``."""
    if not 0 <= i <= k:
        raise ValueError(f"projector index i={i} outside 0..{k}")
    _require_degree(p, k)
    return _explicit_from_powers(_d_powers(p, k), k, i, p.n)


def casimir_value(ell: int, n: int) -> Fraction:
    return Fraction(-ell * (2 * n - 1 + ell), 2)


def project_casimir(p: SPoly, k: int, ell: int) -> SPoly:
    """Component of ``p`` in ``X_s^(k-ell) M_ell`` via the Casimir spectral projector."""
    if not 0 <= ell <= k:
        raise ValueError(f"monogenic degree ell={ell} outside 0..{k}")
    _require_degree(p, k)
    n = p.n
    lam = lambda j: j * (2 * n - 1 + j)  # noqa: E731  (= -2 * Casimir eigenvalue)
    shift = -lam(k)  # 2 Gamma = 2 X D - k(2n-1+k) on base degree k
    out = p
    for j in range(k + 1):
        if j == ell or out.is_zero():
            continue
        # (2 Gamma + lam(j)) / (lam(j) - lam(ell))
        out = (apply_Xs(apply_Ds(out)).scale(2) + out.scale(lam(j) + shift)).scale(Fraction(1, lam(j) - lam(ell)))
    return out


@dataclass(frozen=True)
class MonogenicComponent:
    ell: int
    m: SPoly

    def __post_init__(self):
        if not self.m.is_zero():
            if self.m.homogeneous_degree() != self.ell:
                raise NotHomogeneous(f"component for ell={self.ell} is not homogeneous of that degree")
            if not apply_Ds(self.m).is_zero():
                raise NotMonogenic(f"component for ell={self.ell} is not annihilated by D_s")


@dataclass
class DecompositionResult:
    k: int
    n: int
    components: list = field(default_factory=list)

    def __getitem__(self, ell: int) -> MonogenicComponent:
        return self.components[ell]

    def part(self, ell: int) -> SPoly:
        """The summand ``X_s^(k-ell) m_ell``."""
        return apply_power(apply_Xs, self.k - ell, self.components[ell].m)

    def reconstruct(self) -> SPoly:
        out = SPoly.zero(self.n)
        for c in self.components:
            out = out + self.part(c.ell)
        return out

    def nonzero(self) -> list:
        return [c for c in self.components if not c.m.is_zero()]


def decompose(p: SPoly, k: int | None = None) -> DecompositionResult:
    """Split a homogeneous polynomial into its monogenic pieces.

    Slot ``ell`` of the result holds ``m_ell`` with ``p = sum X_s^(k-ell) m_ell``.
    """
    if k is None:
        k = 0 if p.is_zero() else p.homogeneous_degree()
        if k is None:
            raise NotHomogeneous(f"input has base degrees {sorted(p.base_degrees())}; decompose graded parts separately")
    _require_degree(p, k)
    n = p.n
    dp = _d_powers(p, k)
    comps = []
    for ell in range(k + 1):
        i = k - ell
        part = _explicit_from_powers(dp, k, i, n)
        m = apply_power(apply_Ds, i, part).scale(1 / coeff_c(i, i, ell, n))
        comps.append(MonogenicComponent(ell, m))
    return DecompositionResult(k, n, comps)


def lemma_actsympl_check(m: SPoly, ell: int, k: int) -> Verdict:
    """Check ``D_s(X_s^k m) = k(2n + 2 ell + k - 1)/2 X_s^(k-1) m``."""
    MonogenicComponent(ell, m)  # validates
    n = m.n
    lhs = apply_Ds(apply_power(apply_Xs, k, m))
    if k == 0:
        rhs = SPoly.zero(n)
    else:
        rhs = apply_power(apply_Xs, k - 1, m).scale(Fraction(k * (2 * n + 2 * ell + k - 1), 2))
    ok = lhs == rhs
    return Verdict("D_s X_s^k m = k(2n+2l+k-1)/2 X_s^(k-1) m", ok, f"n={n} ell={ell} k={k}", None if ok else lhs, None if ok else rhs)


def iterated_lemma_check(m: SPoly, ell: int, j: int, k: int) -> Verdict:
    """Check ``D_s^j X_s^k m = coeff_c(j, k, ell, n) X_s^(k-j) m``."""
    MonogenicComponent(ell, m)
    n = m.n
    lhs = apply_power(apply_Ds, j, apply_power(apply_Xs, k, m))
    rhs = SPoly.zero(n) if j > k else apply_power(apply_Xs, k - j, m).scale(coeff_c(j, k, ell, n))
    ok = lhs == rhs
    return Verdict("D_s^j X_s^k m = c(j,k,l) X_s^(k-j) m", ok, f"n={n} ell={ell} j={j} k={k}", None if ok else lhs, None if ok else rhs)
