"""Weights of sp(2n) in the orthogonal basis L_1..L_n.

Fundamental weights are ``omega_i = L_1 + ... + L_i``; ``omega_0`` is the
zero weight, which is what ``nu_b`` uses when ``n = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fischer import casimir_value
from .verdict import Verdict

__all__ = [
    "Weight",
    "casimir_eigenvalue",
    "delta",
    "fundamental",
    "infinitesimal_character_check",
    "mu",
    "nu",
    "weight_from_fundamental",
]


@dataclass(frozen=True)
class Weight:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        if other.n != self.n:
            raise ValueError(f"weight rank mismatch: {self.n} vs {other.n}")
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + other.scale(-1)

    def scale(self, c) -> "Weight":
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = scale

    def norm2(self) -> Fraction:
        return sum((c * c for c in self.coords), Fraction(0))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def fundamental(i: int, n: int) -> Weight:
    if not 0 <= i <= n:
        raise ValueError(f"fundamental weight index {i} outside 0..{n}")
    return Weight(tuple(1 if j < i else 0 for j in range(n)))


def weight_from_fundamental(coeffs) -> Weight:
    """``sum_i coeffs[i-1] * omega_i`` in L-coordinates."""
    coeffs = [Fraction(c) for c in coeffs]
    n = len(coeffs)
    if n < 1:
        raise ValueError("need at least one coefficient")
    # coordinate j collects the coefficients of omega_j .. omega_n
    out = []
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc += c
        out.append(acc)
    return Weight(tuple(reversed(out)))


def delta(n: int) -> Weight:
    return weight_from_fundamental([1] * n)


def mu(a, n: int) -> Weight:
    """Highest weight ``a omega_1 - omega_n / 2``."""
    return fundamental(1, n).scale(Fraction(a)) - fundamental(n, n).scale(Fraction(1, 2))


def nu(b, n: int) -> Weight:
    """Highest weight ``b omega_1 + omega_(n-1) - 3 omega_n / 2``."""
    return fundamental(1, n).scale(Fraction(b)) + fundamental(n - 1, n) - fundamental(n, n).scale(Fraction(3, 2))


def infinitesimal_character_check(n: int, amax: int, bmax: int) -> Verdict:
    """Sweep ``0 <= a <= amax``, ``0 <= b <= bmax``: ``|mu_a + delta|^2 == |nu_b + delta|^2`` must hold iff ``a == b``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    d = delta(n)
    mus = [(mu(a, n) + d).norm2() for a in range(amax + 1)]
    nus = [(nu(b, n) + d).norm2() for b in range(bmax + 1)]
    bad = []
    for a, ma in enumerate(mus):
        for b, nb in enumerate(nus):
            if (ma == nb) != (a == b):
                bad.append((a, b, ma, nb))
    name = f"|mu_a+delta|^2 = |nu_b+delta|^2 iff a = b (n={n}, a<={amax}, b<={bmax})"
    if not bad:
        return Verdict(name, True, "no counterexample")
    a, b, ma, nb = bad[0]
    kind = "equal off the diagonal" if a != b else "unequal on the diagonal"
    return Verdict(
        name,
        False,
        f"{len(bad)} counterexample(s); first a={a}, b={b}: {ma} vs {nb} ({kind})",
        lhs=ma,
        rhs=nb,
        data={"counterexamples": bad},
    )


def casimir_eigenvalue(ell: int, n: int) -> Fraction:
    if ell < 0:
        raise ValueError("ell must be non-negative")
    return casimir_value(ell, n)
