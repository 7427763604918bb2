"""Seeded random polynomials for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .poly import SPoly
from .scalar import Scalar


def _composition(rng: random.Random, total: int, parts: int) -> tuple:
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0] + cuts + [total]
    return tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def random_coeff(rng: random.Random, gaussian: bool = False) -> Scalar:
    def part():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    c = Scalar(part(), part() if gaussian and rng.random() < 0.5 else 0)
    return c if c else Scalar(1)


def random_spoly(
    rng: random.Random,
    n: int,
    base_degree=(0, 4),
    spinor_max: int = 4,
    nterms=(1, 6),
    gaussian: bool = False,
) -> SPoly:
    """Random polynomial; ``base_degree`` is an int (homogeneous) or an inclusive ``(lo, hi)`` range."""
    terms = {}
    count = rng.randint(*nterms) if isinstance(nterms, tuple) else nterms
    for _ in range(count):
        k = base_degree if isinstance(base_degree, int) else rng.randint(*base_degree)
        d = rng.randint(0, spinor_max)
        key = _composition(rng, k, 2 * n) + _composition(rng, d, n)
        terms[key] = terms.get(key, Scalar(0)) + random_coeff(rng, gaussian)
    return SPoly(n, terms)
