"""Exact symplectic Dirac operator, Fischer decomposition and symplectic monogenics."""
from .fischer import (
    DecompositionResult,
    MonogenicComponent,
    coeff_a,
    coeff_c,
    decompose,
    project_casimir,
    project_explicit,
)
from .kernels import BACKEND
from .kernelsolve import monogenic_basis
from .operators import apply_Ds, apply_Euler, apply_Gamma, apply_Xs, commutator
from .poly import Monomial, SPoly
from .scalar import Scalar
from .textio import parse, serialize

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DecompositionResult",
    "Monomial",
    "MonogenicComponent",
    "SPoly",
    "Scalar",
    "apply_Ds",
    "apply_Euler",
    "apply_Gamma",
    "apply_Xs",
    "coeff_a",
    "coeff_c",
    "commutator",
    "decompose",
    "monogenic_basis",
    "parse",
    "project_casimir",
    "project_explicit",
    "serialize",
]
