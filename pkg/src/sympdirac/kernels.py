"""Kernel selection.

The compiled module is used when it was built; otherwise the pure-Python
fallback is loaded. Set ``SYMPDIRAC_PURE=1`` to force the fallback.
"""
import os

BACKEND = "python"

if os.environ.get("SYMPDIRAC_PURE", "") not in ("", "0"):
    from ._kernels_py import apply_words, ff_rref, lin_comb, mul_terms
else:
    try:
        from ._ckernels import apply_words, ff_rref, lin_comb, mul_terms

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._kernels_py import apply_words, ff_rref, lin_comb, mul_terms

from ._kernels_py import DIFF, MUL

__all__ = ["BACKEND", "DIFF", "MUL", "apply_words", "ff_rref", "lin_comb", "mul_terms"]
