"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--end-to-end]

Each kernel runs on identical inputs in both backends; outputs are checked
for equality before timing.
"""
import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from sympdirac import _kernels_py as py
from sympdirac.kernelsolve import TruncatedSlice, assemble_Ds_matrix
from sympdirac.operators import _words
from sympdirac.sampling import random_spoly

try:
    from sympdirac import _ckernels as ck
except ImportError:
    ck = None


def big_poly(n, terms, seed=0):
    rng = random.Random(seed)
    p = random_spoly(rng, n, (0, 8), 8, terms)
    return p._re


def cases():
    t3 = big_poly(3, 4000)
    t2a, t2b = big_poly(2, 150, 1), big_poly(2, 150, 2)
    A = assemble_Ds_matrix(TruncatedSlice.build(2, 3, 6))
    B = assemble_Ds_matrix(TruncatedSlice.build(3, 2, 3))
    return [
        ("apply_words D_s (n=3, %d terms)" % len(t3), "apply_words", (t3, _words("Ds", 3))),
        ("apply_words X_s (n=3, %d terms)" % len(t3), "apply_words", (t3, _words("Xs", 3))),
        ("mul_terms (n=2, %dx%d terms)" % (len(t2a), len(t2b)), "mul_terms", (t2a, t2b)),
        ("lin_comb (n=3, %d terms)" % len(t3), "lin_comb", (t3, 3, t3, -2)),
        ("ff_rref D_s n=2 k=3 dmax=6 (%dx%d)" % A.shape, "ff_rref", (A.rows, len(A.col_labels))),
        ("ff_rref D_s n=3 k=2 dmax=3 (%dx%d)" % B.shape, "ff_rref", (B.rows, len(B.col_labels))),
    ]


def call(mod, fn, args):
    if fn == "ff_rref":
        rows, ncols = args
        return getattr(mod, fn)([dict(r) for r in rows], ncols)
    return getattr(mod, fn)(*args)


def end_to_end():
    for label, env in (("cython", {}), ("python", {"SYMPDIRAC_PURE": "1"})):
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-m", "sympdirac", "verify"], env=dict(os.environ, **env),
                       check=True, capture_output=True)
        print(f"  verify (default config) {label:>7}: {time.perf_counter() - t0:7.2f}s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args()
    if ck is None:
        print("compiled kernels not built; install with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':<46}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
    for label, fn, fargs in cases():
        assert call(py, fn, fargs) == call(ck, fn, fargs), label
        tp = min(timeit.repeat(lambda: call(py, fn, fargs), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: call(ck, fn, fargs), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:<46}{tp:11.2f}{tc:11.2f}{tp / tc:8.2f}x")
    if args.end_to_end:
        end_to_end()
    return 0


if __name__ == "__main__":
    sys.exit(main())
