"""Command-line interface.

Exit codes: 0 success, 1 an exact identity failed, 2 usage or parse error,
3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import fischer, kernelsolve, operators, textio
from .kernelsolve import DEFAULT_SIZE_CAP, SizeLimitError
from .operators import QuadraticError
from .poly import SPoly
from .scalar import GAUSSIAN, RATIONAL, ScalarModeError
from .verify import VerifyConfig, run, sabotaged_engine

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    n: int = 1
    scalar_mode: str = GAUSSIAN
    dmax: int = 4
    size_cap: int = DEFAULT_SIZE_CAP
    output: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("--n must be at least 1")
        if self.dmax < 0:
            raise UsageError("--dmax must be non-negative")
        if self.size_cap < 1:
            raise UsageError("--size-cap must be at least 1")


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _read_source(args) -> str:
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    if args.poly is not None and args.poly != "-":
        return args.poly
    return sys.stdin.read()


def _parse(cfg: RunConfig, src: str) -> SPoly:
    return textio.parse(src, cfg.n, cfg.scalar_mode)


# --- commands ------------------------------------------------------------------


def cmd_verify(cfg: RunConfig, args) -> tuple[int, str]:
    ns = (cfg.n,) if args.n_given else (1, 2, 3)
    vc = VerifyConfig(
        ns=ns,
        degree=args.degree,
        spinor=args.spinor,
        samples=args.samples,
        proj_samples=args.proj_samples,
        seed=cfg.seed,
        gaussian=cfg.scalar_mode == GAUSSIAN,
    )
    engine = sabotaged_engine() if args.inject_fault == "xs-sign" else None
    rep = run(vc, engine)
    if cfg.output == "json":
        body = json.dumps(
            {
                "seed": cfg.seed,
                "ok": rep.ok,
                "laws": [
                    {"n": r.n, "law": r.name, "checked": r.checked, "failures": r.failures, "first_failure": r.first_failure}
                    for r in rep.results
                ],
                "findings": rep.findings,
            },
            indent=2,
        ) + "\n"
    elif cfg.output == "csv":
        body = _csv([(r.n, r.name, r.checked, r.failures, "pass" if r.ok else "fail") for r in rep.results], ["n", "law", "checked", "failures", "status"])
    else:
        body = rep.text()
    return (EXIT_OK if rep.ok else EXIT_FAIL), body


def cmd_decompose(cfg: RunConfig, src: str) -> tuple[int, str]:
    p = _parse(cfg, src)
    blocks = []
    all_ok = True
    for k, part in p.graded_parts().items():
        res = fischer.decompose(part, k)
        ok = res.reconstruct() == part
        all_ok &= ok
        comps = [c for c in reversed(res.components) if not c.m.is_zero()]
        blocks.append((k, comps, ok))
    if cfg.output == "json":
        data = {
            "n": cfg.n,
            "input": textio.serialize(p),
            "degrees": [
                {
                    "k": k,
                    "reconstruction": ok,
                    "components": [
                        {"ell": c.ell, "xs_power": k - c.ell, "m": textio.serialize(c.m), "terms": textio.to_json(c.m)} for c in comps
                    ],
                }
                for k, comps, ok in blocks
            ],
        }
        body = json.dumps(data, indent=2) + "\n"
    elif cfg.output == "csv":
        rows = [(k, c.ell, k - c.ell, textio.serialize(c.m)) for k, comps, _ in blocks for c in comps]
        body = _csv(rows, ["k", "ell", "xs_power", "m"])
    else:
        lines = [f"n={cfg.n} input: {textio.serialize(p)}"]
        if not blocks:
            lines.append("no components (zero input)")
        for k, comps, ok in blocks:
            lines.append(f"k={k}:")
            for c in comps:
                lines.append(f"  ell={c.ell} X_s^{k - c.ell}: {textio.serialize(c.m)}")
            lines.append(f"  reconstruction: {'OK' if ok else 'FAILED'}")
        body = "\n".join(lines) + "\n"
    return (EXIT_OK if all_ok else EXIT_FAIL), body


def cmd_basis(cfg: RunConfig, k: int, parity) -> tuple[int, str]:
    kb = kernelsolve.monogenic_basis(cfg.n, k, cfg.dmax, parity, cfg.size_cap)
    bad = [v for v in kb.vectors if not operators.apply_Ds(v).is_zero()]
    if cfg.output == "json":
        body = json.dumps(
            {
                "n": cfg.n,
                "k": k,
                "dmax": cfg.dmax,
                "parity": parity or "all",
                "dimension": kb.dimension,
                "domain_dimension": len(kb.slice),
                "rank": kb.rank,
                "casimir": str(kb.meta["casimir"]),
                "vectors": [textio.to_json(v) for v in kb.vectors],
            },
            indent=2,
        ) + "\n"
    elif cfg.output == "csv":
        body = _csv([(i, textio.serialize(v)) for i, v in enumerate(kb.vectors)], ["index", "poly"])
    else:
        lines = [
            f"n={cfg.n} k={k} dmax={cfg.dmax} parity={parity or 'all'} dim={kb.dimension} "
            f"(domain {len(kb.slice)}, rank {kb.rank}, Gamma_s eigenvalue {kb.meta['casimir']})"
        ]
        lines += [textio.serialize(v) for v in kb.vectors]
        body = "\n".join(lines) + "\n"
    return (EXIT_FAIL if bad else EXIT_OK), body


def cmd_dimtable(cfg: RunConfig, kmax: int) -> tuple[int, str]:
    rows = kernelsolve.dimension_table(cfg.n, kmax, cfg.dmax, cfg.size_cap)
    if cfg.output == "json":
        keys = ["n", "k", "dmax", "parity", "dim"]
        return EXIT_OK, json.dumps([dict(zip(keys, r)) for r in rows], indent=2) + "\n"
    return EXIT_OK, kernelsolve.dimension_csv(rows)


def coeff_rows(n: int, k: int) -> list:
    """Rows ``(quantity, i, j, k, l, value, display_value, differs)``."""
    rows = []
    for j in range(k + 1):
        for l in range(k + 1):
            rows.append(("c", "", j, k, l, str(fischer.coeff_c(j, k, l, n)), "", ""))
    for i in range(k + 1):
        for j in range(k - i + 1):
            a = fischer.coeff_a(i, k, j, n)
            disp = fischer.coeff_a_display(i, k, j, n)
            rows.append(("a", i, j, k, "", str(a), str(disp), "yes" if a != disp else "no"))
    for ell in range(k + 1):
        rows.append(("casimir", "", "", k, ell, str(fischer.casimir_value(ell, n)), "", ""))
    return rows


def cmd_coeffs(cfg: RunConfig, k: int) -> tuple[int, str]:
    rows = coeff_rows(cfg.n, k)
    header = ["quantity", "i", "j", "k", "l", "value", "display_value", "differs"]
    if cfg.output == "csv":
        return EXIT_OK, _csv(rows, header)
    if cfg.output == "json":
        return EXIT_OK, json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    lines = [f"n={cfg.n} k={k}", "c(j,k,l) = D_s^j X_s^k scalar on degree-l monogenics:"]
    lines += [f"  c({j},{kk},{l}) = {v}" for q, _, j, kk, l, v, _, _ in rows if q == "c"]
    lines.append("a(i,k,j) projector coefficients (recursion value | closed form as displayed):")
    for q, i, j, kk, _, v, disp, diff in rows:
        if q == "a":
            flag = "  <-- differ" if diff == "yes" else ""
            lines.append(f"  a(i={i},k={kk},j={j}) = {v} | {disp}{flag}")
    lines.append("Casimir eigenvalues -l(2n-1+l)/2:")
    lines += [f"  l={l}: {v}" for q, _, _, _, l, v, _, _ in rows if q == "casimir"]
    return EXIT_OK, "\n".join(lines) + "\n"


APPLY_HELP = (
    "Ds, Xs, Euler, Gamma, e<j>, f<j>, vf:<X|Y|Z>:<i>:<j>, rho:<word> (matrix, no input), "
    "L:<word> / Lind:<word> (spinor operator), where <word> is e1e2, f1f1 or e1f2+f2e1"
)


def cmd_apply(cfg: RunConfig, op: str, src, convention: str) -> tuple[int, str]:
    n = cfg.n
    if op.startswith("rho:"):
        M = operators.rho_star(operators.parse_quadratic(op[4:]), n, convention)
        if cfg.output == "json":
            return EXIT_OK, json.dumps([[str(v) for v in r] for r in M.rows]) + "\n"
        return EXIT_OK, "\n".join(" ".join(str(v) for v in r) for r in M.rows) + "\n"
    simple = {"Ds": operators.apply_Ds, "Xs": operators.apply_Xs, "Euler": operators.apply_Euler, "Gamma": operators.apply_Gamma}
    if op in simple:
        fn = simple[op]
    elif len(op) >= 2 and op[0] in "ef" and op[1:].isdigit():
        fn = lambda p: operators.clifford_apply(op[0], int(op[1:]), p)  # noqa: E731
    elif op.startswith("vf:"):
        parts = op.split(":")
        if len(parts) != 4 or not parts[2].isdigit() or not parts[3].isdigit():
            raise UsageError(f"malformed vector field {op!r}; expected vf:X:1:2")
        expr = operators.sp_vectorfield_expr(parts[1], int(parts[2]), int(parts[3]), n, convention)
        fn = expr.apply
    elif op.startswith(("L:", "Lind:")):
        head, word = op.split(":", 1)
        variant = operators.INDUCED if head == "Lind" else operators.STATED
        fn = operators.L_star(operators.parse_quadratic(word), n, cfg.scalar_mode, variant).apply
    else:
        raise UsageError(f"unknown operator {op!r}; known: {APPLY_HELP}")
    p = _parse(cfg, src())
    out = fn(p)
    if cfg.output == "json":
        return EXIT_OK, json.dumps(textio.to_json(out)) + "\n"
    return EXIT_OK, textio.serialize(out) + "\n"


# --- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="half-dimension n (default 1; verify defaults to n=1,2,3)")
    common.add_argument("--scalar", choices=[RATIONAL, GAUSSIAN], default=GAUSSIAN)
    common.add_argument("--dmax", type=int, default=4, help="spinor-degree cap for solver commands")
    common.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP, help="largest allowed slice dimension")
    common.add_argument("--output", choices=["text", "json", "csv"], default="text")
    common.add_argument("--seed", type=int, default=0)

    def with_input(sp):
        sp.add_argument("poly", nargs="?", help="polynomial text; omit or '-' to read standard input")
        sp.add_argument("-f", "--file", help="read the polynomial from this file")

    ap = argparse.ArgumentParser(prog="sympdirac", description="Symplectic Dirac operator toolkit (exact arithmetic).")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run the exact identity suite")
    v.add_argument("--degree", type=int, default=4)
    v.add_argument("--spinor", type=int, default=4)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--proj-samples", type=int, default=30)
    v.add_argument("--inject-fault", choices=["xs-sign"], default=None, help=argparse.SUPPRESS)

    d = sub.add_parser("decompose", parents=[common], help="Fischer decomposition of a polynomial")
    with_input(d)

    b = sub.add_parser("basis", parents=[common], help="basis of truncated monogenics of base degree k")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--parity", choices=["even", "odd"], default=None)

    t = sub.add_parser("dimtable", parents=[common], help="kernel dimensions as CSV")
    t.add_argument("--kmax", type=int, required=True)

    c = sub.add_parser("coeffs", parents=[common], help="c, a and Casimir coefficient tables")
    c.add_argument("--k", type=int, required=True)

    a = sub.add_parser("apply", parents=[common], help="apply an operator to a polynomial")
    a.add_argument("op", help=APPLY_HELP)
    with_input(a)
    a.add_argument("--convention", choices=[operators.STANDARD, operators.LITERAL], default=operators.STANDARD)
    return ap


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        args.n_given = args.n is not None
        cfg = RunConfig(1 if args.n is None else args.n, args.scalar, args.dmax, args.size_cap, args.output, args.seed)
        cmd = args.command
        if cmd == "verify":
            code, body = cmd_verify(cfg, args)
        elif cmd == "decompose":
            code, body = cmd_decompose(cfg, _read_source(args))
        elif cmd == "basis":
            code, body = cmd_basis(cfg, args.k, args.parity)
        elif cmd == "dimtable":
            code, body = cmd_dimtable(cfg, args.kmax)
        elif cmd == "coeffs":
            code, body = cmd_coeffs(cfg, args.k)
        else:
            code, body = cmd_apply(cfg, args.op, lambda: _read_source(args), args.convention)
    except SizeLimitError as exc:
        print(f"sympdirac: {exc}", file=stderr)
        return EXIT_SIZE
    except textio.ParseError as exc:
        print(f"sympdirac: parse error at {exc}", file=stderr)
        return EXIT_USAGE
    except (UsageError, QuadraticError, ScalarModeError, ValueError, IndexError, OSError) as exc:
        print(f"sympdirac: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(body)
    return code


if __name__ == "__main__":
    sys.exit(main())
