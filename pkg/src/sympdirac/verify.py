"""Randomized exact checks of every operator identity the engine relies on.

Each law samples seeded random polynomials and compares both sides with
exact equality. :class:`Engine` carries the ``X_s`` and ``D_s`` maps so a
deliberately broken operator can be swapped in to confirm a law notices.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import fischer
from .operators import (
    E,
    F,
    OperatorExpr,
    apply_Ds,
    apply_power,
    apply_Xs,
    bracket_compatibility,
    commutator,
    describe_quadratic,
)
from .poly import SPoly
from .sampling import random_spoly
from .weights import infinitesimal_character_check


@dataclass
class Engine:
    xs: Callable[[SPoly], SPoly] = apply_Xs
    ds: Callable[[SPoly], SPoly] = apply_Ds

    def euler_plus_n(self, p: SPoly) -> SPoly:
        out = SPoly.zero(p.n)
        for k, part in p.graded_parts().items():
            out = out + part.scale(k + p.n)
        return out

    def gamma(self, p: SPoly) -> SPoly:
        out = self.xs(self.ds(p))
        for k, part in p.graded_parts().items():
            out = out - part.scale(Fraction(k * (2 * p.n - 1 + k), 2))
        return out


def sabotaged_engine() -> Engine:
    """``X_s`` with the sign of its ``x_(2j) e_j`` half flipped."""
    from . import kernels

    def bad_xs(p: SPoly) -> SPoly:
        n = p.n
        words = []
        for j in range(1, n + 1):
            words.append((-1, ((2 * n + j - 1, kernels.DIFF), (2 * j - 2, kernels.MUL))))
            words.append((-1, ((2 * n + j - 1, kernels.MUL), (2 * j - 1, kernels.MUL))))
        return p.apply_words(words)

    return Engine(xs=bad_xs)


@dataclass
class VerifyConfig:
    ns: tuple = (1, 2, 3)
    degree: int = 4
    spinor: int = 4
    samples: int = 100
    proj_degree: int = 5
    proj_spinor: int = 5
    proj_samples: int = 30
    lemma_k: int = 4
    lemma_ell: int = 3
    seed: int = 0
    gaussian: bool = True


@dataclass
class LawResult:
    name: str
    n: int
    checked: int
    failures: int
    first_failure: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        s = f"[{tag}] n={self.n} {self.name} ({self.checked - self.failures}/{self.checked})"
        return s + (f" first failure: {self.first_failure}" if self.first_failure else "")


@dataclass
class Report:
    config: VerifyConfig
    results: list = field(default_factory=list)
    findings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def text(self) -> str:
        c = self.config
        lines = [
            f"sympdirac verify seed={c.seed} ns={','.join(map(str, c.ns))} degree<={c.degree} "
            f"spinor<={c.spinor} samples={c.samples} projector(degree<={c.proj_degree}, spinor<={c.proj_spinor}, "
            f"samples={c.proj_samples})"
        ]
        lines += [r.line() for r in self.results]
        if self.findings:
            lines.append("findings (informational, not part of the exit status):")
            lines += [f"  - {f}" for f in self.findings]
        passed = sum(r.ok for r in self.results)
        lines.append(f"summary: {passed}/{len(self.results)} laws passed")
        return "\n".join(lines) + "\n"


def _rand(rng, n, cfg: VerifyConfig, degree=None, spinor=None, homogeneous=False):
    degree = cfg.degree if degree is None else degree
    spinor = cfg.spinor if spinor is None else spinor
    bd = rng.randint(0, degree) if homogeneous else (0, degree)
    return random_spoly(rng, n, bd, spinor, (1, 6), cfg.gaussian)


# --- laws: each returns None on success or a short failure description -----


def _law_sl2(which):
    def check(eng: Engine, p: SPoly):
        if which == "EnD":
            lhs = commutator(eng.euler_plus_n, eng.ds, p)
            rhs = -eng.ds(p)
        elif which == "EnX":
            lhs = commutator(eng.euler_plus_n, eng.xs, p)
            rhs = eng.xs(p)
        else:
            lhs = commutator(eng.ds, eng.xs, p)
            rhs = eng.euler_plus_n(p)
        return None if lhs == rhs else f"p={p!r}"

    return check


def _law_clifford(p: SPoly):
    n = p.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ei, ej = OperatorExpr.atom(n, E, i), OperatorExpr.atom(n, E, j)
            fi, fj = OperatorExpr.atom(n, F, i), OperatorExpr.atom(n, F, j)
            if not commutator(ei, ej, p).is_zero():
                return f"[e{i},e{j}] != 0 on {p!r}"
            if not commutator(fi, fj, p).is_zero():
                return f"[f{i},f{j}] != 0 on {p!r}"
            want = p if i == j else SPoly.zero(n)
            if commutator(ei, fj, p) != want:
                return f"[e{i},f{j}] != delta on {p!r}"
    return None


def _law_gamma(which):
    def check(eng: Engine, p: SPoly):
        other = eng.xs if which == "X" else eng.ds
        return None if commutator(eng.gamma, other, p).is_zero() else f"p={p!r}"

    return check


def _monogenics(rng, n, cfg, max_ell):
    """Nonzero monogenics of each degree <= max_ell, extracted from random inputs."""
    out = []
    for ell in range(max_ell + 1):
        for _ in range(4):
            p = random_spoly(rng, n, ell, cfg.spinor, (1, 4), cfg.gaussian)
            m = fischer.decompose(p).components[ell].m
            if not m.is_zero():
                out.append((ell, m))
                break
    return out


def run(cfg: VerifyConfig | None = None, engine: Engine | None = None, findings: bool = True) -> Report:
    cfg = cfg or VerifyConfig()
    eng = engine or Engine()
    rep = Report(cfg)
    for n in cfg.ns:
        rng = random.Random(f"{cfg.seed}:{n}")
        pool = [_rand(rng, n, cfg) for _ in range(cfg.samples)]

        def sweep(name, fn, polys=pool):
            fails = 0
            first = ""
            for p in polys:
                msg = fn(p)
                if msg:
                    fails += 1
                    first = first or msg
            rep.results.append(LawResult(name, n, len(polys), fails, first))

        sweep("[E+n, D_s] = -D_s", lambda p: _law_sl2("EnD")(eng, p))
        sweep("[E+n, X_s] = X_s", lambda p: _law_sl2("EnX")(eng, p))
        sweep("[D_s, X_s] = E+n", lambda p: _law_sl2("DX")(eng, p))
        sweep("Clifford relations e_i e_j = e_j e_i, f_i f_j = f_j f_i, e_i f_j - f_j e_i = delta_ij", _law_clifford)
        sweep("[Gamma_s, X_s] = 0", lambda p: _law_gamma("X")(eng, p))
        sweep("[Gamma_s, D_s] = 0", lambda p: _law_gamma("D")(eng, p))

        monos = _monogenics(rng, n, cfg, cfg.lemma_ell)
        lem_checked = lem_fail = it_checked = it_fail = 0
        lem_first = it_first = ""
        for ell, m in monos:
            for k in range(cfg.lemma_k + 1):
                lhs = eng.ds(apply_power(eng.xs, k, m))
                rhs = SPoly.zero(n) if k == 0 else apply_power(eng.xs, k - 1, m).scale(Fraction(k * (2 * n + 2 * ell + k - 1), 2))
                lem_checked += 1
                if lhs != rhs:
                    lem_fail += 1
                    lem_first = lem_first or f"ell={ell} k={k}"
                for j in range(k + 1):
                    lhs = apply_power(eng.ds, j, apply_power(eng.xs, k, m))
                    rhs = apply_power(eng.xs, k - j, m).scale(fischer.coeff_c(j, k, ell, n))
                    it_checked += 1
                    if lhs != rhs:
                        it_fail += 1
                        it_first = it_first or f"ell={ell} j={j} k={k}"
        rep.results.append(LawResult("D_s X_s^k m = k(2n+2l+k-1)/2 X_s^(k-1) m", n, lem_checked, lem_fail, lem_first))
        rep.results.append(LawResult("D_s^j X_s^k m = c(j,k,l) X_s^(k-j) m", n, it_checked, it_fail, it_first))

        proj = [
            _rand(rng, n, cfg, cfg.proj_degree, cfg.proj_spinor, homogeneous=True) for _ in range(cfg.proj_samples)
        ]
        counts = {key: [0, 0, ""] for key in ("partition", "idempotent", "annihilate", "monogenic", "casimir", "eigen")}

        def tally(key, ok, msg):
            counts[key][0] += 1
            if not ok:
                counts[key][1] += 1
                counts[key][2] = counts[key][2] or msg

        for p in proj:
            k = p.homogeneous_degree() or 0
            pis = [fischer.project_explicit(p, k, i) for i in range(k + 1)]
            tally("partition", sum(pis, SPoly.zero(n)) == p, f"k={k} p={p!r}")
            for i, pi in enumerate(pis):
                again = [fischer.project_explicit(pi, k, i2) for i2 in range(k + 1)]
                for i2, q in enumerate(again):
                    if i2 == i:
                        tally("idempotent", q == pi, f"k={k} i={i}")
                    else:
                        tally("annihilate", q.is_zero(), f"k={k} i={i} i'={i2}")
                cas = fischer.project_casimir(p, k, k - i)
                tally("casimir", cas == pi, f"k={k} ell={k - i}")
                lam = fischer.casimir_value(k - i, n)
                tally("eigen", eng.gamma(cas) == cas.scale(lam), f"k={k} ell={k - i}")
            res = fischer.decompose(p, k)
            for c in res.components:
                tally("monogenic", eng.ds(c.m).is_zero(), f"k={k} ell={c.ell}")
            tally("partition", res.reconstruct() == p, f"reconstruction k={k}")
        names = {
            "partition": "sum_i pi^k_i p = p (and decompose reconstructs p)",
            "idempotent": "pi^k_i pi^k_i = pi^k_i",
            "annihilate": "pi^k_i pi^k_i' = 0 for i != i'",
            "monogenic": "D_s m_l = 0 for decompose components",
            "casimir": "Casimir projector = explicit projector",
            "eigen": "Gamma_s acts by -l(2n-1+l)/2 on X_s^(k-l) M_l components",
        }
        for key in ("partition", "idempotent", "annihilate", "monogenic", "casimir", "eigen"):
            chk, fl, first = counts[key]
            rep.results.append(LawResult(names[key], n, chk, fl, first))

    if findings:
        rep.findings = collect_findings(cfg)
    return rep


def collect_findings(cfg: VerifyConfig) -> list:
    out = []
    for n in (1, 2, 3, 4):
        v = infinitesimal_character_check(n, 20, 20)
        if not v.ok:
            out.append(f"infinitesimal character: {v.name}: {v.detail}")
    rng = random.Random(f"{cfg.seed}:bracket")
    for n in (1, 2):
        samples = [random_spoly(rng, n, 0, cfg.spinor, (1, 5), True) for _ in range(5)]
        recs = bracket_compatibility(n, samples)
        bad = [r for r in recs if r["status"] != "match"]
        if bad:
            r = bad[0]
            out.append(
                f"rho*/L* bracket compatibility n={n}: {len(bad)}/{len(recs)} pairs differ; first "
                f"[{describe_quadratic({r['u']: 1})}, {describe_quadratic({r['v']: 1})}] ({r['status']}"
                + (f", constant {r['constant']}" if r.get("constant") is not None else "")
                + ")"
            )
    return out
