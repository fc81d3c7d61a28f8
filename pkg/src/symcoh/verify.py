"""Seeded randomized verification suites.

Each check runs a number of independent cases; case ``i`` of check ``name`` in
dimension ``dim`` draws from its own stream seeded by ``(seed, name, dim, i)``,
so a failure is replayable from the printed tuple alone.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import ce_model
from .darboux import DarbouxChart, case_rng, verify_identity
from .symplectic import canonical_betti, hodge_star
from .torus import (
    ConstantOneForm,
    cochain_differential,
    exact_collapse_defect,
    ks_cocycle,
    ks_triviality_defect,
    roger_cocycle,
    singular_cocycle,
    symplectic_action_defect,
)
from .trig import TrigRing

DEFAULT_SEED = 0xC0FFEE
SUITES = ("brylinski", "bracket", "cocycle")
BRYLINSKI_IDENTITIES = ("star-formula", "delta-k1", "delta-k2", "delta-pi", "cyclic-4term",
                        "commutator-exact", "closed-alpha-exactness")
BRACKET_IDENTITIES = ("bracket-antisym", "bracket-jacobi")
ROGER_FORMS = 5


def default_seed() -> int:
    env = os.environ.get("SYMCOH_SEED")
    return int(env, 0) if env else DEFAULT_SEED


@dataclass
class CheckResult:
    suite: str
    name: str
    dim: int | None
    cases: int = 0
    failures: int = 0
    first_failure: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass
class SuiteReport:
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def _run(suite: str, name: str, dim: int | None, cases: Iterable,
         evaluate: Callable[[object], tuple[object, dict]]) -> CheckResult:
    """``evaluate(case)`` returns (defect, inputs); a case passes iff the defect is zero."""
    res = CheckResult(suite, name, dim)
    for case in cases:
        defect, inputs = evaluate(case)
        res.cases += 1
        if defect != 0:
            res.failures += 1
            if res.first_failure is None:
                res.first_failure = {"case": case, "defect": repr(defect),
                                     "inputs": {k: repr(v) for k, v in inputs.items()}}
    return res


def _identity_check(suite: str, name: str, n: int, seed: int, cases: int) -> CheckResult:
    chart = DarbouxChart(n)

    def evaluate(i):
        r = verify_identity(name, chart, case_rng(seed, name, 2 * n, i))
        return r.defect, r.inputs

    return _run(suite, name, 2 * n, range(cases), evaluate)


def _star_involution(model: ce_model.CEModel) -> CheckResult:
    ctx = model.context
    keys = [key for k in range(model.dim + 1) for key in model.alg.basis(k)]

    def evaluate(key):
        a = model.alg.form({key: 1})
        return hodge_star(ctx, hodge_star(ctx, a)) - a, {"form": a}

    return _run("brylinski", f"star-squared:{model.name}", model.dim, keys, evaluate)


def _betti_equalities(model: ce_model.CEModel) -> CheckResult:
    def evaluate(k):
        lhs = canonical_betti(model.context, k)
        rhs = ce_model.betti(model, model.dim - k)
        return lhs - rhs, {"k": k, "canonical": lhs, "de_rham": rhs}

    return _run("brylinski", f"canonical-betti:{model.name}", model.dim,
                range(model.dim + 1), evaluate)


def _star_involution_chart(n: int, seed: int, cases: int) -> CheckResult:
    chart = DarbouxChart(n)

    def evaluate(i):
        rng = case_rng(seed, "star-squared", 2 * n, i)
        a = chart.random_form(rng, rng.randint(0, chart.dim))
        return chart.star(chart.star(a)) - a, {"form": a}

    return _run("brylinski", "star-squared", 2 * n, range(cases), evaluate)


def brylinski_suite(seed: int, cases: int, dims: Iterable[int]) -> list[CheckResult]:
    out = []
    for dim in dims:
        n = dim // 2
        for name in BRYLINSKI_IDENTITIES:
            out.append(_identity_check("brylinski", name, n, seed, cases))
        out.append(_star_involution_chart(n, seed, cases))
    for factory in ce_model.CATALOG.values():
        model = ce_model.check(factory())
        out.append(_star_involution(model))
        out.append(_betti_equalities(model))
    return out


def bracket_suite(seed: int, cases: int, dims: Iterable[int]) -> list[CheckResult]:
    out = []
    for dim in dims:
        n = dim // 2
        for name in BRACKET_IDENTITIES:
            out.append(_identity_check("bracket", name, n, seed, cases))
        chart = DarbouxChart(n)

        def evaluate(i, chart=chart, dim=dim):
            rng = case_rng(seed, "delta-ext", dim, i)
            a, b = chart.random_form(rng, 1), chart.random_form(rng, 1)
            da, db = (chart.delta(x).terms.get((), chart.ring.zero) for x in (a, b))
            lhs = chart.delta(chart.ext_bracket(a, b))
            return lhs - chart.function(chart.poisson(da, db)), {"alpha": a, "beta": b}

        out.append(_run("bracket", "delta-ext", dim, range(cases), evaluate))

        def jacobi(i, chart=chart, dim=dim):
            rng = case_rng(seed, "poisson-jacobi", dim, i)
            f, g, h = (chart.random_poly(rng) for _ in range(3))
            pb = chart.poisson
            return pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g)), {"f": f, "g": g, "h": h}

        out.append(_run("bracket", "poisson-jacobi", dim, range(cases), jacobi))

        def homomorphism(i, chart=chart, dim=dim):
            rng = case_rng(seed, "ham-homomorphism", dim, i)
            f, g = chart.random_poly(rng), chart.random_poly(rng)
            lhs = chart.ham_vf(chart.poisson(f, g))
            rhs = chart.ham_vf(f).bracket(chart.ham_vf(g))
            return (0 if lhs == rhs else lhs - rhs), {"f": f, "g": g}

        out.append(_run("bracket", "ham-homomorphism", dim, range(cases), homomorphism))
    return out


def _triple(ring: TrigRing, rng: random.Random):
    return tuple(ring.random(rng) for _ in range(3))


def cocycle_suite(seed: int, cases: int, dims: Iterable[int]) -> list[CheckResult]:
    out = []
    for dim in dims:
        ring = TrigRing(dim)

        def check(name, label, evaluate):
            """``evaluate(i, f, g, h)`` on the i-th seeded triple of ``name``."""
            def run(i):
                f, g, h = _triple(ring, case_rng(seed, name, dim, i))
                return evaluate(i, f, g, h)
            return _run("cocycle", label, dim, range(cases), run)

        def cocycle_check(label, psi):
            return check(label, label, lambda i, f, g, h: (cochain_differential(psi, f, g, h),
                                                           {"f": f, "g": g, "h": h}))

        form_rng = random.Random(f"{seed}:roger-forms:{dim}")
        for _ in range(ROGER_FORMS):
            alpha = ConstantOneForm.random(form_rng, dim)
            while not any(alpha.components):
                alpha = ConstantOneForm.random(form_rng, dim)
            out.append(cocycle_check(f"roger[{','.join(map(str, alpha.components))}]",
                                     lambda f, g, a=alpha: roger_cocycle(a, f, g)))
        out.append(cocycle_check("kostant-souriau", ks_cocycle))
        for j, coord in ((0, "q1"), (1, "p1")):
            for c in (Fraction(0), Fraction(1, 2)):
                label = f"singular[{coord}={'0' if not c else 'tau/2'}]"
                out.append(cocycle_check(label, lambda f, g, j=j, c=c: singular_cocycle(j, c, f, g)))
        out.append(check("ks-triviality", "ks-triviality",
                         lambda i, f, g, h: (ks_triviality_defect(f, g), {"f": f, "g": g})))
        out.append(check("exact-collapse", "exact-collapse",
                         lambda i, f, g, h: (exact_collapse_defect(h, f, g),
                                             {"f": f, "g": g, "h": h})))
        for mu in range(dim):
            v = [Fraction(int(m == mu)) for m in range(dim)]

            def action(i, f, g, h, v=v):
                alpha = ConstantOneForm.random(case_rng(seed, "action-form", dim, i), dim)
                return (symplectic_action_defect(alpha, v, f, g),
                        {"alpha": alpha, "f": f, "g": g})

            out.append(check(f"symplectic-action-{mu}", f"symplectic-action[d{mu}]", action))
    return out


SUITE_RUNNERS = {
    "brylinski": brylinski_suite,
    "bracket": bracket_suite,
    "cocycle": cocycle_suite,
}


def run_suites(names: Iterable[str], seed: int, cases: int, dims: Iterable[int]) -> SuiteReport:
    dims = tuple(dims)
    report = SuiteReport(seed)
    for name in names:
        try:
            runner = SUITE_RUNNERS[name]
        except KeyError:
            raise KeyError(f"unknown suite {name!r}; known: {list(SUITES)}") from None
        report.results.extend(runner(seed, cases, dims))
    return report
