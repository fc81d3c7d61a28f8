"""Command-line interface.

Exit codes: 0 success, 1 nonzero defect in ``verify``, 2 parse error,
3 model invariant violation, 4 unknown model, algebra or suite.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Callable

from . import ce_model, classification as cls, modelfile
from .expr import ExpressionError, parse_trig
from .torus import (
    ConstantOneForm,
    cochain_differential,
    coordinate_names,
    ks_cocycle,
    roger_cocycle,
    singular_cocycle,
)
from .verify import SUITES, default_seed, run_suites

EXIT_OK, EXIT_DEFECT, EXIT_PARSE, EXIT_INVARIANT, EXIT_UNKNOWN = 0, 1, 2, 3, 4

ALGEBRAS = {
    "poisson-c": ("h2", "poisson_c"),
    "poisson": ("h2", "poisson"),
    "ham": ("h2", "ham"),
    "sp": ("h2", "sp"),
    "h1:poisson-c0": ("h1", "poisson_c0"),
    "h1:poisson-c": ("h1", "poisson_c"),
    "h1:poisson": ("h1", "poisson"),
    "h1:ham": ("h1", "ham"),
    "center": ("center", None),
}

DIRECT = {
    "sphere": cls.sphere,
}
SURFACE_RE = re.compile(r"surface(\d+)$")
LISTED_SURFACES = range(0, 4)


class UsageError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False)


# -- model resolution ---------------------------------------------------------


def _custom_models(models_dir: str | None) -> dict[str, Path]:
    if not models_dir:
        return {}
    d = Path(models_dir)
    if not d.is_dir():
        raise UsageError(EXIT_UNKNOWN, f"models directory {models_dir} does not exist")
    return {p.stem: p for p in sorted(d.glob("*.json"))}


def catalog_entries(models_dir: str | None = None) -> list[dict]:
    entries = []
    for name in ce_model.CATALOG:
        entries.append({"name": name, "kind": "ce-model"})
        entries.append({"name": f"{name}-punctured", "kind": "ce-model", "punctured": True})
    for name in DIRECT:
        entries.append({"name": name, "kind": "direct"})
        entries.append({"name": f"{name}-punctured", "kind": "direct", "punctured": True})
    for g in LISTED_SURFACES:
        entries.append({"name": f"surface{g}", "kind": "direct"})
    for name, path in _custom_models(models_dir).items():
        entries.append({"name": name, "kind": "model-file", "path": str(path)})
    return entries


def _load_file(path: Path) -> ce_model.CEModel:
    try:
        model = modelfile.load(path)
    except modelfile.ModelFileError as e:
        raise UsageError(EXIT_PARSE, f"{path}: {e}") from None
    return _checked(model)


def _checked(model: ce_model.CEModel) -> ce_model.CEModel:
    report = ce_model.validate(model)
    if not report.ok:
        lines = [f"model {model.name} violates its invariants:"]
        lines += [f"  {f.invariant}: {f.witness}" for f in report.failures]
        raise UsageError(EXIT_INVARIANT, "\n".join(lines))
    return model


def resolve(ref: str, models_dir: str | None = None):
    """Return (ce model or None, cohomology data) for a catalog name or model file path."""
    punctured = False
    base = ref
    if ref.endswith("-punctured"):
        punctured, base = True, ref[: -len("-punctured")]
    model = None
    custom = _custom_models(models_dir)
    if base in ce_model.CATALOG:
        model = ce_model.CATALOG[base]()
    elif base in custom:
        model = _load_file(custom[base])
    elif base in DIRECT:
        data = DIRECT[base]()
    elif SURFACE_RE.match(base):
        data = cls.surface(int(SURFACE_RE.match(base).group(1)))
    elif Path(ref).suffix == ".json" or Path(ref).is_file():
        if not Path(ref).is_file():
            raise UsageError(EXIT_UNKNOWN, f"no such model file {ref}")
        model, punctured = _load_file(Path(ref)), False
    else:
        raise UsageError(EXIT_UNKNOWN, f"unknown model {ref!r}; see `symcoh catalog`")
    if model is not None:
        data = cls.from_ce_model(_checked(model))
    if punctured:
        data = cls.puncture(data)
    return model, data


# -- reports ------------------------------------------------------------------


def report_document(data: cls.CohomologyData, algebra: str) -> dict:
    try:
        kind, tag = ALGEBRAS[algebra]
    except KeyError:
        raise UsageError(EXIT_UNKNOWN,
                         f"unknown algebra {algebra!r}; known: {', '.join(ALGEBRAS)}") from None
    doc = {"model": data.name, "algebra": algebra,
           "compactness": data.compactness.value, "total_dim": 0, "components": [],
           "tau_exponent": None}
    if kind == "h2":
        rep = cls.h2(data, tag)
        doc["components"] = [
            {"label": c.label, "dim": c.dim, "basis": [[_q(x) for x in v] for v in c.basis]}
            for c in rep.components
        ]
        doc["total_dim"] = rep.total
    elif kind == "h1":
        doc["total_dim"] = cls.h1(data, tag).dim
    else:
        doc["total_dim"] = cls.center_dim(data)
    return doc


def _format_report(doc: dict, labels: tuple[str, ...]) -> str:
    lines = [f"model      {doc['model']} ({doc['compactness']})",
             f"algebra    {doc['algebra']}",
             f"total dim  {doc['total_dim']}"]
    if doc["components"]:
        width = max(len(c["label"]) for c in doc["components"])
        lines.append("components")
        for c in doc["components"]:
            lines.append(f"  {c['label']:<{width}}  {c['dim']}")
            for v in c["basis"]:
                terms = [f"{x}*{labels[i]}" for i, x in enumerate(v) if x != "0"]
                lines.append(f"  {'':<{width}}    {' + '.join(terms)}")
    return "\n".join(lines)


def cohomology_document(model, data: cls.CohomologyData) -> dict:
    b = data.b1
    doc = {
        "model": data.name,
        "compactness": data.compactness.value,
        "betti": list(ce_model.betti_numbers(model)) if model is not None else None,
        "h1_basis": list(data.labels),
        "vol": _q(data.vol),
        "pairing": [[_q(x) for x in row] for row in data.P],
        "four_form": {",".join(data.labels[i] for i in idx): _q(data.Q[idx[0]][idx[1]][idx[2]][idx[3]])
                      for idx in combinations(range(b), 4) if data.Q[idx[0]][idx[1]][idx[2]][idx[3]]},
        "ker_B": [[_q(x) for x in v] for v in cls.ker_B(data)] if not data.compact else None,
        "ker_T": [[_q(x) for x in v] for v in cls.ker_T(data)],
        "center_dim": cls.center_dim(data),
    }
    return doc


def _format_cohomology(doc: dict) -> str:
    labels = doc["h1_basis"]
    lines = [f"model      {doc['model']} ({doc['compactness']})"]
    if doc["betti"] is not None:
        lines.append(f"betti      {' '.join(map(str, doc['betti']))}")
    lines.append(f"H1 basis   {', '.join(labels) if labels else '(none)'}")
    lines.append(f"vol        {doc['vol']}")
    if labels:
        width = max(len(x) for x in labels + [y for row in doc["pairing"] for y in row])
        lines.append("pairing")
        lines.append("  " + " " * width + "  " + "  ".join(f"{x:>{width}}" for x in labels))
        for name, row in zip(labels, doc["pairing"]):
            lines.append(f"  {name:>{width}}  " + "  ".join(f"{x:>{width}}" for x in row))
    for key, v in doc["four_form"].items():
        lines.append(f"Q({key}) = {v}")
    if doc["ker_B"] is not None:
        lines.append(f"Ker B      dim {len(doc['ker_B'])}")
    lines.append(f"Ker T      dim {len(doc['ker_T'])}")
    lines.append(f"center     dim {doc['center_dim']}")
    return "\n".join(lines)


# -- subcommands ----------------------------------------------------------------


def cmd_catalog(args) -> int:
    entries = catalog_entries(args.models_dir)
    if args.json:
        print(_dump(entries))
    else:
        for e in entries:
            print(f"{e['name']:<22} {e['kind']}")
    return EXIT_OK


def cmd_report(args) -> int:
    if args.algebra not in ALGEBRAS:
        raise UsageError(EXIT_UNKNOWN,
                         f"unknown algebra {args.algebra!r}; known: {', '.join(ALGEBRAS)}")
    _, data = resolve(args.model, args.models_dir)
    if args.puncture:
        if not data.compact:
            raise UsageError(EXIT_INVARIANT, f"{data.name} is already punctured")
        data = cls.puncture(data)
    doc = report_document(data, args.algebra)
    print(_dump(doc) if args.json else _format_report(doc, data.labels))
    return EXIT_OK


def cmd_cohomology(args) -> int:
    model, data = resolve(args.model, args.models_dir)
    doc = cohomology_document(model, data)
    print(_dump(doc) if args.json else _format_cohomology(doc))
    return EXIT_OK


def _parse_dims(values) -> tuple[int, ...]:
    dims = tuple(sorted(set(values))) if values else (2, 4)
    for d in dims:
        if d not in (2, 4):
            raise UsageError(EXIT_PARSE, f"--dim must be 2 or 4, got {d}")
    return dims


def cmd_verify(args) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    if any(s not in SUITES for s in suites):
        raise UsageError(EXIT_UNKNOWN,
                         f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}, all")
    if args.cases < 1:
        raise UsageError(EXIT_PARSE, "--cases must be positive")
    seed = default_seed() if args.seed is None else args.seed
    report = run_suites(suites, seed, args.cases, _parse_dims(args.dim))
    if args.json:
        print(_dump({
            "seed": seed,
            "ok": report.ok,
            "results": [
                {"suite": r.suite, "name": r.name, "dim": r.dim, "cases": r.cases,
                 "failures": r.failures, "first_failure": r.first_failure}
                for r in report.results
            ],
        }))
    else:
        print(f"seed {seed:#x}")
        for r in report.results:
            status = "ok" if r.ok else "FAIL"
            dim = f"2n={r.dim}" if r.dim is not None else ""
            print(f"{r.suite:<10} {r.name:<36} {dim:<6} {r.cases - r.failures:>4}/{r.cases:<4} {status}")
            if r.first_failure is not None:
                print(f"    first failure (replay with --seed {seed}): {r.first_failure}")
        print("all identities hold" if report.ok else "defects found")
    return EXIT_OK if report.ok else EXIT_DEFECT


def _parse_alpha(text: str, dim: int) -> ConstantOneForm:
    try:
        comps = [Fraction(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(EXIT_PARSE, f"bad --alpha {text!r}") from None
    if len(comps) != dim:
        raise UsageError(EXIT_PARSE, f"--alpha needs {dim} components, got {len(comps)}")
    return ConstantOneForm(tuple(comps))


def _parse_slice(text: str, dim: int) -> tuple[int, Fraction]:
    names = coordinate_names(dim)
    if dim == 2:
        text = re.sub(r"^([qp])=", r"\g<1>1=", text)
    m = re.fullmatch(r"(\w+)=(0|tau/2)", text.replace(" ", ""))
    if not m or m.group(1) not in names:
        raise UsageError(EXIT_PARSE, f"bad --slice {text!r}; use e.g. q1=0 or p1=tau/2")
    return names.index(m.group(1)), Fraction(0) if m.group(2) == "0" else Fraction(1, 2)


def cmd_cocycle(args) -> int:
    dim = args.dim
    if dim < 2 or dim % 2:
        raise UsageError(EXIT_PARSE, "--dim must be even and positive")
    try:
        fns = [parse_trig(t, dim) for t in args.functions]
    except ExpressionError as e:
        raise UsageError(EXIT_PARSE, str(e)) from None
    psi: Callable
    if args.kind == "roger":
        if args.alpha is None:
            raise UsageError(EXIT_PARSE, "roger needs --alpha")
        alpha = _parse_alpha(args.alpha, dim)
        psi = lambda f, g: roger_cocycle(alpha, f, g)
    elif args.kind == "ks":
        psi = ks_cocycle
    elif args.kind == "singular":
        if args.slice is None:
            raise UsageError(EXIT_PARSE, "singular needs --slice")
        j, c = _parse_slice(args.slice, dim)
        psi = lambda f, g: singular_cocycle(j, c, f, g)
    else:
        raise UsageError(EXIT_UNKNOWN, f"unknown cocycle {args.kind!r}; known: roger, ks, singular")
    if len(fns) == 2:
        value, what = psi(*fns), "value"
    elif len(fns) == 3:
        value, what = cochain_differential(psi, *fns), "cocycle defect"
    else:
        raise UsageError(EXIT_PARSE, "give two functions (value) or three (cocycle defect)")
    print(_dump({"cocycle": args.kind, what.replace(" ", "_"): str(value)}) if args.json
          else f"{what}: {value}")
    return EXIT_OK if len(fns) == 2 or value == 0 else EXIT_DEFECT


def _seed(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symcoh", description=(
        "Central extensions and Lie algebra cohomology of Poisson, hamiltonian "
        "and symplectic Lie algebras, computed exactly."))
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list built-in and custom models")
    c.add_argument("--json", action="store_true")
    c.add_argument("--models-dir")
    c.set_defaults(func=cmd_catalog)

    r = sub.add_parser("report", help="H^1, H^2 or center dimension for one algebra")
    r.add_argument("model", help="catalog name (e.g. thurston, surface2) or model file path")
    r.add_argument("--algebra", required=True, help=", ".join(ALGEBRAS))
    r.add_argument("--puncture", action="store_true", help="remove a point from the manifold")
    r.add_argument("--json", action="store_true")
    r.add_argument("--models-dir")
    r.set_defaults(func=cmd_report)

    h = sub.add_parser("cohomology", help="Betti numbers, pairings and transgression kernels")
    h.add_argument("model")
    h.add_argument("--json", action="store_true")
    h.add_argument("--models-dir")
    h.set_defaults(func=cmd_cohomology)

    v = sub.add_parser("verify", help="run the randomized identity suites")
    v.add_argument("--suite", default="all", help=", ".join(SUITES) + ", all")
    v.add_argument("--seed", type=_seed, default=None,
                   help="integer seed (default 0xC0FFEE or $SYMCOH_SEED)")
    v.add_argument("--cases", type=int, default=200)
    v.add_argument("--dim", type=int, action="append", help="2 or 4; repeatable (default both)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("cocycle", help="evaluate a torus cocycle on trig polynomials")
    k.add_argument("kind", help="roger, ks or singular")
    k.add_argument("functions", nargs="+", help="two functions, or three for the cocycle defect")
    k.add_argument("--dim", type=int, default=2)
    k.add_argument("--alpha", help="components of a constant 1-form, e.g. 1,0")
    k.add_argument("--slice", help="coordinate subtorus, e.g. q1=0 or p1=tau/2")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_cocycle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except cls.DataError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
