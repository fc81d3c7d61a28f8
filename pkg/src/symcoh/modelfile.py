"""JSON model files for CE models.

Example::

    {"name": "thurston",
     "generators": ["x*", "p*", "z*", "h*"],
     "d": {"h*": [{"coeff": "-1", "indices": ["x*", "p*"]}]},
     "omega": [{"coeff": "1", "indices": [4, 1]}, {"coeff": "1", "indices": [3, 2]}],
     "vol": "1"}

Indices are 1-based positions or generator names.  Rationals are strings
``"p/q"`` (plain integers are accepted too).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .ce_model import CEModel
from .exterior import ExteriorAlgebra, Form


class ModelFileError(ValueError):
    """The document is not a well-formed model file."""


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ModelFileError(f"{where}: rationals must be strings like \"p/q\", got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ModelFileError(f"{where}: not a rational number: {x!r}") from None


def _index(alg: ExteriorAlgebra, i, where: str) -> int:
    if isinstance(i, bool):
        raise ModelFileError(f"{where}: bad index {i!r}")
    if isinstance(i, int):
        if not 1 <= i <= alg.size:
            raise ModelFileError(f"{where}: index {i} out of range 1..{alg.size}")
        return i - 1
    if isinstance(i, str) and i in alg.names:
        return alg.names.index(i)
    raise ModelFileError(f"{where}: unknown generator {i!r}")


def _terms(alg: ExteriorAlgebra, terms, where: str) -> Form:
    if not isinstance(terms, list):
        raise ModelFileError(f"{where}: expected a list of terms")
    out = alg.zero()
    for n, t in enumerate(terms):
        at = f"{where}[{n}]"
        if not isinstance(t, dict) or set(t) != {"coeff", "indices"}:
            raise ModelFileError(f"{at}: a term is {{\"coeff\": ..., \"indices\": [...]}}")
        idx = t["indices"]
        if not isinstance(idx, list) or len(idx) != 2:
            raise ModelFileError(f"{at}: a degree-2 term needs exactly two indices")
        out = out + alg.monomial(_rational(t["coeff"], at), *(_index(alg, i, at) for i in idx))
    return out


def from_dict(doc) -> CEModel:
    """Build the model; invariants are checked separately by :func:`symcoh.ce_model.validate`."""
    if not isinstance(doc, dict):
        raise ModelFileError("a model file is a JSON object")
    missing = {"name", "generators", "d", "omega"} - set(doc)
    if missing:
        raise ModelFileError(f"missing keys {sorted(missing)}")
    extra = set(doc) - {"name", "generators", "d", "omega", "vol"}
    if extra:
        raise ModelFileError(f"unknown keys {sorted(extra)}")
    gens = doc["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, str) and g for g in gens):
        raise ModelFileError("generators must be a list of nonempty names")
    if len(set(gens)) != len(gens):
        raise ModelFileError("duplicate generator names")
    alg = ExteriorAlgebra(gens)
    if not isinstance(doc["d"], dict):
        raise ModelFileError("d must map generator names to term lists")
    d = {}
    for g, terms in doc["d"].items():
        if g not in gens:
            raise ModelFileError(f"d: unknown generator {g!r}")
        d[g] = _terms(alg, terms, f"d[{g}]")
    omega = _terms(alg, doc["omega"], "omega")
    vol = doc.get("vol")
    if vol is not None:
        vol = _rational(vol, "vol")
    return CEModel(str(doc["name"]), gens, d, omega, vol=vol)


def loads(text: str) -> CEModel:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelFileError(f"invalid JSON: {e}") from None
    return from_dict(doc)


def load(path: str | Path) -> CEModel:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ModelFileError(f"cannot read {path}: {e.strerror}") from None
    return loads(text)


def _term_list(form: Form) -> list[dict]:
    return [{"coeff": str(c), "indices": [i + 1 for i in key]}
            for key, c in sorted(form.terms.items())]


def to_dict(model: CEModel) -> dict:
    doc = {
        "name": model.name,
        "generators": list(model.generators),
        "d": {g: _term_list(img) for g, img in zip(model.generators, model.d_table)
              if not img.is_zero()},
        "omega": _term_list(model.omega),
    }
    if model.declared_vol is not None:
        doc["vol"] = str(model.declared_vol)
    return doc


def dumps(model: CEModel) -> str:
    return json.dumps(to_dict(model), indent=2, ensure_ascii=False)
