"""Canonical JSON documents for extended semi-modules.

Field order is fixed; all values are integers, lists, or booleans, so the
output of :func:`dumps` is byte-stable for a given extended semi-module.
"""
from __future__ import annotations

import json

from .errors import InvalidInput
from .extended import ExtendedSemiModule, check_axioms, v_set
from .semimodule import SemiModule, SlopeDatum

FIELDS = ("m", "h", "mu", "B", "phi", "window_bound", "v_set", "dim", "cyclic")


def esm_document(esm: ExtendedSemiModule) -> dict:
    pairs = v_set(esm)
    return {
        "m": esm.base.m,
        "h": esm.base.h,
        "mu": list(esm.mu),
        "B": list(esm.base.gens),
        "phi": [[a, esm.phi[a]] for a in sorted(esm.phi)],
        "window_bound": esm.window_bound,
        "v_set": [list(p) for p in pairs],
        "dim": len(pairs),
        "cyclic": esm.is_cyclic,
    }


def dumps(doc: dict) -> str:
    ordered = {k: doc[k] for k in FIELDS}
    return json.dumps(ordered, separators=(", ", ": "), ensure_ascii=False)


def esm_from_document(doc: dict, validate: bool = True) -> ExtendedSemiModule:
    """Rebuild an extended semi-module; with ``validate`` every axiom is re-checked."""
    missing = [k for k in FIELDS if k not in doc]
    if missing:
        raise InvalidInput(f"document lacks fields {missing}")
    base = SemiModule(SlopeDatum(int(doc["m"]), int(doc["h"])), tuple(doc["B"]))
    phi = {int(a): int(v) for a, v in doc["phi"]}
    esm = ExtendedSemiModule(base, tuple(doc["mu"]), phi, int(doc["window_bound"]))
    if validate:
        report = check_axioms(esm)
        if not report.ok:
            raise InvalidInput(f"not an extended semi-module: {report}")
        if [list(p) for p in v_set(esm)] != [list(p) for p in doc["v_set"]]:
            raise InvalidInput("stored v_set disagrees with phi")
        if doc["dim"] != len(doc["v_set"]) or doc["cyclic"] != esm.is_cyclic:
            raise InvalidInput("stored dim/cyclic flags disagree with phi")
    return esm


def loads(line: str, validate: bool = True) -> ExtendedSemiModule:
    return esm_from_document(json.loads(line), validate=validate)
