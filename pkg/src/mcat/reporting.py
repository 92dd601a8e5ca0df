"""Structured reports (schema ``mcat-report/1``) and replayable witnesses.

A structured report is a JSON object::

    {
      "schema": "mcat-report/1",
      "command": "validate",          # sub-command that produced it
      "input": ["W"],                 # input references as given
      "budget": {"max_arity": 3, "max_depth": 2, "max_enum": 10000},
      "exit_code": 0,
      "report": {law, outcome, budget, checked, witness, details, children},
      "replay": null | {"law": "assoc-sequential", "args": [...]}
    }

Keys are sorted and no timing or address information is included, so equal
inputs give byte-identical documents.  ``replay.args`` encodes the law
arguments of a counterexample: arrows by signature and position in the
backend's deterministic hom enumeration, family maps by their three tuples.
"""
from __future__ import annotations

import json

from .core import Arrow, FamilyMap, InputError, Multicategory, ValidationReport

SCHEMA = "mcat-report/1"


def _obj(x):
    if isinstance(x, tuple):
        return [_obj(v) for v in x]
    return x


def _unobj(x):
    if isinstance(x, list):
        return tuple(_unobj(v) for v in x)
    return x


def _index(M: Multicategory, a: Arrow) -> int:
    for i, c in enumerate(M.iter_hom(a.dom, a.cod)):
        if c == a:
            return i
    raise InputError(f"{a} is not in the hom enumeration of {M.name}")


def encode(M: Multicategory, value):
    if isinstance(value, Arrow):
        return {"arrow": {"dom": _obj(value.dom), "cod": _obj(value.cod), "index": _index(M, value)}}
    if isinstance(value, FamilyMap):
        return {"map": {"source": _obj(value.source), "target": _obj(value.target),
                        "mapping": list(value.mapping)}}
    if isinstance(value, (list, tuple)):
        return {"list": [encode(M, v) for v in value]}
    if isinstance(value, (int, str)) or value is None:
        return value
    raise InputError(f"cannot encode witness value {value!r}")


def decode(M: Multicategory, data):
    if isinstance(data, dict):
        if "arrow" in data:
            a = data["arrow"]
            dom, cod = _unobj(a["dom"]), _unobj(a["cod"])
            for i, c in enumerate(M.iter_hom(dom, cod)):
                if i == a["index"]:
                    return c
            raise InputError(f"witness arrow index {a['index']} out of range")
        if "map" in data:
            m = data["map"]
            return FamilyMap(_unobj(m["source"]), _unobj(m["target"]), tuple(m["mapping"]))
        if "list" in data:
            return tuple(decode(M, v) for v in data["list"])
        raise InputError(f"unknown witness encoding {sorted(data)}")
    return data


def replay_block(M: Multicategory | None, report: ValidationReport) -> dict | None:
    if M is None or report.evidence is None:
        return None
    key, args = report.evidence
    return {"law": key, "args": [encode(M, a) for a in args]}


def replay_witness(M: Multicategory, block: dict) -> bool:
    """True when the encoded instance still violates its law on ``M``."""
    from .laws import replay
    args = tuple(decode(M, a) for a in block["args"])
    return replay(M, (block["law"], args))


def document(command: str, inputs, report: ValidationReport, exit_code: int,
             replay: dict | None = None) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "input": list(inputs),
        "budget": report.budget.as_dict(),
        "exit_code": exit_code,
        "report": report.to_dict(),
        "replay": replay,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_replay(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read witness report {path}: {exc}") from None
    if doc.get("schema") != SCHEMA:
        raise InputError(f"{path}: not a {SCHEMA} document")
    block = doc.get("replay")
    if not block:
        raise InputError(f"{path}: the report carries no counterexample to replay")
    return block
