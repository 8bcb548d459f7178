"""JSON documents for pairs and sequences: the on-disk wire format.

A pair document looks like::

    {"variables": 2,
     "P": [{"exponents": [2, 2], "re": 0.06, "im": 0.0}, ...],
     "Q": [...],
     "metadata": {"name": "...", "source": "..."}}

and a sequence document like::

    {"variables": 2, "phases": [0.0, 1.5707963267948966], "indices": [1]}

Exponents are signed integers (one per variable), numbers are JSON doubles,
indices are 1-based.  Terms are serialized in lexicographic exponent order,
so serialization is deterministic and parse(serialize(x)) == x exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .laurent import LaurentPoly
from .su2 import MqspSequence, PQPair


class DocumentError(ValueError):
    """Raised when an on-disk document fails to parse or validate."""


# -- encoding ---------------------------------------------------------------


def poly_to_terms(poly: LaurentPoly) -> list[dict[str, Any]]:
    return [
        {"exponents": list(exps), "re": coeff.real, "im": coeff.imag}
        for exps, coeff in poly
    ]


def pair_to_document(pair: PQPair, metadata: dict[str, Any] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "variables": pair.variables,
        "P": poly_to_terms(pair.p),
        "Q": poly_to_terms(pair.q),
    }
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def sequence_to_document(seq: MqspSequence) -> dict[str, Any]:
    return {
        "variables": seq.variables,
        "phases": list(seq.phases),
        "indices": list(seq.indices),
    }


# -- decoding ---------------------------------------------------------------


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentError(message)


def _parse_variables(doc: Any) -> int:
    _require(isinstance(doc, dict), "document must be a JSON object")
    variables = doc.get("variables")
    _require(
        isinstance(variables, int) and not isinstance(variables, bool) and variables >= 1,
        f"'variables' must be a positive integer, got {variables!r}",
    )
    return variables


def poly_from_terms(records: Any, variables: int, label: str) -> LaurentPoly:
    _require(isinstance(records, list), f"'{label}' must be a list of term records")
    terms: dict[tuple[int, ...], complex] = {}
    for record in records:
        _require(isinstance(record, dict), f"{label}: term record must be an object")
        exps = record.get("exponents")
        _require(
            isinstance(exps, list)
            and len(exps) == variables
            and all(isinstance(e, int) and not isinstance(e, bool) for e in exps),
            f"{label}: 'exponents' must be a list of {variables} integers, got {exps!r}",
        )
        key = tuple(exps)
        _require(key not in terms, f"{label}: duplicate exponent vector {exps}")
        re, im = record.get("re"), record.get("im")
        for name, value in (("re", re), ("im", im)):
            _require(
                isinstance(value, (int, float)) and not isinstance(value, bool),
                f"{label}: '{name}' must be a number, got {value!r}",
            )
        terms[key] = complex(re, im)
    try:
        return LaurentPoly(variables, terms)
    except ValueError as exc:
        raise DocumentError(f"{label}: {exc}") from exc


def pair_from_document(doc: Any) -> PQPair:
    variables = _parse_variables(doc)
    p = poly_from_terms(doc.get("P"), variables, "P")
    q = poly_from_terms(doc.get("Q"), variables, "Q")
    return PQPair(p, q)


def sequence_from_document(doc: Any) -> MqspSequence:
    variables = _parse_variables(doc)
    phases = doc.get("phases")
    indices = doc.get("indices")
    _require(
        isinstance(phases, list)
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in phases),
        "'phases' must be a list of numbers",
    )
    _require(
        isinstance(indices, list)
        and all(isinstance(s, int) and not isinstance(s, bool) for s in indices),
        "'indices' must be a list of integers",
    )
    try:
        return MqspSequence(variables, tuple(phases), tuple(indices))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


# -- files ------------------------------------------------------------------


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc


def load_pair(path: str) -> PQPair:
    return pair_from_document(_load_json(path))


def load_sequence(path: str) -> MqspSequence:
    return sequence_from_document(_load_json(path))


def save_pair(pair: PQPair, path: str, metadata: dict[str, Any] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(pair_to_document(pair, metadata)))


def save_sequence(seq: MqspSequence, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(sequence_to_document(seq)))
