"""Built-in datasets and the JSON document formats.

Two document kinds share ``"format": 1``:

``monodromy``
    ``{"format": 1, "kind": "monodromy", "strands": 3, "labels": [1, 2],
    "entries": [[2, 2], [1, -2]], "metadata": {...}}`` where every entry is
    a braid word (nonzero integers, ``i`` for sigma_i, ``-i`` for its inverse).

``tuple``
    ``{"format": 1, "kind": "tuple", "group": {"type": "perm", "degree": 3},
    "elements": ["(1,2)", "(1,3)", "()"]}``; matrix groups use
    ``{"type": "sl2mod", "modulus": m}`` and ``[[a, b], [c, d]]`` elements.
    ``labels`` is optional; without it every entry gets the same label.

Representation files (``--rep file.json``) look like
``{"format": 1, "kind": "representation", "strands": 3,
"group": {"type": "sl2mod", "modulus": 32}, "images": [...]}``.
"""

from __future__ import annotations

import copy
import hashlib
import json
from pathlib import Path
from typing import Any

import jsonschema

from .braids import BraidWord
from .groups import Matrix2ModM, Permutation
from .hurwitz import LabeledTuple, MonodromyFactorization
from .representations import Representation, make_representation, sl2_mod_rep, sym_rep

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """A document failed to parse or validate."""


_label = {"type": ["integer", "string"]}
_letter = {"type": "integer", "not": {"const": 0}}
_matrix = {"type": "array", "minItems": 2, "maxItems": 2,
           "items": {"type": "array", "minItems": 2, "maxItems": 2,
                     "items": {"type": "integer"}}}
_group = {
    "oneOf": [
        {"type": "object", "required": ["type", "degree"], "additionalProperties": False,
         "properties": {"type": {"const": "perm"}, "degree": {"type": "integer", "minimum": 1}}},
        {"type": "object", "required": ["type", "modulus"], "additionalProperties": False,
         "properties": {"type": {"const": "sl2mod"}, "modulus": {"type": "integer", "minimum": 2}}},
    ]
}

MONODROMY_SCHEMA = {
    "type": "object",
    "required": ["format", "strands", "labels", "entries"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": FORMAT_VERSION},
        "kind": {"const": "monodromy"},
        "strands": {"type": "integer", "minimum": 2},
        "labels": {"type": "array", "items": _label},
        "entries": {"type": "array", "items": {"type": "array", "items": _letter}},
        "metadata": {"type": "object"},
    },
}

TUPLE_SCHEMA = {
    "type": "object",
    "required": ["format", "kind", "group", "elements"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": FORMAT_VERSION},
        "kind": {"const": "tuple"},
        "group": _group,
        "elements": {"type": "array", "items": {"anyOf": [{"type": "string"}, _matrix]}},
        "labels": {"type": "array", "items": _label},
        "metadata": {"type": "object"},
    },
}

REPRESENTATION_SCHEMA = {
    "type": "object",
    "required": ["format", "kind", "strands", "group", "images"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": FORMAT_VERSION},
        "kind": {"const": "representation"},
        "strands": {"type": "integer", "minimum": 2},
        "group": _group,
        "images": {"type": "array", "items": {"anyOf": [{"type": "string"}, _matrix]}},
        "metadata": {"type": "object"},
    },
}

SCHEMAS = {"monodromy": MONODROMY_SCHEMA, "tuple": TUPLE_SCHEMA,
           "representation": REPRESENTATION_SCHEMA}


# -- built-in data ---------------------------------------------------------

def _conj(u, v):
    """Letters of ``u v u^-1``."""
    return list(u) + list(v) + [-x for x in reversed(u)]


_FIBERS = {
    "A7": "(90+9*beta)/98", "A3": "0", "A2": "1",
    "A1": "(18+27*beta)/56", "A0": "-(45+36*beta)/7",
}
_LEGEND = {"1": "A7", "2": "A1", "3": "A2", "4": "A3", "5": "A0"}

_BUILTINS: dict[str, dict] = {
    "paper-sqrt2": {
        "format": 1,
        "kind": "monodromy",
        "strands": 3,
        "labels": [1, 2, 3, 4, 5],
        "entries": [
            [2] * 8,
            _conj([2] * 4, [1] * 2),
            _conj([2] * 3, [1] * 3),
            _conj([2], [1] * 4),
            _conj([-1] * 3, [2]),
        ],
        "metadata": {
            "curve": "C_sqrt2 (beta = sqrt(2))",
            "basis_order": ["A7", "A1", "A2", "A3", "A0"],
            "label_legend": _LEGEND,
            "fiber_z_values": _FIBERS,
        },
    },
    "paper-neg-sqrt2": {
        "format": 1,
        "kind": "monodromy",
        "strands": 3,
        "labels": [3, 5, 1, 4, 2],
        "entries": [
            [2] * 3,
            _conj([2, -1, 2], [1]),
            _conj([2], [1] * 8),
            _conj([-1] * 2, [2] * 4),
            _conj([-1] * 3, [2] * 2),
        ],
        "metadata": {
            "curve": "C_-sqrt2 (beta = -sqrt(2))",
            "basis_order": ["A2", "A0", "A7", "A3", "A1"],
            "label_legend": _LEGEND,
            "fiber_z_values": _FIBERS,
        },
    },
}

_SIGMA3 = [
    (["(1,2)", "(1,3)", "()"], (9, 162)),
    (["(1,2)", "(1,3)", "(1,2)"], (8, 24)),
    (["(1,2)", "(1,2,3)", "()"], (12, 48)),
    (["(1,2,3)", "(1,2,3)", "(1,2)"], (12, 48)),
    (["(1,2)", "(1,2)", "(1,2,3)"], (18, 17496)),
    (["(1,2)", "(1,3)", "(1,2,3)"], (18, 648)),
]
for _k, (_elts, (_orb, _order)) in enumerate(_SIGMA3, 1):
    _BUILTINS[f"sigma3-{_k}"] = {
        "format": 1,
        "kind": "tuple",
        "group": {"type": "perm", "degree": 3},
        "elements": _elts,
        "metadata": {"reported_orbit_size": _orb, "reported_group_order": _order},
    }

# sha256 of the canonical serialisation of each built-in
DIGESTS = {
    "paper-sqrt2": "b925ded1bb067b90d5bc274036b04b13cbf6d606b39bb7153d35ecd27447e32c",
    "paper-neg-sqrt2": "24eed7b0188b9b3fc5b57e9cc16c61208b030e3a4f725390987ce0796d68b4b6",
    "sigma3-1": "eec0872dbbcaa846e0bc05ccf4146d8dc23e5cc86e23df9542253897db22ceb3",
    "sigma3-2": "5a55d66bef3acf7c668d75b27623188d402e3b98474f3710b11d2ee5ac85dc3a",
    "sigma3-3": "108caefcf220e5feb19e4c968605785215f9d42f447d0691ce131cbe4098468a",
    "sigma3-4": "adcdfdff80780f6ad9fcf92f30bc22aa6a1011f99ec562741729600445f0e220",
    "sigma3-5": "ebbd84119ebdf8ab1c47281e9086669f62bb0cc16c5c6a73bbcdb4fffe93e852",
    "sigma3-6": "2e11e4fed3afc33c022303b6ad816c46356f7adf69f936c3111ef57f76106246",
}


def dataset_names() -> list[str]:
    return list(_BUILTINS)


def dataset(name: str) -> dict:
    """A fresh copy of a built-in document."""
    if name not in _BUILTINS:
        raise KeyError(f"unknown dataset {name!r}; known: {', '.join(_BUILTINS)}")
    return copy.deepcopy(_BUILTINS[name])


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def digest(doc: dict) -> str:
    return hashlib.sha256(canonical_json(doc).encode()).hexdigest()


# -- parsing ---------------------------------------------------------------

def _where(err: jsonschema.ValidationError) -> str:
    path = "/".join(str(p) for p in err.absolute_path)
    return f"at '{path}'" if path else "at top level"


def validate(doc: Any, kind: str | None = None) -> dict:
    """Schema-check a decoded document and return it."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    kind = kind or doc.get("kind", "monodromy")
    if kind not in SCHEMAS:
        raise DocumentError(f"unknown document kind {kind!r}")
    if doc.get("kind", kind) != kind:
        raise DocumentError(f"expected a {kind} document, got kind {doc.get('kind')!r}")
    validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise DocumentError(f"{kind} document invalid {_where(err)}: {err.message}")
    if kind == "monodromy":
        if len(doc["labels"]) != len(doc["entries"]):
            raise DocumentError(
                f"labels has {len(doc['labels'])} items but entries has {len(doc['entries'])}")
        d = doc["strands"]
        for k, word in enumerate(doc["entries"]):
            for l in word:
                if abs(l) > d - 1:
                    raise DocumentError(
                        f"monodromy document invalid at 'entries/{k}': letter {l} "
                        f"out of range for {d} strands")
    if kind == "tuple" and "labels" in doc and len(doc["labels"]) != len(doc["elements"]):
        raise DocumentError("labels and elements differ in length")
    return doc


def parse(text: str, kind: str | None = None) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return validate(doc, kind)


def serialize(doc: dict) -> str:
    validate(doc)
    return json.dumps(doc, indent=2) + "\n"


def load(ref: str, kind: str | None = None) -> dict:
    """Load ``@name`` (a built-in) or a path to a JSON document."""
    if ref.startswith("@"):
        try:
            doc = dataset(ref[1:])
        except KeyError as exc:
            raise DocumentError(exc.args[0]) from None
        return validate(doc, kind)
    try:
        text = Path(ref).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {ref}: {exc.strerror}") from None
    return parse(text, kind)


# -- conversion to library objects ----------------------------------------

def to_factorization(doc: dict) -> MonodromyFactorization:
    validate(doc, "monodromy")
    d = doc["strands"]
    return MonodromyFactorization(
        d, tuple((l, BraidWord(tuple(w), d)) for l, w in zip(doc["labels"], doc["entries"])))


def from_factorization(M: MonodromyFactorization, metadata: dict | None = None) -> dict:
    doc = {
        "format": FORMAT_VERSION,
        "kind": "monodromy",
        "strands": M.strands,
        "labels": list(M.labels),
        "entries": [list(b.letters) for b in M.braids],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def _element(spec: dict, item):
    if spec["type"] == "perm":
        if not isinstance(item, str):
            raise DocumentError("permutation elements are written in cycle notation")
        return Permutation.from_cycles(item, spec["degree"])
    if isinstance(item, str):
        raise DocumentError("matrix elements are written as [[a, b], [c, d]]")
    return Matrix2ModM.from_rows(item, spec["modulus"])


def to_tuple(doc: dict) -> LabeledTuple:
    validate(doc, "tuple")
    try:
        elems = [_element(doc["group"], e) for e in doc["elements"]]
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    return LabeledTuple.from_elements(elems, doc.get("labels"))


def parse_rep(spec: str) -> Representation:
    """``sl2mod:<m>``, ``sym:<d>`` or a representation JSON file."""
    kind, _, arg = spec.partition(":")
    if kind in ("sl2mod", "sym") and arg:
        try:
            n = int(arg)
        except ValueError:
            raise DocumentError(f"bad representation argument {arg!r}") from None
        if n < 2:
            raise DocumentError(f"{kind} needs an argument of at least 2")
        return sl2_mod_rep(n) if kind == "sl2mod" else sym_rep(n)
    doc = load(spec, "representation")
    try:
        images = [_element(doc["group"], e) for e in doc["images"]]
        return make_representation(doc["strands"], images)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def rep_to_doc(rep: Representation) -> dict:
    first = rep.images[0]
    if isinstance(first, Permutation):
        group = {"type": "perm", "degree": first.degree}
        images = [str(g) for g in rep.images]
    else:
        group = {"type": "sl2mod", "modulus": first.m}
        images = [g.rows() for g in rep.images]
    return {"format": FORMAT_VERSION, "kind": "representation", "strands": rep.strands,
            "group": group, "images": images}
