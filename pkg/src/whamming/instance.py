"""JSON instance documents.

An instance names a field, an ordered weight map and any of the matrices
``generator``, ``left``, ``right``; optional extras are the label sets
``H``/``K``, the vectors ``alpha``/``beta`` and free-form ``metadata``.
Weights are written as ``"a"`` or ``"a/b"`` strings in lowest terms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any

from whamming.errors import FieldError, InstanceError
from whamming.gf import FieldSpec, field_create
from whamming.wspace import CodeMatrix, WeightedSpace, parse_rational

MATRIX_KEYS = ("generator", "left", "right")
LABEL_SET_KEYS = ("H", "K")
VECTOR_KEYS = ("alpha", "beta")
KNOWN_KEYS = {"field", "omega", "metadata", *MATRIX_KEYS, *LABEL_SET_KEYS, *VECTOR_KEYS}


@dataclass(frozen=True)
class InstanceDoc:
    field: FieldSpec
    space: WeightedSpace
    matrices: dict[str, CodeMatrix] = dc_field(default_factory=dict)
    label_sets: dict[str, tuple[str, ...]] = dc_field(default_factory=dict)
    vectors: dict[str, tuple[int, ...]] = dc_field(default_factory=dict)
    metadata: dict[str, Any] = dc_field(default_factory=dict)

    def matrix(self, name: str) -> CodeMatrix:
        if name not in self.matrices:
            raise InstanceError(f"instance has no {name!r} matrix")
        return self.matrices[name]

    def vector(self, name: str) -> tuple[int, ...]:
        if name not in self.vectors:
            raise InstanceError(f"instance has no {name!r} vector")
        return self.vectors[name]


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceError(f"{where}: expected an integer, got {value!r}")
    return value


def parse_field(doc, where: str = "field") -> FieldSpec:
    if not isinstance(doc, dict):
        raise InstanceError(f"{where}: expected an object with keys p, m, modulus")
    unknown = set(doc) - {"p", "m", "modulus"}
    if unknown:
        raise InstanceError(f"{where}: unknown keys {sorted(unknown)}")
    if "p" not in doc:
        raise InstanceError(f"{where}.p: missing")
    p = _int(doc["p"], f"{where}.p")
    m = _int(doc.get("m", 1), f"{where}.m")
    modulus = doc.get("modulus")
    if modulus is not None:
        if not isinstance(modulus, list):
            raise InstanceError(f"{where}.modulus: expected an array of integers")
        modulus = [_int(c, f"{where}.modulus[{i}]") for i, c in enumerate(modulus)]
    try:
        return field_create(p, m, modulus)
    except FieldError as exc:
        raise InstanceError(f"{where}: {exc}") from None


def parse_omega(doc, where: str = "omega") -> WeightedSpace:
    if not isinstance(doc, dict) or not doc:
        raise InstanceError(f"{where}: expected a non-empty object label -> weight")
    weights = {}
    for label, raw in doc.items():
        if isinstance(raw, float):
            raise InstanceError(f"{where}[{label!r}]: weights must be exact (\"a\" or \"a/b\"), got {raw!r}")
        try:
            w = parse_rational(raw)
        except ValueError as exc:
            raise InstanceError(f"{where}[{label!r}]: {exc}") from None
        if w <= 0:
            raise InstanceError(f"{where}[{label!r}]: nonpositive weight {raw!r}")
        weights[label] = w
    return WeightedSpace(tuple(weights), weights)


def parse_vector(raw, field: FieldSpec, n: int, where: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or len(raw) != n:
        raise InstanceError(f"{where}: expected an array of {n} element indices")
    out = []
    for j, x in enumerate(raw):
        x = _int(x, f"{where}[{j}]")
        if not 0 <= x < field.q:
            raise InstanceError(f"{where}[{j}]: entry {x} out of range [0, {field.q})")
        out.append(x)
    return tuple(out)


def parse_matrix(raw, field: FieldSpec, space: WeightedSpace, where: str) -> CodeMatrix:
    if not isinstance(raw, list) or not raw:
        raise InstanceError(f"{where}: expected a non-empty array of rows")
    rows = tuple(parse_vector(r, field, len(space), f"{where}[{i}]") for i, r in enumerate(raw))
    return CodeMatrix(field, space, rows)


def instance_from_dict(doc: dict) -> InstanceDoc:
    if not isinstance(doc, dict):
        raise InstanceError("instance: top level must be an object")
    unknown = set(doc) - KNOWN_KEYS
    if unknown:
        raise InstanceError(f"instance: unknown keys {sorted(unknown)}")
    for key in ("field", "omega"):
        if key not in doc:
            raise InstanceError(f"instance: missing {key!r}")
    field = parse_field(doc["field"])
    space = parse_omega(doc["omega"])
    matrices = {key: parse_matrix(doc[key], field, space, key) for key in MATRIX_KEYS if key in doc}
    label_sets = {}
    for key in LABEL_SET_KEYS:
        if key in doc:
            labels = doc[key]
            if not isinstance(labels, list):
                raise InstanceError(f"{key}: expected an array of labels")
            for lab in labels:
                if lab not in space.omega:
                    raise InstanceError(f"{key}: unknown label {lab!r}")
            label_sets[key] = tuple(labels)
    vectors = {key: parse_vector(doc[key], field, len(space), key) for key in VECTOR_KEYS if key in doc}
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise InstanceError("metadata: expected an object")
    return InstanceDoc(field, space, matrices, label_sets, vectors, dict(metadata))


def loads(text: str) -> InstanceDoc:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return instance_from_dict(doc)


def parse_instance(path) -> InstanceDoc:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads(text)
    except InstanceError as exc:
        raise InstanceError(f"{path}: {exc}") from None


def instance_to_dict(inst: InstanceDoc) -> dict:
    doc: dict[str, Any] = {"field": inst.field.to_json(), "omega": inst.space.to_json()}
    for key in MATRIX_KEYS:
        if key in inst.matrices:
            doc[key] = [list(r) for r in inst.matrices[key].grid]
    for key in LABEL_SET_KEYS:
        if key in inst.label_sets:
            doc[key] = list(inst.label_sets[key])
    for key in VECTOR_KEYS:
        if key in inst.vectors:
            doc[key] = list(inst.vectors[key])
    if inst.metadata:
        doc["metadata"] = inst.metadata
    return doc


def dumps(obj) -> str:
    if isinstance(obj, InstanceDoc):
        obj = instance_to_dict(obj)
    return json.dumps(obj, indent=2) + "\n"


def restrict(inst: InstanceDoc, labels) -> InstanceDoc:
    """Sub-instance on the given coordinates (label order preserved)."""
    keep = [x for x in inst.space.labels if x in set(labels)]
    idx = [inst.space.index[x] for x in keep]
    space = WeightedSpace(tuple(keep), {x: inst.space.omega[x] for x in keep})
    matrices = {name: CodeMatrix(inst.field, space, tuple(tuple(r[j] for j in idx) for r in c.grid))
                for name, c in inst.matrices.items()}
    label_sets = {name: tuple(x for x in ls if x in keep) for name, ls in inst.label_sets.items()}
    vectors = {name: tuple(v[j] for j in idx) for name, v in inst.vectors.items()}
    return InstanceDoc(inst.field, space, matrices, label_sets, vectors, dict(inst.metadata))
