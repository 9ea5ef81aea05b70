"""Strict JSON description files for algebras and theories.

Keys: ``name``, ``kind``, ``dim``, ``parity``, ``structure``, ``unit``,
``trace``, ``symmetry``, ``star`` (``{"matrix", "flavor"}``), ``phi``,
``Phi``, ``reality``. Scalars are strings in the canonical ``a/b+c/d*i``
grammar; integers appear only in ``dim`` and ``parity``. Unknown or
repeated keys are rejected, as are floating-point numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import InputSyntaxError, SchemaError
from .scalars import GMatrix, format_scalar, parse_scalar
from .superalg import FLAVORS, StarStructure, SuperAlgebra
from .theories import KINDS, REALITIES, Payload, TheorySpec, build_theory

TOP_KEYS = ("name", "kind", "dim", "parity", "structure", "unit", "trace", "symmetry",
            "star", "phi", "Phi", "reality")
REQUIRED = ("dim", "parity", "structure", "unit")
STAR_KEYS = ("matrix", "flavor")


@dataclass
class Document:
    payload: Payload
    kind: Optional[str] = None
    name: str = ""

    @property
    def algebra(self) -> SuperAlgebra:
        return self.payload.algebra


# ----------------------------------------------------------------------------
# parsing


class _DuplicateKey(Exception):
    def __init__(self, key):
        self.key = key


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise _DuplicateKey(k)
        out[k] = v
    return out


def _reject_float(text):
    raise ValueError(f"floating point literal {text} is not allowed")


def _loads(text: str):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates,
                          parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    except _DuplicateKey as exc:
        raise SchemaError(str(exc.key), "duplicate key") from None
    except ValueError as exc:
        raise SchemaError("<number>", str(exc)) from None


def _int(value, fieldname: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(fieldname, "expected an integer")
    return value


def _scalar(value, fieldname: str):
    if not isinstance(value, str):
        raise SchemaError(fieldname, "scalars must be strings such as \"1/2+-1/3*i\"")
    return parse_scalar(value)


def _vector(value, length: Optional[int], fieldname: str) -> tuple:
    if not isinstance(value, list) or (length is not None and len(value) != length):
        raise SchemaError(fieldname, f"expected a list of {length} scalars" if length is not None
                          else "expected a list of scalars")
    return tuple(_scalar(x, fieldname) for x in value)


def _matrix(value, rows: int, cols: Optional[int], fieldname: str) -> GMatrix:
    if not isinstance(value, list) or len(value) != rows:
        raise SchemaError(fieldname, f"expected {rows} rows")
    parsed = [_vector(r, cols, fieldname) for r in value]
    width = len(parsed[0]) if parsed else (cols or 0)
    if any(len(r) != width for r in parsed):
        raise SchemaError(fieldname, "rows have different lengths")
    return GMatrix.from_rows(parsed, width)


def parse_document(text: str) -> Document:
    data = _loads(text)
    if not isinstance(data, dict):
        raise SchemaError("<root>", "expected a JSON object")
    for key in data:
        if key not in TOP_KEYS:
            raise SchemaError(key, "unknown key")
    for key in REQUIRED:
        if key not in data:
            raise SchemaError(key, "missing")
    dim = _int(data["dim"], "dim")
    if dim < 0:
        raise SchemaError("dim", "must be nonnegative")
    parity = data["parity"]
    if not isinstance(parity, list) or len(parity) != dim:
        raise SchemaError("parity", f"expected {dim} entries")
    parity = tuple(_int(p, "parity") for p in parity)
    if any(p not in (0, 1) for p in parity):
        raise SchemaError("parity", "entries must be 0 or 1")
    structure = data["structure"]
    if not isinstance(structure, list) or len(structure) != dim:
        raise SchemaError("structure", f"expected a {dim}x{dim}x{dim} array")
    for row in structure:
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError("structure", f"expected a {dim}x{dim}x{dim} array")
    dense = [[_vector(v, dim, "structure") for v in row] for row in structure]
    unit = _vector(data["unit"], dim, "unit")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("name", "expected a string")
    algebra = SuperAlgebra.from_dense(dim, parity, dense, unit, name)

    payload = Payload(algebra)
    if "trace" in data:
        payload.trace = _vector(data["trace"], dim, "trace")
    if "symmetry" in data:
        if data["symmetry"] not in ("symmetric-super", "twisted-symmetric"):
            raise SchemaError("symmetry", "expected symmetric-super or twisted-symmetric")
        payload.symmetry = data["symmetry"]
    if "star" in data:
        star = data["star"]
        if not isinstance(star, dict):
            raise SchemaError("star", "expected an object")
        for key in star:
            if key not in STAR_KEYS:
                raise SchemaError(f"star.{key}", "unknown key")
        if "matrix" not in star:
            raise SchemaError("star.matrix", "missing")
        flavor = star.get("flavor", "ordinary")
        if flavor not in FLAVORS:
            raise SchemaError("star.flavor", "expected ordinary or twisted")
        payload.star = StarStructure(algebra, _matrix(star["matrix"], dim, dim, "star.matrix"), flavor)
    if "phi" in data:
        payload.phi = _matrix(data["phi"], dim, None, "phi")
    if "Phi" in data:
        payload.Phi = _matrix(data["Phi"], dim, dim, "Phi")
    if "reality" in data:
        if data["reality"] not in REALITIES:
            raise SchemaError("reality", "expected real, imaginary or none")
        payload.reality = data["reality"]
    kind = data.get("kind")
    if kind is not None and kind not in KINDS:
        raise SchemaError("kind", f"unknown kind {kind!r}")
    return Document(payload, kind, name)


def parse_theory_file(text: str) -> TheorySpec:
    """Parse and validate a theory file (it must carry a ``kind``)."""
    doc = parse_document(text)
    if doc.kind is None:
        raise SchemaError("kind", "missing")
    return build_theory(doc.kind, doc.payload)


# ----------------------------------------------------------------------------
# printing


def _vec_json(v) -> list:
    return [format_scalar(x) for x in v]


def _mat_json(m: GMatrix) -> list:
    return [_vec_json(m.row(i)) for i in range(m.rows)]


def document_to_json(doc: Document) -> dict:
    a = doc.algebra
    out: dict = {}
    if doc.name:
        out["name"] = doc.name
    if doc.kind is not None:
        out["kind"] = doc.kind
    out["dim"] = a.dim
    out["parity"] = list(a.parity)
    out["structure"] = [[_vec_json(v) for v in row] for row in a.structure()]
    out["unit"] = _vec_json(a.unit)
    p = doc.payload
    if p.trace is not None:
        out["trace"] = _vec_json(p.trace)
    if p.symmetry is not None:
        out["symmetry"] = p.symmetry
    if p.star is not None:
        out["star"] = {"matrix": _mat_json(p.star.matrix), "flavor": p.star.flavor}
    if p.phi is not None:
        out["phi"] = _mat_json(p.phi)
    if p.Phi is not None:
        out["Phi"] = _mat_json(p.Phi)
    if p.reality is not None:
        out["reality"] = p.reality
    return out


def print_document(doc: Document) -> str:
    """Canonical text: one top-level key per line, innermost arrays inline."""
    obj = document_to_json(doc)
    lines = []
    for key, value in obj.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(value, separators=(',', ':'))}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def documents_equal(x: Document, y: Document) -> bool:
    return document_to_json(x) == document_to_json(y)
