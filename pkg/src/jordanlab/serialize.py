"""JSON documents for algebras and maps.

Algebra document::

    {"name": "T2", "dim": 3, "field": {"type": "rational"},
     "labels": ["e11", "e12", "e22"], "unit": ["1", "0", "1"],
     "table": [{"i": 0, "j": 0, "k": 0, "c": "1"}, ...]}

Map document::

    {"algebra": "T2", "matrix": [["0", "0", "0"], ...]}

Indices are 0-based.  Scalars are strings ``"p/q"`` (or integers).  A map
matrix has column j equal to the image of basis element j.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import StructureConstantAlgebra, validate
from .fields import Field, field_from_json
from .maps import LinearMap


class InputError(ValueError):
    """Malformed or invalid input document; message names the offending field."""


def _scalar(field: Field, raw, where: str):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise InputError(f"{where}: expected a string 'p/q' or an integer, got {raw!r}")
    try:
        return field.parse(raw) if isinstance(raw, str) else field.coerce(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: bad scalar {raw!r} ({exc})") from None


def _int(raw, where: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise InputError(f"{where}: expected an integer, got {raw!r}")
    return raw


def _loads(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def algebra_to_json(A: StructureConstantAlgebra) -> dict:
    fmt = A.field.format
    table = []
    for (i, j) in sorted(A.table):
        for k, c in A.table[(i, j)]:
            table.append({"i": i, "j": j, "k": k, "c": fmt(c)})
    return {
        "name": A.name,
        "dim": A.dim,
        "field": A.field.to_json(),
        "labels": list(A.labels),
        "unit": [fmt(a) for a in A.unit],
        "table": table,
    }


def algebra_from_json(doc, source: str = "<algebra>", check: bool = True) -> StructureConstantAlgebra:
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be an object")
    for key in ("name", "dim", "field", "labels", "unit", "table"):
        if key not in doc:
            raise InputError(f"{source}: missing field '{key}'")
    try:
        field = field_from_json(doc["field"])
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"{source}: field: {exc}") from None
    n = _int(doc["dim"], f"{source}: dim")
    if n < 1:
        raise InputError(f"{source}: dim must be positive")
    labels = doc["labels"]
    if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
        raise InputError(f"{source}: labels must be a list of {n} strings")
    unit = doc["unit"]
    if not isinstance(unit, list) or len(unit) != n:
        raise InputError(f"{source}: unit must be a list of {n} scalars")
    unit = [_scalar(field, a, f"{source}: unit[{t}]") for t, a in enumerate(unit)]
    if not isinstance(doc["table"], list):
        raise InputError(f"{source}: table must be a list")
    products: dict = {}
    for t, entry in enumerate(doc["table"]):
        where = f"{source}: table[{t}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where}: expected an object")
        try:
            i, j, k = (_int(entry[key], f"{where}.{key}") for key in "ijk")
        except KeyError as exc:
            raise InputError(f"{where}: missing field {exc}") from None
        for key, v in (("i", i), ("j", j), ("k", k)):
            if not 0 <= v < n:
                raise InputError(f"{where}.{key}: index {v} outside 0..{n - 1}")
        if "c" not in entry:
            raise InputError(f"{where}: missing field 'c'")
        c = _scalar(field, entry["c"], f"{where}.c")
        terms = products.setdefault((i, j), {})
        terms[k] = terms.get(k, field.zero) + c
    A = StructureConstantAlgebra.from_products(field, products, unit, labels, str(doc["name"]))
    if check:
        report = validate(A)
        if not report:
            raise InputError(f"{source}: invalid algebra ({report.kind}): {report.message}")
    return A


def load_algebra(path: str | Path, check: bool = True) -> StructureConstantAlgebra:
    path = Path(path)
    return algebra_from_json(_loads(path.read_text(), str(path)), str(path), check)


def map_to_json(f: LinearMap) -> dict:
    fmt = f.algebra.field.format
    return {"algebra": f.algebra.name, "matrix": [[fmt(a) for a in row] for row in f.matrix]}


def map_from_json(doc, A: StructureConstantAlgebra, source: str = "<map>") -> LinearMap:
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise InputError(f"{source}: expected an object with a 'matrix' field")
    ref = doc.get("algebra")
    if ref is not None and ref != A.name:
        raise InputError(f"{source}: map is for algebra {ref!r}, not {A.name!r}")
    M = doc["matrix"]
    n = A.dim
    if not isinstance(M, list) or len(M) != n or any(not isinstance(r, list) or len(r) != n for r in M):
        raise InputError(f"{source}: matrix must be {n}x{n}")
    rows = tuple(tuple(_scalar(A.field, a, f"{source}: matrix[{r}][{c}]") for c, a in enumerate(row)) for r, row in enumerate(M))
    return LinearMap(A, rows)


def load_map(path: str | Path, A: StructureConstantAlgebra) -> LinearMap:
    path = Path(path)
    return map_from_json(_loads(path.read_text(), str(path)), A, str(path))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
