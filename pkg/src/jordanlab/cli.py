"""Command-line front end: ``jordanlab <command> [options]``.

Exit codes: 0 success, 1 a check or membership test failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import StructureConstantAlgebra, validate
from .catalog import DEFAULT_SUITE, CatalogEntry, CatalogError, catalog_names, get_entry
from .centers import UnsupportedFieldError, is_semiprime_char0
from .fields import QQ, Field, field_from_spec
from .maps import KINDS, LinearMap, NotAMemberError, Spaces, classify_qjder, decompose_gjder, first_violation
from .serialize import InputError, algebra_to_json, dumps, load_algebra, load_map, map_to_json
from .verify import CHECK_IDS, Suite, UnknownCheckError, run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DEFAULT_MAX_DIM = 32


def max_dim() -> int:
    raw = os.environ.get("JORDANLAB_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"JORDANLAB_MAX_DIM must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError("JORDANLAB_MAX_DIM must be positive")
    return value


def _field(args) -> Field | None:
    if args.field is None:
        return None
    try:
        return field_from_spec(args.field)
    except ValueError as exc:
        raise InputError(f"--field: {exc}") from None


def resolve_entry(spec: str, field: Field | None) -> CatalogEntry:
    """``catalog:<name>`` or a path to an algebra document."""
    if spec.startswith("catalog:"):
        try:
            entry = get_entry(spec[len("catalog:"):], field or QQ)
        except (CatalogError, ValueError) as exc:
            raise InputError(f"--algebra: {exc}") from None
    else:
        path = Path(spec)
        if not path.is_file():
            raise InputError(f"--algebra: no such file {spec!r} (catalog algebras need the 'catalog:' prefix)")
        A = load_algebra(path)
        if field is not None and A.field != field:
            raise InputError(f"--algebra: file is over {A.field.name} but --field asks for {field.name}")
        entry = CatalogEntry(A)
    cap = max_dim()
    if entry.algebra.dim > cap:
        raise InputError(f"algebra {entry.name} has dimension {entry.algebra.dim} > JORDANLAB_MAX_DIM = {cap}")
    report = validate(entry.algebra)
    if not report:
        raise InputError(f"algebra {entry.name} is invalid ({report.kind}): {report.message}")
    return entry


def _need(args, attr: str, flag: str):
    value = getattr(args, attr, None)
    if value is None:
        raise InputError(f"{args.command}: {flag} is required")
    return value


def _map_doc(f: LinearMap) -> dict:
    return map_to_json(f)


def _violation_doc(A: StructureConstantAlgebra, law: str, pair, left, right) -> dict:
    i, j = pair
    fmt = A.field.format
    return {
        "law": law,
        "pair": [A.labels[i], A.labels[j]],
        "indices": [i, j],
        "left": None if left is None else [fmt(a) for a in left],
        "right": None if right is None else [fmt(a) for a in right],
    }


def _violation_text(A: StructureConstantAlgebra, v: dict) -> str:
    def show(side):
        return "(no value)" if side is None else A.format(tuple(A.field.parse(a) for a in side))

    a, b = v["pair"]
    return f"{v['law']} fails at pair ({a}, {b}): left = {show(v['left'])}, right = {show(v['right'])}"


# ---- commands --------------------------------------------------------------
# Each returns (exit code, json document, text).


def cmd_spaces(args):
    entry = resolve_entry(_need(args, "algebra", "--algebra"), _field(args))
    A = entry.algebra
    S = Spaces(A)
    doc = {"algebra": A.name, "field": A.field.to_json(), "dim": A.dim, "spaces": {}}
    lines = [f"algebra {A.name} over {A.field.name}, dim {A.dim}", f"{'space':<8} dim"]
    for kind in KINDS:
        M = S.by_kind(kind)
        rec: dict = {"dim": M.dim}
        lines.append(f"{kind:<8} {M.dim}")
        if args.bases:
            maps = M.maps()
            rec["basis"] = [_map_doc(f)["matrix"] for f in maps]
            for f in maps:
                lines.append(f"    {f.describe()}")
        doc["spaces"][kind] = rec
    return EXIT_OK, doc, "\n".join(lines)


def cmd_centers(args):
    entry = resolve_entry(_need(args, "algebra", "--algebra"), _field(args))
    A = entry.algebra
    S = Spaces(A)
    fmt = A.field.format
    doc = {"algebra": A.name, "field": A.field.to_json(), "dim": A.dim}
    lines = [f"algebra {A.name} over {A.field.name}, dim {A.dim}"]
    for key, sub in (("Z", S.z), ("Z_J", S.z_j), ("Z_Q", S.z_q)):
        doc[key] = {"dim": sub.dim, "basis": [[fmt(a) for a in b] for b in sub.basis]}
        lines.append(f"{key:<4} dim {sub.dim}: " + ", ".join(A.format(b) for b in sub.basis))
    try:
        semiprime = is_semiprime_char0(A)
    except UnsupportedFieldError:
        semiprime = None
    doc["semiprime"] = semiprime
    lines.append("semiprime: " + ("n/a (needs characteristic 0)" if semiprime is None else str(semiprime).lower()))
    return EXIT_OK, doc, "\n".join(lines)


def cmd_decompose(args):
    entry = resolve_entry(_need(args, "algebra", "--algebra"), _field(args))
    A = entry.algebra
    f = load_map(_need(args, "map", "--map"), A)
    try:
        d = decompose_gjder(A, f)
    except NotAMemberError as exc:
        v = _violation_doc(A, "GJDer", exc.pair, exc.left, exc.right)
        doc = {"algebra": A.name, "member": False, "violation": v, "message": str(exc)}
        return EXIT_FAIL, doc, f"not a generalized Jordan derivation\n{_violation_text(A, v)}\n{exc}"
    doc = {"algebra": A.name, "member": True}
    lines = [f"f = f1 + f2 on {A.name}"]
    for key in ("f1", "f2", "g", "h"):
        m = getattr(d, key)
        doc[key] = _map_doc(m)["matrix"]
        lines.append(f"{key:<3} {m.describe()}")
    return EXIT_OK, doc, "\n".join(lines)


def cmd_classify(args):
    entry = resolve_entry(_need(args, "algebra", "--algebra"), _field(args))
    A = entry.algebra
    f = load_map(_need(args, "map", "--map"), A)
    fmt = A.field.format
    bad = first_violation(A, "QJDer", f)
    if bad is not None:
        v = _violation_doc(A, "QJDer", *bad)
        doc = {"algebra": A.name, "member": False, "violation": v}
        return EXIT_FAIL, doc, f"not a quasi Jordan derivation\n{_violation_text(A, v)}"
    c = classify_qjder(A, f)
    doc = {"algebra": A.name, "member": True, "alpha": [fmt(a) for a in c.alpha]}
    lines = [f"alpha = f(1)/2 = {A.format(c.alpha)}"]
    if c.split:
        doc["verdict"] = "split"
        doc["jcent_part"] = _map_doc(c.verdict.jcent_part)["matrix"]
        doc["jder_part"] = _map_doc(c.verdict.jder_part)["matrix"]
        lines += [
            "verdict: split (alpha in Z_J)",
            f"Jordan centralizer part: {c.verdict.jcent_part.describe()}",
            f"Jordan derivation part:  {c.verdict.jder_part.describe()}",
        ]
    else:
        i, j = c.verdict.pair
        v = _violation_doc(A, "Z_J", (i, j), c.verdict.value, A.zero)
        doc["verdict"] = "obstructed"
        doc["violation"] = v
        lines += [
            "verdict: obstructed (alpha not in Z_J)",
            f"[[alpha, {A.labels[i]}], {A.labels[j]}] = {A.format(c.verdict.value)} != 0",
        ]
    return EXIT_OK, doc, "\n".join(lines)


def cmd_verify(args):
    field = _field(args) or QQ
    if args.algebra:
        entry = resolve_entry(args.algebra, field)
        suite = Suite(entry.algebra.field, names=(), extra=[entry])
    else:
        suite = Suite(field, DEFAULT_SUITE)
    try:
        report = run_checks(args.check or ["all"], suite)
    except UnknownCheckError as exc:
        raise InputError(exc.args[0]) from None
    return (EXIT_OK if report.passed else EXIT_FAIL), report.to_json(), report.to_text().rstrip("\n")


def cmd_export(args):
    entry = resolve_entry(_need(args, "algebra", "--algebra"), _field(args))
    doc = algebra_to_json(entry.algebra)
    return EXIT_OK, doc, dumps(doc).rstrip("\n")


def cmd_list(args):
    doc = {"catalog": catalog_names(), "default_suite": list(DEFAULT_SUITE), "checks": list(CHECK_IDS)}
    lines = ["catalog names: " + ", ".join(catalog_names()), "default suite: " + ", ".join(DEFAULT_SUITE), "checks: " + ", ".join(CHECK_IDS)]
    return EXIT_OK, doc, "\n".join(lines)


COMMANDS = {
    "spaces": (cmd_spaces, "dimensions (and bases) of the eight map spaces"),
    "centers": (cmd_centers, "Z, Z_J, Z_Q and the semiprimeness verdict"),
    "decompose": (cmd_decompose, "split a generalized Jordan derivation as f1 + f2"),
    "classify": (cmd_classify, "split a quasi Jordan derivation or certify that it cannot be split"),
    "verify": (cmd_verify, "run named checks over the catalog"),
    "export": (cmd_export, "write an algebra as a JSON document"),
    "list": (cmd_list, "catalog names and check ids"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="rational (default) or prime:p; applies to catalog algebras")
    common.add_argument("--algebra", help="algebra JSON file, or catalog:<name> (e.g. catalog:T2)")
    common.add_argument("--map", help="map JSON file")
    common.add_argument("--bases", action="store_true", help="also print bases")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--check", action="append", help="check id or 'all' (repeatable)")
    parser = argparse.ArgumentParser(prog="jordanlab", description="Exact computation of Jordan-type maps on finite-dimensional algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    fn = COMMANDS[args.command][0]
    try:
        code, doc, text = fn(args)
    except InputError as exc:
        print(f"jordanlab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"jordanlab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
