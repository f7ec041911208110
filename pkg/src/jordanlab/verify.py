"""Named checks run over catalog algebras, and the report they produce."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field as dc_field
from functools import cached_property
from typing import Callable

from .algebra import StructureConstantAlgebra, check_condition_3, idempotent, is_triangular_idempotent, subalgebra_generated
from .catalog import DEFAULT_SUITE, CatalogEntry, get_entry, primer_algebra, obstructed_qjder_example, upper_triangular, grassmann3
from .centers import UnsupportedFieldError, is_semiprime_char0
from .fields import QQ, Field, RationalField
from .linalg import Subspace, contains, span, subspace_intersect, subspace_leq, subspace_sum
from .maps import (
    MapSpace,
    Spaces,
    classify_qjder,
    evaluation_preimage,
    first_violation,
    jordan_map,
    jordan_maps_of,
    jordan_preimage,
)


@dataclass
class CheckRecord:
    id: str
    statement: str
    anchor: str
    status: str  # "pass" | "fail" | "skip"
    details: list[str] = dc_field(default_factory=list)


@dataclass
class VerificationReport:
    records: list[CheckRecord]

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.records)

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [asdict(r) for r in self.records]}

    def to_text(self) -> str:
        width = max((len(r.id) for r in self.records), default=2)
        lines = [f"{'check':<{width}}  status  statement", "-" * (width + 60)]
        for r in self.records:
            lines.append(f"{r.id:<{width}}  {r.status.upper():<6}  {r.statement}")
            for d in r.details:
                lines.append(f"{'':<{width}}          {d}")
        n_fail = sum(r.status == "fail" for r in self.records)
        n_skip = sum(r.status == "skip" for r in self.records)
        lines.append("-" * (width + 60))
        lines.append(f"{len(self.records)} checks, {n_fail} failed, {n_skip} skipped")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


class Suite:
    """Algebras under test plus lazily computed spaces for each."""

    def __init__(self, field: Field = QQ, names=DEFAULT_SUITE, extra: list[CatalogEntry] | None = None):
        self.field = field
        self.names = list(names)
        self._extra = list(extra or [])
        self._spaces: dict[str, Spaces] = {}

    @cached_property
    def entries(self) -> list[CatalogEntry]:
        return [get_entry(nm, self.field) for nm in self.names] + self._extra

    def spaces(self, entry: CatalogEntry | StructureConstantAlgebra) -> Spaces:
        A = entry.algebra if isinstance(entry, CatalogEntry) else entry
        key = f"{A.name}@{id(A)}"
        if key not in self._spaces:
            self._spaces[key] = Spaces(A)
        return self._spaces[key]

    def semiprime(self, entry: CatalogEntry) -> bool | None:
        """None when the criterion is unavailable (positive characteristic)."""
        try:
            return is_semiprime_char0(entry.algebra)
        except UnsupportedFieldError:
            return None

    def matrix_entries(self):
        return [e for e in self.entries if e.name.startswith("M") and e.algebra.dim >= 4]

    def idempotent_generated(self):
        out = []
        for e in self.entries:
            if e.idempotent_generators and subalgebra_generated(e.algebra, e.idempotent_generators).is_full():
                out.append(e)
        return out

    def corner_entries(self):
        out = []
        for e in self.entries:
            if e.corner_idempotent is not None and check_condition_3(e.algebra, idempotent(e.algebra, e.corner_idempotent)):
                out.append(e)
        return out

    def triangular_entries(self):
        return [
            e
            for e in self.entries
            if e.triangular_idempotent is not None and is_triangular_idempotent(e.algebra, e.triangular_idempotent)
        ]

    @cached_property
    def primer(self) -> CatalogEntry:
        for e in self.entries:
            if e.name == "primer":
                return e
        return primer_algebra(self.field)


def _eq(name: str, U: Subspace | MapSpace, V: Subspace | MapSpace, lhs: str, rhs: str) -> tuple[bool, str]:
    u = U.space if isinstance(U, MapSpace) else U
    v = V.space if isinstance(V, MapSpace) else V
    ok = u == v
    return ok, f"{name}: {lhs} (dim {u.dim}) {'=' if ok else '!='} {rhs} (dim {v.dim})"


def _over(entries, fn) -> tuple[bool, list[str]]:
    ok, lines = True, []
    for e in entries:
        good, line = fn(e)
        ok &= good
        lines.append(line)
    return ok, lines


# ---- checks ----------------------------------------------------------------

Check = Callable[[Suite], tuple[bool | None, list[str]]]
REGISTRY: dict[str, tuple[str, str, Check]] = {}


def check(cid: str, statement: str, anchor: str):
    def deco(fn: Check) -> Check:
        REGISTRY[cid] = (statement, anchor, fn)
        return fn

    return deco


@check("T2.1a", "GJDer = QJCent + QJDer", "decomposition of generalized Jordan derivations")
def _t21a(s: Suite):
    def one(e):
        S = s.spaces(e)
        return _eq(e.name, S.gjder, subspace_sum(S.qjcent.space, S.qjder.space), "GJDer", "QJCent+QJDer")

    return _over(s.entries, one)


@check("T2.1b", "JCent = QJCent ∩ QJDer", "decomposition of generalized Jordan derivations")
def _t21b(s: Suite):
    def one(e):
        S = s.spaces(e)
        return _eq(e.name, S.jcent, subspace_intersect(S.qjcent.space, S.qjder.space), "JCent", "QJCent∩QJDer")

    return _over(s.entries, one)


def _semiprime_entries(s: Suite):
    if not isinstance(s.field, RationalField):
        return None
    return [e for e in s.entries if s.semiprime(e)]


@check("T2.3", "semiprime A: GJDer = Cent + Der", "generalized Jordan derivations of semiprime algebras")
def _t23(s: Suite):
    entries = _semiprime_entries(s)
    if entries is None:
        return None, ["semiprimeness criterion needs characteristic 0"]
    if not entries:
        return None, ["no semiprime algebra in the suite"]

    def one(e):
        S = s.spaces(e)
        return _eq(e.name, S.gjder, subspace_sum(S.cent.space, S.der.space), "GJDer", "Cent+Der")

    return _over(entries, one)


@check("Ex2-T2", "T2: x -> e12∘x is in QJCent, not in JCent, not a Jordan {f,g}-derivation", "upper triangular 2x2 example")
def _ex2(s: Suite):
    e = upper_triangular(2, s.field)
    A = e.algebra
    S = s.spaces(e)
    f = jordan_map(A, "e12")
    a, b, c = f in S.qjcent, f in S.jcent, f in S.fgder
    viol = first_violation(A, "JCent", f)
    lines = [f"in QJCent: {a}", f"in JCent: {b}", f"in FGDer: {c}"]
    if viol:
        (i, j), left, right = viol
        lines.append(f"JCent law fails at ({A.labels[i]}, {A.labels[j]}): {A.format(left)} != {A.format(right)}")
    return a and not b and not c, lines


@check("R2.2", "T_n: JCent != QJCent, witnessed by x -> e1n∘x", "upper triangular matrices")
def _r22(s: Suite):
    entries = [e for e in s.entries if e.name.startswith("T") and e.triangular_idempotent is not None]
    if not entries:
        entries = [upper_triangular(2, s.field)]

    def one(e):
        A = e.algebra
        S = s.spaces(e)
        n = int(e.name[1:])
        f = jordan_map(A, f"e1{n}" if n < 10 else f"e1,{n}")
        ok = S.jcent != S.qjcent and f in S.qjcent and f not in S.jcent
        return ok, f"{e.name}: dim JCent = {S.jcent.dim}, dim QJCent = {S.qjcent.dim}, e1{n}∘x proper: {ok}"

    return _over(entries, one)


def _correspondence(s: Suite, center_name: str, space_name: str):
    def one(e):
        A = e.algebra
        S = s.spaces(e)
        Zs = getattr(S, center_name)
        M = getattr(S, space_name)
        image = jordan_maps_of(A, Zs)
        pre = jordan_preimage(A, M)
        ok = image == M.space and pre == Zs and M.dim == Zs.dim
        return ok, f"{e.name}: {{α∘· : α in {center_name}}} = {space_name}: {ok} (dim {Zs.dim} vs {M.dim})"

    return _over(s.entries, one)


@check("T3.2a", "QJCent = {x -> α∘x : α in Z_Q}", "form of quasi Jordan centralizers")
def _t32a(s: Suite):
    return _correspondence(s, "z_q", "qjcent")


@check("T3.2b", "JCent = {x -> α∘x : α in Z_J}", "form of Jordan centralizers")
def _t32b(s: Suite):
    return _correspondence(s, "z_j", "jcent")


@check("C3.3", "Z_J = Z ⇒ JCent = Cent; Z_Q = Z ⇒ QJCent = Cent; Z_Q = Z_J ⇒ QJCent = JCent and GJDer = QJDer", "consequences of the centralizer forms")
def _c33(s: Suite):
    ok, lines = True, []
    for e in s.entries:
        S = s.spaces(e)
        parts = []
        for hyp, concl, label in (
            (S.z_j == S.z, S.jcent == S.cent, "JCent=Cent"),
            (S.z_q == S.z, S.qjcent == S.cent, "QJCent=Cent"),
            (S.z_q == S.z_j, S.qjcent == S.jcent and S.gjder == S.qjder, "QJCent=JCent,GJDer=QJDer"),
        ):
            if hyp:
                ok &= concl
                parts.append(f"{label}: {concl}")
            else:
                parts.append(f"{label}: hypothesis false")
        lines.append(f"{e.name}: " + "; ".join(parts))
    return ok, lines


@check("P3.4", "matrix algebras: Z_Q = Z and QJCent = Cent", "matrix algebras")
def _p34(s: Suite):
    entries = s.matrix_entries()
    if not entries:
        return None, ["no matrix algebra M_n, n >= 2, in the suite"]

    def one(e):
        S = s.spaces(e)
        ok = S.z_q == S.z and S.qjcent == S.cent
        return ok, f"{e.name}: dim Z_Q = {S.z_q.dim}, dim QJCent = {S.qjcent.dim}, equalities hold: {ok}"

    return _over(entries, one)


@check("P3.5", "semiprime A: QJCent = Cent", "semiprime algebras")
def _p35(s: Suite):
    entries = _semiprime_entries(s)
    if entries is None:
        return None, ["semiprimeness criterion needs characteristic 0"]
    if not entries:
        return None, ["no semiprime algebra in the suite"]

    def one(e):
        S = s.spaces(e)
        return _eq(e.name, S.qjcent, S.cent, "QJCent", "Cent")

    return _over(entries, one)


@check("P3.6", "A generated by idempotents: JCent = Cent", "algebras generated by idempotents")
def _p36(s: Suite):
    entries = s.idempotent_generated()
    if not entries:
        return None, ["no algebra with supplied idempotent generators"]

    def one(e):
        S = s.spaces(e)
        ok, line = _eq(e.name, S.jcent, S.cent, "JCent", "Cent")
        return ok and S.z_j == S.z, f"{line} ({len(e.idempotent_generators)} idempotent generators)"

    return _over(entries, one)


@check("P3.7", "nontrivial idempotent e with the corner condition: JCent = Cent", "algebras with a corner-faithful idempotent")
def _p37(s: Suite):
    entries = s.corner_entries()
    if not entries:
        return None, ["no algebra with a corner-condition idempotent"]

    def one(e):
        S = s.spaces(e)
        ok, line = _eq(e.name, S.jcent, S.cent, "JCent", "Cent")
        return ok, f"{line} (e = {e.algebra.format(e.corner_idempotent)})"

    return _over(entries, one)


@check("C3.8", "triangular A: JCent = Cent", "triangular algebras")
def _c38(s: Suite):
    entries = s.triangular_entries()
    if not entries:
        return None, ["no triangular algebra in the suite"]

    def one(e):
        S = s.spaces(e)
        return _eq(e.name, S.jcent, S.cent, "JCent", "Cent")

    return _over(entries, one)


@check("G3.3", "grassmann3: Z != A = Z_J = Z_Q; x -> α∘x is a proper Jordan centralizer for every α outside Z", "Grassmann-type algebra")
def _g33(s: Suite):
    e = grassmann3(s.field)
    A = e.algebra
    S = s.spaces(e)
    full = span(A.field, A.dim, [A.basis_vector(i) for i in range(A.dim)])
    all_jordan = jordan_maps_of(A, full)
    in_cent = jordan_preimage(A, S.cent)
    ok = (
        S.z_j == full
        and S.z_q == full
        and S.z != full
        and S.z.dim == 2
        and subspace_leq(all_jordan, S.jcent.space)
        and in_cent == S.z
    )
    lines = [
        f"dims Z, Z_J, Z_Q, A = {S.z.dim}, {S.z_j.dim}, {S.z_q.dim}, {A.dim}",
        f"every α∘· is a Jordan centralizer: {subspace_leq(all_jordan, S.jcent.space)}",
        f"{{α : α∘· in Cent}} = Z: {in_cent == S.z}",
    ]
    return ok, lines


@check("S3.4", "primer: Z ⊂ Z_J ⊂ Z_Q with bases {1, e13+e24, e14}, {1, e13, e24, e14}, {1, e13, e24, e14, e23}", "strict center chain")
def _s34(s: Suite):
    e = s.primer
    A = e.algebra
    S = s.spaces(e)
    one_ = A.unit
    v = A.vec
    want_z = span(A.field, A.dim, [one_, A.add(v("e13"), v("e24")), v("e14")])
    want_zj = span(A.field, A.dim, [one_, v("e13"), v("e24"), v("e14")])
    want_zq = span(A.field, A.dim, [one_, v("e13"), v("e24"), v("e14"), v("e23")])
    ok = S.z == want_z and S.z_j == want_zj and S.z_q == want_zq
    lines = [
        f"dims (Z, Z_J, Z_Q) = ({S.z.dim}, {S.z_j.dim}, {S.z_q.dim})",
        f"Z basis: {[A.format(b) for b in S.z.basis]}",
        f"Z_J basis: {[A.format(b) for b in S.z_j.basis]}",
        f"Z_Q basis: {[A.format(b) for b in S.z_q.basis]}",
        f"match expected sets: {ok}",
    ]
    return ok, lines


@check("S4.0", "JCent ∩ JDer = {0}", "Jordan centralizers versus Jordan derivations")
def _s40(s: Suite):
    def one(e):
        S = s.spaces(e)
        I = subspace_intersect(S.jcent.space, S.jder.space)
        return I.is_zero(), f"{e.name}: dim(JCent ∩ JDer) = {I.dim}"

    return _over(s.entries, one)


@check("L4.1", "f in QJDer lies in JCent + JDer iff f(1) in Z_J", "splitting criterion for quasi Jordan derivations")
def _l41(s: Suite):
    def one(e):
        A = e.algebra
        S = s.spaces(e)
        split_space = subspace_sum(S.jcent.space, S.jder.space)
        criterion = subspace_intersect(S.qjder.space, evaluation_preimage(A, S.z_j))
        ok = criterion == split_space
        n_split = 0
        for f in S.qjder.maps():
            c = classify_qjder(A, f)
            member = contains(split_space, f.vec())
            ok &= c.split == member
            n_split += c.split
        return ok, (
            f"{e.name}: {{f in QJDer : f(1) in Z_J}} (dim {criterion.dim}) "
            f"{'=' if criterion == split_space else '!='} JCent+JDer (dim {split_space.dim}); "
            f"{n_split}/{S.qjder.dim} basis maps split"
        )

    return _over(s.entries, one)


@check("Ex4", "primer: explicit f is a quasi Jordan derivation outside JCent + JDer", "quasi Jordan derivation that does not split")
def _ex4(s: Suite):
    S = s.spaces(s.primer)
    f, h = obstructed_qjder_example(s.field)
    # f lives on a fresh copy of the primer algebra, so compare coordinate vectors
    A = f.algebra
    bad = first_violation(A, "QJDer-h", f, h=h)
    in_qjder = contains(S.qjder.space, f.vec())
    c = classify_qjder(A, f)
    x = A.vec("e12+e34")
    d = f - jordan_map(A, A.vec("e23"))
    dx = d(x)
    lhs = A.add(A.jordan(dx, x), A.jordan(x, dx))
    expected = A.scale(-4, A.vec("e14"))
    outside = not contains(subspace_sum(S.jcent.space, S.jder.space), f.vec())
    ok = (
        bad is None
        and in_qjder
        and not c.split
        and c.alpha == A.vec("e23")
        and d(x) == A.scale(-1, A.add(A.vec("e13"), A.vec("e24")))
        and lhs == expected
        and A.jordan(x, x) == A.zero
        and outside
    )
    lines = [
        f"f(x)∘y + x∘f(y) = h(x∘y) on all {A.dim * A.dim} basis pairs: {bad is None}",
        f"f in QJDer: {in_qjder}",
        f"classification: {'Split' if c.split else 'Obstructed'} with α = {A.format(c.alpha)}",
        f"d(x)∘x + x∘d(x) at x = e12+e34: {A.format(lhs)}",
        f"f outside JCent + JDer: {outside}",
    ]
    if not c.split:
        (i, j) = c.verdict.pair
        lines.append(f"certificate: [[α, {A.labels[i]}], {A.labels[j]}] = {A.format(c.verdict.value)}")
    return ok, lines


@check("P4.2", "idempotent-generated, or corner-condition idempotent: QJDer = Cent + JDer", "quasi Jordan derivations with idempotents")
def _p42(s: Suite):
    seen, entries = set(), []
    for e in s.idempotent_generated() + s.corner_entries():
        if e.name not in seen:
            seen.add(e.name)
            entries.append(e)
    if not entries:
        return None, ["no applicable algebra"]

    def one(e):
        S = s.spaces(e)
        return _eq(e.name, S.qjder, subspace_sum(S.cent.space, S.jder.space), "QJDer", "Cent+JDer")

    return _over(entries, one)


def _cent_plus_der(s: Suite, entries, empty_msg):
    if not entries:
        return None, [empty_msg]

    def one(e):
        S = s.spaces(e)
        return _eq(e.name, S.qjder, subspace_sum(S.cent.space, S.der.space), "QJDer", "Cent+Der")

    return _over(entries, one)


@check("C4.4", "M_n: QJDer = Cent + Der", "matrix algebras")
def _c44(s: Suite):
    return _cent_plus_der(s, s.matrix_entries(), "no matrix algebra M_n, n >= 2, in the suite")


@check("C4.5", "triangular A: QJDer = Cent + Der", "triangular algebras")
def _c45(s: Suite):
    return _cent_plus_der(s, s.triangular_entries(), "no triangular algebra in the suite")


@check("C4.6", "semiprime A: QJDer = Cent + Der", "semiprime algebras")
def _c46(s: Suite):
    entries = _semiprime_entries(s)
    if entries is None:
        return None, ["semiprimeness criterion needs characteristic 0"]
    return _cent_plus_der(s, entries, "no semiprime algebra in the suite")


CHECK_IDS = tuple(REGISTRY)


class UnknownCheckError(KeyError):
    pass


def run_checks(check_ids=("all",), suite: Suite | None = None) -> VerificationReport:
    suite = suite or Suite()
    ids: list[str] = []
    for cid in check_ids:
        if cid == "all":
            ids += [c for c in CHECK_IDS if c not in ids]
        elif cid in REGISTRY:
            if cid not in ids:
                ids.append(cid)
        else:
            raise UnknownCheckError(f"unknown check id {cid!r}; known: {', '.join(CHECK_IDS)}")
    ids.sort(key=CHECK_IDS.index)
    records = []
    for cid in ids:
        statement, anchor, fn = REGISTRY[cid]
        ok, details = fn(suite)
        status = "skip" if ok is None else ("pass" if ok else "fail")
        records.append(CheckRecord(cid, statement, anchor, status, details))
    return VerificationReport(records)
