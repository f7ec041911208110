"""Builders for the concrete algebras used throughout the verification suite.

Every algebra here is realized as a subalgebra of some full matrix algebra
M_N(F); the embedding is kept on the entry so tests can recompute products by
plain matrix multiplication.  Labels use matrix-unit notation (``e13``,
``e12+e34``) with ``1`` for the identity.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import StructureConstantAlgebra, validate
from .fields import QQ, Field
from .linalg import Echelon, span
from .maps import LinearMap

Mat = tuple  # N x N tuple of tuples


class CatalogError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    algebra: StructureConstantAlgebra
    expected: dict = dc_field(default_factory=dict)
    notes: str = ""
    embedding: tuple[Mat, ...] | None = None  # basis element -> matrix
    idempotent_generators: tuple[tuple, ...] = ()  # witnesses that idempotents generate A
    corner_idempotent: tuple | None = None  # nontrivial idempotent for the corner condition
    triangular_idempotent: tuple | None = None  # e with e⊥Ae = 0

    @property
    def name(self) -> str:
        return self.algebra.name


# ---- matrix helpers --------------------------------------------------------


def mat_unit(field: Field, N: int, i: int, j: int) -> Mat:
    z, o = field.zero, field.one
    return tuple(tuple(o if (r, c) == (i, j) else z for c in range(N)) for r in range(N))


def mat_add(A: Mat, B: Mat) -> Mat:
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(A, B))


def mat_scale(c, A: Mat) -> Mat:
    return tuple(tuple(c * a for a in r) for r in A)


def mat_mul(A: Mat, B: Mat) -> Mat:
    N = len(A)
    cols = list(zip(*B))
    out = []
    for r in A:
        row = []
        for col in cols:
            s = r[0] * col[0]
            for k in range(1, N):
                s = s + r[k] * col[k]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_identity(field: Field, N: int) -> Mat:
    z, o = field.zero, field.one
    return tuple(tuple(o if r == c else z for c in range(N)) for r in range(N))


def _flat(M: Mat) -> tuple:
    return tuple(a for r in M for a in r)


def embed(entry: CatalogEntry, coords: Sequence) -> Mat:
    """Matrix of the element with the given coordinates."""
    if entry.embedding is None:
        raise CatalogError(f"{entry.name} carries no matrix embedding")
    field = entry.algebra.field
    N = len(entry.embedding[0])
    M = tuple((field.zero,) * N for _ in range(N))
    for c, B in zip(coords, entry.embedding):
        if c:
            M = mat_add(M, mat_scale(c, B))
    return M


def algebra_from_matrices(field: Field, basis: Sequence[Mat], labels: Sequence[str], name: str) -> StructureConstantAlgebra:
    """Structure constants of span(basis), which must be a unital subalgebra of M_N."""
    d = len(basis)
    N = len(basis[0])
    flats = [_flat(B) for B in basis]
    # one row per matrix position; unknowns are coefficients on the basis
    positions = [{i: f[p] for i, f in enumerate(flats) if f[p]} for p in range(N * N)]

    def coords(M: Mat) -> tuple:
        e = Echelon(field, d)
        fl = _flat(M)
        for p in range(N * N):
            e.add(positions[p], fl[p])
        sol = e.particular_solution()
        if e.rank != d:
            raise CatalogError("basis matrices are linearly dependent")
        return sol

    products = {}
    for i, Bi in enumerate(basis):
        for j, Bj in enumerate(basis):
            c = coords(mat_mul(Bi, Bj))
            products[(i, j)] = {k: v for k, v in enumerate(c) if v}
    unit = coords(mat_identity(field, N))
    return StructureConstantAlgebra.from_products(field, products, unit, labels, name)


def _entry(field, basis, labels, name, **kw) -> CatalogEntry:
    try:
        A = algebra_from_matrices(field, basis, labels, name)
    except Exception as exc:  # noqa: BLE001 - surfaced as catalog error
        raise CatalogError(f"{name}: {exc}") from exc
    report = validate(A)
    if not report:
        raise CatalogError(f"{name} failed validation: {report.message}")
    return CatalogEntry(A, embedding=tuple(basis), **kw)


def _unit_label(i: int, j: int, N: int) -> str:
    return f"e{i + 1}{j + 1}" if N < 10 else f"e{i + 1},{j + 1}"


def _matrix_unit_entry(field: Field, N: int, positions: list[tuple[int, int]], name: str, **kw) -> CatalogEntry:
    basis = [mat_unit(field, N, i, j) for i, j in positions]
    labels = [_unit_label(i, j, N) for i, j in positions]
    coords_of = {p: k for k, p in enumerate(positions)}
    d = len(positions)
    z, o = field.zero, field.one

    def vec(*pairs):
        v = [z] * d
        for p in pairs:
            v[coords_of[p]] = o
        return tuple(v)

    idem_gens = [vec((i, i)) for i in range(N)]
    idem_gens += [vec((i, i), (i, j)) for i, j in positions if i != j]
    products = {}
    for a, (i, j) in enumerate(positions):
        for b, (k, l) in enumerate(positions):
            if j == k:
                products[(a, b)] = {coords_of[(i, l)]: o}
    unit = vec(*[(i, i) for i in range(N)])
    A = StructureConstantAlgebra.from_products(field, products, unit, labels, name)
    report = validate(A)
    if not report:
        raise CatalogError(f"{name} failed validation: {report.message}")
    return CatalogEntry(A, embedding=tuple(basis), idempotent_generators=tuple(idem_gens), **kw)


# ---- builders --------------------------------------------------------------


def matrix_algebra(n: int, field: Field = QQ) -> CatalogEntry:
    """M_n(F) with basis e_ij."""
    if n < 1:
        raise CatalogError("matrix size must be at least 1")
    positions = [(i, j) for i in range(n) for j in range(n)]
    corner = None
    if n >= 2:
        corner = tuple(field.one if p == (0, 0) else field.zero for p in positions)
    return _matrix_unit_entry(
        field,
        n,
        positions,
        f"M{n}",
        expected={"dim": n * n, "Z": 1, "Z_J": 1, "Z_Q": 1, "Cent": 1, "QJCent": 1, "Der": n * n - 1, "JDer": n * n - 1, "QJDer": n * n, "GJDer": n * n},
        notes="full matrix algebra; simple, hence semiprime",
        corner_idempotent=corner,
    )


def upper_triangular(n: int, field: Field = QQ) -> CatalogEntry:
    """T_n(F) with basis e_ij, i <= j."""
    if n < 1:
        raise CatalogError("matrix size must be at least 1")
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    e11 = tuple(field.one if p == (0, 0) else field.zero for p in positions) if n >= 2 else None
    return _matrix_unit_entry(
        field,
        n,
        positions,
        f"T{n}",
        expected={"dim": n * (n + 1) // 2, "Z": 1, "JCent": 1, "Cent": 1},
        notes="upper triangular matrices; triangular algebra for n >= 2",
        corner_idempotent=e11,
        triangular_idempotent=e11,
    )


def block_upper_triangular(block_sizes: Sequence[int], field: Field = QQ) -> CatalogEntry:
    """Block upper triangular matrices: finite-dimensional nest algebra analogue."""
    sizes = list(block_sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise CatalogError("block sizes must be positive")
    N = sum(sizes)
    block_of = []
    for b, s in enumerate(sizes):
        block_of += [b] * s
    positions = [(i, j) for i in range(N) for j in range(N) if block_of[i] <= block_of[j]]
    first = None
    if len(sizes) >= 2:
        first = tuple(field.one if (i == j and block_of[i] == 0) else field.zero for i, j in positions)
    return _matrix_unit_entry(
        field,
        N,
        positions,
        "B" + "-".join(str(s) for s in sizes),
        expected={"dim": len(positions), "Z": 1},
        notes="block upper triangular matrices",
        corner_idempotent=first,
        triangular_idempotent=first,
    )


def grassmann3(field: Field = QQ) -> CatalogEntry:
    """{r1 + s e12 + t e23 + u e13} inside T_3: satisfies [[x, y], z] = 0."""
    basis = [mat_identity(field, 3), mat_unit(field, 3, 0, 1), mat_unit(field, 3, 1, 2), mat_unit(field, 3, 0, 2)]
    return _entry(
        field,
        basis,
        ["1", "e12", "e23", "e13"],
        "grassmann3",
        expected={"dim": 4, "Z": 2, "Z_J": 4, "Z_Q": 4},
        notes="Grassmann-type algebra; even part span{1, e13} is the center",
    )


def primer_algebra(field: Field = QQ) -> CatalogEntry:
    """{r1 + s(e12+e34) + t1 e13 + t2 e24 + u e14 + v e23} inside M_4."""
    u = lambda i, j: mat_unit(field, 4, i - 1, j - 1)  # noqa: E731
    basis = [mat_identity(field, 4), mat_add(u(1, 2), u(3, 4)), u(1, 3), u(2, 4), u(1, 4), u(2, 3)]
    return _entry(
        field,
        basis,
        ["1", "e12+e34", "e13", "e24", "e14", "e23"],
        "primer",
        expected={
            "dim": 6,
            "Z": 3,
            "Z_J": 4,
            "Z_Q": 5,
            "Z_basis": ["1", "e13+e24", "e14"],
            "Z_J_basis": ["1", "e13", "e24", "e14"],
            "Z_Q_basis": ["1", "e13", "e24", "e14", "e23"],
        },
        notes="Z ⊂ Z_J ⊂ Z_Q strictly; carries a quasi Jordan derivation outside JCent + JDer",
    )


def direct_sum(entries: Sequence[CatalogEntry], name: str | None = None) -> CatalogEntry:
    """Block-diagonal direct sum; labels are prefixed by the summand index."""
    if not entries:
        raise CatalogError("direct sum of nothing")
    field = entries[0].algebra.field
    if any(e.algebra.field != field for e in entries):
        raise CatalogError("summands over different fields")
    offsets, total = [], 0
    for e in entries:
        offsets.append(total)
        total += e.algebra.dim
    products, labels, unit = {}, [], []
    for s, (e, off) in enumerate(zip(entries, offsets)):
        A = e.algebra
        labels += [f"{s + 1}:{lab}" for lab in A.labels]
        unit += list(A.unit)
        for (i, j), terms in A.table.items():
            products[(off + i, off + j)] = {off + k: c for k, c in terms}
    nm = name or "+".join(e.name for e in entries)
    A = StructureConstantAlgebra.from_products(field, products, unit, labels, nm)
    report = validate(A)
    if not report:
        raise CatalogError(f"{nm} failed validation: {report.message}")
    embedding = None
    if all(e.embedding is not None for e in entries):
        sizes = [len(e.embedding[0]) for e in entries]
        N = sum(sizes)
        mats = []
        start = 0
        for e, sz in zip(entries, sizes):
            for B in e.embedding:
                M = [[field.zero] * N for _ in range(N)]
                for r in range(sz):
                    for c in range(sz):
                        M[start + r][start + c] = B[r][c]
                mats.append(tuple(tuple(row) for row in M))
            start += sz
        embedding = tuple(mats)
    first_unit = None
    if len(entries) >= 2:
        first_unit = tuple(list(entries[0].algebra.unit) + [field.zero] * (total - entries[0].algebra.dim))
    return CatalogEntry(A, notes="direct sum", embedding=embedding, corner_idempotent=first_unit)


def obstructed_qjder_example(field: Field = QQ) -> tuple[LinearMap, LinearMap]:
    """The pair (f, h) on the primer algebra with f(x)∘y + x∘f(y) = h(x∘y).

    Writing x = r1 + s(e12+e34) + ..., f(x) = 2r e23 and h(x) = s e13 + 4r e23 + s e24.
    """
    A = primer_algebra(field).algebra
    z = A.zero
    two, four = field(2), field(4)
    f_cols = [A.scale(two, A.vec("e23"))] + [z] * 5
    h_cols = [A.scale(four, A.vec("e23")), A.add(A.vec("e13"), A.vec("e24"))] + [z] * 4
    return LinearMap.from_columns(A, f_cols), LinearMap.from_columns(A, h_cols)


# ---- name registry ---------------------------------------------------------

DEFAULT_SUITE = ("M2", "M3", "T2", "T3", "B2-1", "grassmann3", "primer")

_NAME_RE = re.compile(r"^(M|T)(\d+)$|^B(\d+(?:-\d+)*)$")


def get_entry(name: str, field: Field = QQ) -> CatalogEntry:
    """Build a catalog entry by name: M<n>, T<n>, B<s1-s2-...>, F, grassmann3, primer, or X+Y."""
    name = name.strip()
    if "+" in name:
        return direct_sum([get_entry(part, field) for part in name.split("+")], name=name)
    if name == "F":
        return matrix_algebra(1, field)
    if name == "grassmann3":
        return grassmann3(field)
    if name == "primer":
        return primer_algebra(field)
    m = _NAME_RE.match(name)
    if m:
        if m.group(1) == "M":
            return matrix_algebra(int(m.group(2)), field)
        if m.group(1) == "T":
            return upper_triangular(int(m.group(2)), field)
        return block_upper_triangular([int(s) for s in m.group(3).split("-")], field)
    raise CatalogError(f"unknown catalog algebra {name!r}")


def catalog_names() -> list[str]:
    return ["F", "M<n>", "T<n>", "B<s1-s2-...>", "grassmann3", "primer", "<name>+<name>"]


# ---- random algebras for property checks -----------------------------------


def random_matrix_subalgebra(
    rng: random.Random,
    field: Field = QQ,
    ambient: str = "T4",
    max_dim: int = 5,
    tries: int = 200,
    generators: int | None = None,
) -> CatalogEntry:
    """Unital subalgebra of T_4 or M_3 generated by sparse random matrices.

    ``generators`` fixes how many are drawn; by default one or two.

    Associativity is inherited from the matrix algebra.  Generator sets whose
    closure exceeds ``max_dim`` are discarded and redrawn.
    """
    kind, N = ambient[0], int(ambient[1:])
    if kind not in "TM":
        raise CatalogError(f"ambient must be T<n> or M<n>, not {ambient!r}")
    allowed = [(i, j) for i in range(N) for j in range(N) if kind == "M" or i <= j]
    for _ in range(tries):
        gens = []
        for _ in range(generators or rng.randint(1, 2)):
            M = [[field.zero] * N for _ in range(N)]
            for i, j in rng.sample(allowed, rng.randint(1, 3)):
                M[i][j] = field(rng.randint(-2, 2))
            gens.append(tuple(tuple(r) for r in M))
        I = mat_identity(field, N)
        S = span(field, N * N, [_flat(I)] + [_flat(G) for G in gens])
        while True:
            mats = [tuple(tuple(v[r * N:(r + 1) * N]) for r in range(N)) for v in S.basis]
            T = span(field, N * N, list(S.basis) + [_flat(mat_mul(X, Y)) for X in mats for Y in mats])
            if T.dim == S.dim or T.dim > max_dim:
                break
            S = T
        if T.dim > max_dim:
            continue
        basis = [tuple(tuple(v[r * N:(r + 1) * N]) for r in range(N)) for v in S.basis]
        labels = [f"b{i}" for i in range(len(basis))]
        return _entry(field, basis, labels, f"rand{ambient}")
    raise CatalogError("could not draw a small enough subalgebra")


__all__ = [
    "CatalogEntry",
    "CatalogError",
    "DEFAULT_SUITE",
    "algebra_from_matrices",
    "block_upper_triangular",
    "direct_sum",
    "embed",
    "get_entry",
    "grassmann3",
    "mat_mul",
    "matrix_algebra",
    "primer_algebra",
    "random_matrix_subalgebra",
    "obstructed_qjder_example",
    "upper_triangular",
]
