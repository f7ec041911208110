"""Spaces of linear maps A -> A cut out by derivation/centralizer-type laws.

A linear map is stored as an n x n matrix whose column j is the image of e_j.
Map spaces live in F^(n*n) under the column-stacked vectorization
``vec[j*n + k] = M[k][j]``.

Every law is imposed on basis pairs (e_i, e_j) in lexicographic order, which
by bilinearity is the same as imposing it for all x, y.  Laws with
existentially quantified companion maps (g, h) are solved jointly and the
solution space is projected onto the block of the map of interest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Sequence

from .algebra import StructureConstantAlgebra
from .centers import center, z_jordan, z_quasi
from .linalg import (
    Echelon,
    Inconsistent,
    Subspace,
    contains,
    nullspace_sparse,
    project_sparse,
    span,
    subspace_intersect,
    subspace_sum,
)

KINDS = ("Cent", "JCent", "QJCent", "Der", "JDer", "QJDer", "GJDer", "FGDer")


class NotAMemberError(ValueError):
    """A map fails the defining law of a space; carries the first bad basis pair."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None, left=None, right=None):
        super().__init__(message)
        self.pair = pair
        self.left = left
        self.right = right


# ---- linear maps -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LinearMap:
    algebra: StructureConstantAlgebra
    matrix: tuple[tuple, ...]  # matrix[k][j]: coefficient of e_k in f(e_j)

    def __post_init__(self):
        n = self.algebra.dim
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError(f"map matrix must be {n}x{n}")

    @classmethod
    def from_columns(cls, A: StructureConstantAlgebra, columns: Sequence[Sequence]) -> LinearMap:
        n = A.dim
        cols = [A.vec(c) for c in columns]
        return cls(A, tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))

    @classmethod
    def from_function(cls, A: StructureConstantAlgebra, fn: Callable) -> LinearMap:
        return cls.from_columns(A, [fn(A.basis_vector(j)) for j in range(A.dim)])

    @classmethod
    def from_vec(cls, A: StructureConstantAlgebra, v: Sequence) -> LinearMap:
        n = A.dim
        return cls(A, tuple(tuple(v[j * n + k] for j in range(n)) for k in range(n)))

    @classmethod
    def zero(cls, A: StructureConstantAlgebra) -> LinearMap:
        return cls.from_columns(A, [A.zero] * A.dim)

    @classmethod
    def identity(cls, A: StructureConstantAlgebra) -> LinearMap:
        return cls.from_function(A, lambda x: x)

    def vec(self) -> tuple:
        n = self.algebra.dim
        return tuple(self.matrix[k][j] for j in range(n) for k in range(n))

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.matrix)

    def __call__(self, x) -> tuple:
        A = self.algebra
        x = A.vec(x)
        out = list(A.zero)
        for j, a in enumerate(x):
            if a:
                for k in range(A.dim):
                    c = self.matrix[k][j]
                    if c:
                        out[k] = out[k] + a * c
        return tuple(out)

    def __add__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.algebra, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def __sub__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.algebra, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def scale(self, c) -> LinearMap:
        c = self.algebra.field.coerce(c)
        return LinearMap(self.algebra, tuple(tuple(c * a for a in r) for r in self.matrix))

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def is_zero(self) -> bool:
        return not any(a for r in self.matrix for a in r)

    def describe(self) -> str:
        A = self.algebra
        return "; ".join(f"{A.labels[j]} -> {A.format(self.column(j))}" for j in range(A.dim))


def jordan_map(A: StructureConstantAlgebra, alpha) -> LinearMap:
    """x -> alpha ∘ x."""
    alpha = A.vec(alpha)
    return LinearMap.from_function(A, lambda x: A.jordan(alpha, x))


def left_multiplication(A: StructureConstantAlgebra, a) -> LinearMap:
    a = A.vec(a)
    return LinearMap.from_function(A, lambda x: A.mul(a, x))


def half(A: StructureConstantAlgebra):
    return A.field.one / (A.field.one + A.field.one)


# ---- constraint assembly ---------------------------------------------------


class _Builder:
    """Assembles linear constraints on stacked unknown maps (blocks of n*n)."""

    def __init__(self, A: StructureConstantAlgebra, nblocks: int):
        self.A = A
        self.n = A.dim
        self.N = A.dim * A.dim
        self.ncols = nblocks * self.N
        self.zero = A.field.zero

    def var(self, block: int, k: int, j: int) -> int:
        return block * self.N + j * self.n + k

    def apply(self, expr: dict, block: int, x: dict, outer: Callable[[int], dict], scale=None):
        """expr += scale * outer(F(x)), F the unknown map in ``block``.

        ``outer(m)`` is the image of e_m under a fixed linear operation
        (e.g. right Jordan multiplication by e_j) as a sparse dict.
        """
        zero = self.zero
        for j, xj in x.items():
            coef = xj if scale is None else scale * xj
            for m in range(self.n):
                v = self.var(block, m, j)
                for k, c in outer(m).items():
                    row = expr.setdefault(k, {})
                    w = row.get(v, zero) + coef * c
                    if w:
                        row[v] = w
                    else:
                        row.pop(v, None)

    @staticmethod
    def rows(expr: dict) -> list[tuple[int, dict]]:
        return [(k, expr[k]) for k in sorted(expr) if expr[k]]

    # outer operations
    def ident(self, m: int) -> dict:
        return {m: self.A.field.one}

    def rjordan(self, y: dict) -> Callable[[int], dict]:
        """m -> e_m ∘ y."""
        J, zero = self.A.jordan_products, self.zero
        cache: dict[int, dict] = {}

        def op(m):
            if m not in cache:
                out: dict = {}
                for t, c in y.items():
                    for k, d in J[m][t].items():
                        out[k] = out.get(k, zero) + c * d
                cache[m] = {k: v for k, v in out.items() if v}
            return cache[m]

        return op

    def ljordan(self, x: dict) -> Callable[[int], dict]:
        return self.rjordan(x)  # ∘ is commutative

    def rmul(self, y: dict) -> Callable[[int], dict]:
        """m -> e_m y."""
        P, zero = self.A.products, self.zero

        def op(m):
            out: dict = {}
            for t, c in y.items():
                for k, d in P[m][t].items():
                    out[k] = out.get(k, zero) + c * d
            return {k: v for k, v in out.items() if v}

        return op

    def lmul(self, x: dict) -> Callable[[int], dict]:
        """m -> x e_m."""
        P, zero = self.A.products, self.zero

        def op(m):
            out: dict = {}
            for t, c in x.items():
                for k, d in P[t][m].items():
                    out[k] = out.get(k, zero) + c * d
            return {k: v for k, v in out.items() if v}

        return op


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for i in range(n):
        for j in range(n):
            yield i, j


def _law_rows(A: StructureConstantAlgebra, kind: str) -> tuple[int, list[dict]]:
    """(number of unknowns, sparse rows) for one defining law."""
    n = A.dim
    P, J = A.products, A.jordan_products
    one = A.field.one
    neg = -one
    unit = {k: c for k, c in enumerate(A.unit) if c}
    nblocks = {"QJDer*": 2, "GJDer": 3, "FGDer": 3}.get(kind, 1)
    b = _Builder(A, nblocks)
    rows: list[dict] = []
    for i, j in _pairs(n):
        ei, ej = {i: one}, {j: one}
        exprs: list[dict] = []
        if kind == "Der":
            e: dict = {}
            b.apply(e, 0, P[i][j], b.ident)
            b.apply(e, 0, ei, b.rmul(ej), neg)
            b.apply(e, 0, ej, b.lmul(ei), neg)
            exprs.append(e)
        elif kind == "JDer":
            e = {}
            b.apply(e, 0, J[i][j], b.ident)
            b.apply(e, 0, ei, b.rjordan(ej), neg)
            b.apply(e, 0, ej, b.ljordan(ei), neg)
            exprs.append(e)
        elif kind == "Cent":
            e1: dict = {}
            b.apply(e1, 0, P[i][j], b.ident)
            b.apply(e1, 0, ei, b.rmul(ej), neg)
            e2: dict = {}
            b.apply(e2, 0, P[i][j], b.ident)
            b.apply(e2, 0, ej, b.lmul(ei), neg)
            exprs += [e1, e2]
        elif kind == "JCent":
            e = {}
            b.apply(e, 0, J[i][j], b.ident)
            b.apply(e, 0, ei, b.rjordan(ej), neg)
            exprs.append(e)
        elif kind == "QJCent":
            e = {}
            b.apply(e, 0, ei, b.rjordan(ej))
            b.apply(e, 0, ej, b.ljordan(ei), neg)
            exprs.append(e)
        elif kind == "QJDer":
            # f(x)∘y + x∘f(y) - f(x∘y) - α∘(x∘y), α = f(1)/2
            e = {}
            b.apply(e, 0, ei, b.rjordan(ej))
            b.apply(e, 0, ej, b.ljordan(ei))
            b.apply(e, 0, J[i][j], b.ident, neg)
            b.apply(e, 0, unit, b.rjordan(J[i][j]), -half(A))
            exprs.append(e)
        elif kind == "QJDer*":
            # ∃h: f(x)∘y + x∘f(y) = h(x∘y)
            e = {}
            b.apply(e, 0, ei, b.rjordan(ej))
            b.apply(e, 0, ej, b.ljordan(ei))
            b.apply(e, 1, J[i][j], b.ident, neg)
            exprs.append(e)
        elif kind in ("GJDer", "FGDer"):
            # ∃(g, h): f(x)∘y + x∘g(y) = h(x∘y); blocks f, g, h
            e = {}
            b.apply(e, 0, ei, b.rjordan(ej))
            b.apply(e, 1, ej, b.ljordan(ei))
            b.apply(e, 2, J[i][j], b.ident, neg)
            exprs.append(e)
        else:
            raise ValueError(f"unknown map-space kind {kind!r}")
        for e in exprs:
            rows += [r for _, r in b.rows(e)]
    return b.ncols, rows


# ---- map spaces ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MapSpace:
    kind: str
    algebra: StructureConstantAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def ambient(self) -> int:
        return self.space.ambient_dim

    def maps(self) -> list[LinearMap]:
        return [LinearMap.from_vec(self.algebra, v) for v in self.space.basis]

    def __contains__(self, f: LinearMap) -> bool:
        return contains(self.space, f.vec())

    def __eq__(self, other):
        if isinstance(other, MapSpace):
            return self.space == other.space
        if isinstance(other, Subspace):
            return self.space == other
        return NotImplemented

    def __hash__(self):
        return hash(self.space.basis)


def _space(A: StructureConstantAlgebra, kind: str) -> MapSpace:
    ncols, rows = _law_rows(A, kind)
    N = A.dim * A.dim
    if kind == "GJDer":
        S = project_sparse(A.field, ncols, rows, range(0, N))
    elif kind == "FGDer":
        S = project_sparse(A.field, ncols, rows, range(2 * N, 3 * N))
    elif kind == "QJDer*":
        S = project_sparse(A.field, ncols, rows, range(0, N))
        kind = "QJDer"
    else:
        S = nullspace_sparse(A.field, ncols, rows)
    return MapSpace(kind, A, S)


def der_space(A: StructureConstantAlgebra) -> MapSpace:
    """Derivations: d(xy) = d(x)y + x d(y)."""
    return _space(A, "Der")


def jder_space(A: StructureConstantAlgebra) -> MapSpace:
    """Jordan derivations: d(x∘y) = d(x)∘y + x∘d(y)."""
    return _space(A, "JDer")


def cent_space(A: StructureConstantAlgebra) -> MapSpace:
    """Centralizers: f(xy) = f(x)y = x f(y)."""
    return _space(A, "Cent")


def jcent_space(A: StructureConstantAlgebra) -> MapSpace:
    """Jordan centralizers: f(x∘y) = f(x)∘y."""
    return _space(A, "JCent")


def qjcent_space(A: StructureConstantAlgebra) -> MapSpace:
    """Quasi Jordan centralizers: f(x)∘y = x∘f(y)."""
    return _space(A, "QJCent")


def qjder_space(A: StructureConstantAlgebra) -> MapSpace:
    """Quasi Jordan derivations via the linearized law with α = f(1)/2:

    f(x)∘y + x∘f(y) = f(x∘y) + α∘(x∘y).
    """
    return _space(A, "QJDer")


def qjder_space_projected(A: StructureConstantAlgebra) -> MapSpace:
    """Quasi Jordan derivations as the f-projection of ∃h: f(x)∘y + x∘f(y) = h(x∘y)."""
    return _space(A, "QJDer*")


def gjder_space(A: StructureConstantAlgebra) -> MapSpace:
    """Generalized Jordan derivations: f-projection of f(x)∘y + x∘g(y) = h(x∘y)."""
    return _space(A, "GJDer")


def fgder_space(A: StructureConstantAlgebra) -> MapSpace:
    """All h admitting some (f, g) with f(x)∘y + x∘g(y) = h(x∘y)."""
    return _space(A, "FGDer")


def space_sum(U: MapSpace, V: MapSpace, kind: str | None = None) -> MapSpace:
    return MapSpace(kind or f"{U.kind}+{V.kind}", U.algebra, subspace_sum(U.space, V.space))


def space_intersect(U: MapSpace, V: MapSpace, kind: str | None = None) -> MapSpace:
    return MapSpace(kind or f"{U.kind}&{V.kind}", U.algebra, subspace_intersect(U.space, V.space))


def jordan_maps_of(A: StructureConstantAlgebra, S: Subspace) -> Subspace:
    """span{x -> α∘x : α in S} as a subspace of F^(n*n)."""
    return span(A.field, A.dim * A.dim, [jordan_map(A, a).vec() for a in S.basis])


def left_maps_of(A: StructureConstantAlgebra, S: Subspace) -> Subspace:
    """span{x -> a x : a in S}."""
    return span(A.field, A.dim * A.dim, [left_multiplication(A, a).vec() for a in S.basis])


def jordan_preimage(A: StructureConstantAlgebra, M: MapSpace) -> Subspace:
    """{α : (x -> α∘x) in M}; α is recovered as f(1)/2 since α∘1 = 2α."""
    common = subspace_intersect(jordan_maps_of(A, span(A.field, A.dim, [A.basis_vector(i) for i in range(A.dim)])), M.space)
    h = half(A)
    return span(A.field, A.dim, [A.scale(h, LinearMap.from_vec(A, v)(A.unit)) for v in common.basis])


def evaluation_preimage(A: StructureConstantAlgebra, S: Subspace) -> Subspace:
    """{f : f(1) in S} as a subspace of F^(n*n)."""
    n = A.dim
    # f(1) = sum_j u_j f(e_j), i.e. coordinate k is sum_j u_j vec[j*n + k]
    rows = []
    for k in range(n):
        row = {j * n + k: u for j, u in enumerate(A.unit) if u}
        if row:
            rows.append(row)
    kernel = nullspace_sparse(A.field, n * n, rows)
    h = half(A)
    lifts = [jordan_map(A, A.scale(h, a)).vec() for a in S.basis]
    return subspace_sum(kernel, span(A.field, n * n, lifts))


# ---- direct law evaluation -------------------------------------------------


def first_violation(A: StructureConstantAlgebra, law: str, f: LinearMap, g: LinearMap | None = None, h: LinearMap | None = None):
    """First basis pair (i, j) where a law fails, with both sides; None if it holds.

    Laws: Der, JDer, Cent, JCent, QJCent, QJDer (linearized, α = f(1)/2),
    QJDer-h (f(x)∘y + x∘f(y) = h(x∘y)), GJDer (f(x)∘y + x∘g(y) = h(x∘y)).
    """
    n = A.dim
    alpha = A.scale(half(A), f(A.unit))
    for i, j in _pairs(n):
        x, y = A.basis_vector(i), A.basis_vector(j)
        sides: list[tuple[tuple, tuple]] = []
        if law == "Der":
            sides.append((f(A.mul(x, y)), A.add(A.mul(f(x), y), A.mul(x, f(y)))))
        elif law == "JDer":
            sides.append((f(A.jordan(x, y)), A.add(A.jordan(f(x), y), A.jordan(x, f(y)))))
        elif law == "Cent":
            sides.append((f(A.mul(x, y)), A.mul(f(x), y)))
            sides.append((f(A.mul(x, y)), A.mul(x, f(y))))
        elif law == "JCent":
            sides.append((f(A.jordan(x, y)), A.jordan(f(x), y)))
        elif law == "QJCent":
            sides.append((A.jordan(f(x), y), A.jordan(x, f(y))))
        elif law == "QJDer":
            xy = A.jordan(x, y)
            sides.append((A.add(A.jordan(f(x), y), A.jordan(x, f(y))), A.add(f(xy), A.jordan(alpha, xy))))
        elif law == "QJDer-h":
            sides.append((A.add(A.jordan(f(x), y), A.jordan(x, f(y))), h(A.jordan(x, y))))
        elif law == "GJDer":
            sides.append((A.add(A.jordan(f(x), y), A.jordan(x, g(y))), h(A.jordan(x, y))))
        else:
            raise ValueError(f"unknown law {law!r}")
        for left, right in sides:
            if left != right:
                return (i, j), left, right
    return None


def satisfies(A: StructureConstantAlgebra, law: str, f: LinearMap, g=None, h=None) -> bool:
    return first_violation(A, law, f, g, h) is None


def _require(A, law, f, g=None, h=None):
    bad = first_violation(A, law, f, g, h)
    if bad is not None:
        (i, j), left, right = bad
        raise NotAMemberError(
            f"{law} law fails at ({A.labels[i]}, {A.labels[j]}): {A.format(left)} != {A.format(right)}",
            (i, j),
            left,
            right,
        )


# ---- decomposition and classification --------------------------------------


@dataclass(frozen=True)
class GJDecomposition:
    f: LinearMap
    f1: LinearMap  # quasi Jordan derivation part, (f + g)/2
    f2: LinearMap  # quasi Jordan centralizer part, (f - g)/2
    g: LinearMap
    h: LinearMap


def find_witnesses(A: StructureConstantAlgebra, f: LinearMap) -> tuple[LinearMap, LinearMap]:
    """Some (g, h) with f(x)∘y + x∘g(y) = h(x∘y).

    The system is solved for (h, g') with g = f + g', h-unknowns ordered
    first, and every free parameter set to zero.  h is determined by g, so all
    h-columns are pivots; hence whenever f itself is a quasi Jordan derivation
    the result is g = f.

    Raises NotAMemberError naming the first basis pair whose equations make the
    system unsolvable.
    """
    n, N = A.dim, A.dim * A.dim
    one = A.field.one
    J = A.jordan_products
    b = _Builder(A, 2)
    ech = Echelon(A.field, 2 * N)
    for i, j in _pairs(n):
        x, y = A.basis_vector(i), A.basis_vector(j)
        e: dict = {}
        b.apply(e, 0, J[i][j], b.ident, -one)
        b.apply(e, 1, {j: one}, b.ljordan({i: one}))
        known = A.add(A.jordan(f(x), y), A.jordan(x, f(y)))
        keys = sorted(set(e) | {k for k, c in enumerate(known) if c})
        for k in keys:
            try:
                ech.add(e.get(k, {}), -known[k])
            except Inconsistent:
                # the witness solving every earlier equation must fail here
                sol = ech.particular_solution()
                h = LinearMap.from_vec(A, sol[:N])
                g = f + LinearMap.from_vec(A, sol[N:])
                left = A.add(A.jordan(f(x), y), A.jordan(x, g(y)))
                right = h(A.jordan(x, y))
                raise NotAMemberError(
                    f"no (g, h) exists: the equations at pair ({A.labels[i]}, {A.labels[j]}), "
                    f"component {A.labels[k]}, contradict earlier pairs; the witness solving "
                    f"all earlier equations gives f(x)∘y + x∘g(y) = {A.format(left)} "
                    f"but h(x∘y) = {A.format(right)}",
                    (i, j),
                    left,
                    right,
                ) from None
    sol = ech.particular_solution()
    h = LinearMap.from_vec(A, sol[:N])
    g = f + LinearMap.from_vec(A, sol[N:])
    return g, h


def decompose_gjder(A: StructureConstantAlgebra, f: LinearMap) -> GJDecomposition:
    """Split f = f1 + f2 with f1 in QJDer and f2 in QJCent via f1 = (f+g)/2, f2 = (f-g)/2."""
    g, h = find_witnesses(A, f)
    hf = half(A)
    f1 = (f + g).scale(hf)
    f2 = (f - g).scale(hf)
    _require(A, "GJDer", f, g, h)
    _require(A, "QJDer-h", f1, h=h)
    _require(A, "QJCent", f2)
    return GJDecomposition(f, f1, f2, g, h)


@dataclass(frozen=True)
class Split:
    jcent_part: LinearMap
    jder_part: LinearMap


@dataclass(frozen=True)
class Obstructed:
    pair: tuple[int, int]
    value: tuple  # [[α, e_i], e_j] != 0


@dataclass(frozen=True)
class QJDerClassification:
    alpha: tuple
    verdict: Split | Obstructed

    @property
    def split(self) -> bool:
        return isinstance(self.verdict, Split)


def zj_violation(A: StructureConstantAlgebra, alpha) -> tuple[tuple[int, int], tuple] | None:
    """First basis pair with [[α, e_i], e_j] != 0."""
    alpha = A.vec(alpha)
    for i, j in _pairs(A.dim):
        v = A.lie(A.lie(alpha, A.basis_vector(i)), A.basis_vector(j))
        if any(v):
            return (i, j), v
    return None


def classify_qjder(A: StructureConstantAlgebra, f: LinearMap) -> QJDerClassification:
    """Decide whether f in QJDer splits as (Jordan centralizer) + (Jordan derivation).

    It does exactly when α = f(1)/2 lies in Z_J; then the parts are x -> α∘x
    and f - (α∘·).  Otherwise the certificate is a pair with [[α, e_i], e_j] != 0.
    """
    _require(A, "QJDer", f)
    alpha = A.scale(half(A), f(A.unit))
    bad = zj_violation(A, alpha)
    if bad is not None:
        return QJDerClassification(alpha, Obstructed(*bad))
    fbar = jordan_map(A, alpha)
    d = f - fbar
    _require(A, "JCent", fbar)
    _require(A, "JDer", d)
    return QJDerClassification(alpha, Split(fbar, d))


def extract_alpha(A: StructureConstantAlgebra, f: LinearMap) -> tuple:
    """α = f(1)/2 for a quasi Jordan centralizer f, checked to give f = α∘· with α in Z_Q."""
    _require(A, "QJCent", f)
    alpha = A.scale(half(A), f(A.unit))
    for j in range(A.dim):
        e = A.basis_vector(j)
        if f(e) != A.jordan(alpha, e):
            raise NotAMemberError(f"f({A.labels[j]}) differs from α∘{A.labels[j]}", (j, j))
    if not contains(z_quasi(A), alpha):
        raise NotAMemberError(f"α = {A.format(alpha)} is not in Z_Q")
    return alpha


# ---- cached bundle ---------------------------------------------------------


class Spaces:
    """Lazily computed centers and map spaces of one algebra."""

    def __init__(self, A: StructureConstantAlgebra):
        self.A = A

    @cached_property
    def z(self) -> Subspace:
        return center(self.A)

    @cached_property
    def z_j(self) -> Subspace:
        return z_jordan(self.A)

    @cached_property
    def z_q(self) -> Subspace:
        return z_quasi(self.A)

    @cached_property
    def cent(self) -> MapSpace:
        return cent_space(self.A)

    @cached_property
    def jcent(self) -> MapSpace:
        return jcent_space(self.A)

    @cached_property
    def qjcent(self) -> MapSpace:
        return qjcent_space(self.A)

    @cached_property
    def der(self) -> MapSpace:
        return der_space(self.A)

    @cached_property
    def jder(self) -> MapSpace:
        return jder_space(self.A)

    @cached_property
    def qjder(self) -> MapSpace:
        return qjder_space(self.A)

    @cached_property
    def qjder_projected(self) -> MapSpace:
        return qjder_space_projected(self.A)

    @cached_property
    def gjder(self) -> MapSpace:
        return gjder_space(self.A)

    @cached_property
    def fgder(self) -> MapSpace:
        return fgder_space(self.A)

    def by_kind(self, kind: str) -> MapSpace:
        return getattr(self, kind.lower())
