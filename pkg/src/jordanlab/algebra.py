"""Unital associative algebras given by structure constants.

An algebra of dimension n has basis e_0..e_{n-1} and a sparse table
``(i, j) -> ((k, c_ijk), ...)`` meaning e_i e_j = sum_k c_ijk e_k.  Elements
are coordinate tuples; :class:`Element` wraps one with operator support.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

from .fields import Field
from .linalg import Subspace, nullspace_sparse, span, zero_subspace

Vector = tuple


class AlgebraError(ValueError):
    """Invalid algebra input (dimensions, table entries, idempotents)."""


@dataclass(frozen=True, eq=False)
class StructureConstantAlgebra:
    field: Field
    dim: int
    table: dict  # (i, j) -> tuple[(k, c), ...]; absent pairs multiply to 0
    unit: Vector
    labels: tuple[str, ...]
    name: str = "A"

    def __post_init__(self):
        if len(self.unit) != self.dim:
            raise AlgebraError(f"unit has {len(self.unit)} coordinates, expected {self.dim}")
        if len(self.labels) != self.dim:
            raise AlgebraError(f"{len(self.labels)} labels for dimension {self.dim}")
        for (i, j), terms in self.table.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraError(f"table index ({i}, {j}) out of range")
            for k, _ in terms:
                if not 0 <= k < self.dim:
                    raise AlgebraError(f"table target {k} out of range")

    @classmethod
    def from_products(
        cls,
        field: Field,
        products: dict,
        unit: Sequence,
        labels: Sequence[str],
        name: str = "A",
    ) -> StructureConstantAlgebra:
        """Build from ``(i, j) -> {k: c}`` (or iterable of (k, c)); zeros dropped."""
        table = {}
        for (i, j), terms in sorted(products.items()):
            items = terms.items() if isinstance(terms, dict) else terms
            acc: dict = {}
            for k, c in items:
                c = field.parse(c) if isinstance(c, str) else field.coerce(c)
                acc[k] = acc.get(k, field.zero) + c
            kept = tuple((k, acc[k]) for k in sorted(acc) if acc[k])
            if kept:
                table[(i, j)] = kept
        unit = tuple(field.coerce(a) for a in unit)
        return cls(field, len(labels), table, unit, tuple(labels), name)

    # ---- coordinates -------------------------------------------------
    @property
    def zero(self) -> Vector:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> Vector:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element labelled {label!r} in {self.name}") from None

    def vec(self, spec) -> Vector:
        """Coordinates from a label, a {label: coeff} dict, or a sequence."""
        if isinstance(spec, str):
            return self.basis_vector(self.index(spec))
        if isinstance(spec, dict):
            v = list(self.zero)
            for lab, c in spec.items():
                i = self.index(lab)
                v[i] = v[i] + self.field(c)
            return tuple(v)
        if isinstance(spec, Element):
            return spec.coords
        v = tuple(self.field.coerce(a) for a in spec)
        if len(v) != self.dim:
            raise AlgebraError(f"element has {len(v)} coordinates, expected {self.dim}")
        return v

    def element(self, spec) -> Element:
        return Element(self, self.vec(spec))

    def one(self) -> Element:
        return Element(self, self.unit)

    def basis(self) -> list[Element]:
        return [Element(self, self.basis_vector(i)) for i in range(self.dim)]

    def format(self, v: Sequence) -> str:
        parts = []
        for c, lab in zip(v, self.labels):
            if not c:
                continue
            s = self.field.format(c)
            if s == "1":
                parts.append(lab)
            elif s == "-1":
                parts.append(f"-{lab}")
            else:
                parts.append(f"{s}*{lab}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # ---- products ----------------------------------------------------
    def _check(self, v: Sequence):
        if len(v) != self.dim:
            raise AlgebraError(f"element has {len(v)} coordinates, expected {self.dim}")

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        self._check(x)
        self._check(y)
        out = list(self.zero)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                terms = self.table.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def add(self, x: Sequence, y: Sequence) -> Vector:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: Sequence, y: Sequence) -> Vector:
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c, x: Sequence) -> Vector:
        c = self.field.coerce(c) if not isinstance(c, str) else self.field.parse(c)
        return tuple(c * a for a in x)

    def jordan(self, x: Sequence, y: Sequence) -> Vector:
        return self.add(self.mul(x, y), self.mul(y, x))

    def lie(self, x: Sequence, y: Sequence) -> Vector:
        return self.sub(self.mul(x, y), self.mul(y, x))

    # ---- basis-level caches used by the constraint builders ----------
    @cached_property
    def products(self) -> list[list[dict]]:
        """products[i][j] = {k: c} for e_i e_j."""
        P = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), terms in self.table.items():
            P[i][j] = dict(terms)
        return P

    def _combine(self, a: dict, b: dict, sign) -> dict:
        out = dict(a)
        zero = self.field.zero
        for k, c in b.items():
            w = out.get(k, zero) + sign * c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return out

    @cached_property
    def jordan_products(self) -> list[list[dict]]:
        """e_i ∘ e_j as sparse dicts."""
        P, n = self.products, self.dim
        one = self.field.one
        return [[self._combine(P[i][j], P[j][i], one) for j in range(n)] for i in range(n)]

    @cached_property
    def lie_products(self) -> list[list[dict]]:
        """[e_i, e_j] as sparse dicts."""
        P, n = self.products, self.dim
        return [[self._combine(P[i][j], P[j][i], -self.field.one) for j in range(n)] for i in range(n)]

    def is_commutative(self) -> bool:
        return all(not self.lie_products[i][j] for i in range(self.dim) for j in range(self.dim))


@dataclass(frozen=True)
class Element:
    """Algebra element with arithmetic operators (``*`` is the algebra product)."""

    algebra: StructureConstantAlgebra = dc_field(repr=False, compare=False)
    coords: Vector

    def _other(self, other) -> Vector:
        if isinstance(other, Element):
            return other.coords
        return self.algebra.vec(other)

    def __add__(self, other):
        return Element(self.algebra, self.algebra.add(self.coords, self._other(other)))

    def __sub__(self, other):
        return Element(self.algebra, self.algebra.sub(self.coords, self._other(other)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return Element(self.algebra, self.algebra.mul(self.coords, other.coords))
        return Element(self.algebra, self.algebra.scale(other, self.coords))

    def __rmul__(self, c):
        return Element(self.algebra, self.algebra.scale(c, self.coords))

    def jordan(self, other) -> Element:
        return Element(self.algebra, self.algebra.jordan(self.coords, self._other(other)))

    def lie(self, other) -> Element:
        return Element(self.algebra, self.algebra.lie(self.coords, self._other(other)))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return self.algebra.format(self.coords)


def multiply(A: StructureConstantAlgebra, x, y) -> Element:
    return Element(A, A.mul(A.vec(x), A.vec(y)))


def jordan(A: StructureConstantAlgebra, x, y) -> Element:
    """x ∘ y = xy + yx."""
    return Element(A, A.jordan(A.vec(x), A.vec(y)))


def lie(A: StructureConstantAlgebra, x, y) -> Element:
    """[x, y] = xy - yx."""
    return Element(A, A.lie(A.vec(x), A.vec(y)))


# ---- validation -----------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    kind: str = ""  # "", "characteristic", "unit", "associativity"
    message: str = ""
    triple: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok


def validate(A: StructureConstantAlgebra) -> ValidationReport:
    """Check char != 2, the unit axioms and associativity on all basis triples."""
    if A.field.char == 2:
        return ValidationReport(False, "characteristic", "characteristic 2 is not supported")
    if A.dim == 0:
        return ValidationReport(False, "unit", "zero-dimensional algebra has no unit")
    u = A.unit
    for i in range(A.dim):
        e = A.basis_vector(i)
        if A.mul(u, e) != e:
            return ValidationReport(False, "unit", f"1*{A.labels[i]} = {A.format(A.mul(u, e))}", (i,))
        if A.mul(e, u) != e:
            return ValidationReport(False, "unit", f"{A.labels[i]}*1 = {A.format(A.mul(e, u))}", (i,))
    P = A.products
    zero = A.field.zero
    n = A.dim
    for i in range(n):
        for j in range(n):
            left_ij = P[i][j]
            for k in range(n):
                left: dict = {}
                for m, c in left_ij.items():
                    for t, d in P[m][k].items():
                        left[t] = left.get(t, zero) + c * d
                right: dict = {}
                for m, c in P[j][k].items():
                    for t, d in P[i][m].items():
                        right[t] = right.get(t, zero) + c * d
                if any(left.get(t, zero) != right.get(t, zero) for t in set(left) | set(right)):
                    lab = A.labels
                    l_vec = tuple(left.get(t, zero) for t in range(n))
                    r_vec = tuple(right.get(t, zero) for t in range(n))
                    return ValidationReport(
                        False,
                        "associativity",
                        f"({lab[i]}*{lab[j]})*{lab[k]} = {A.format(l_vec)} but "
                        f"{lab[i]}*({lab[j]}*{lab[k]}) = {A.format(r_vec)}",
                        (i, j, k),
                    )
    return ValidationReport(True)


# ---- subalgebras and idempotents ------------------------------------------


def subalgebra_generated(A: StructureConstantAlgebra, gens: Iterable, include_unit: bool = True) -> Subspace:
    """Least subspace containing ``gens`` (and 1 if asked) closed under products."""
    vecs = [A.vec(g) for g in gens]
    if not vecs:
        raise AlgebraError("at least one generator is required")
    if include_unit:
        vecs.append(A.unit)
    S = span(A.field, A.dim, vecs)
    while True:
        prods = [A.mul(x, y) for x in S.basis for y in S.basis]
        T = span(A.field, A.dim, S.basis + tuple(prods))
        if T.dim == S.dim:
            return S
        S = T


@dataclass(frozen=True)
class Idempotent:
    algebra: StructureConstantAlgebra = dc_field(repr=False, compare=False)
    element: Vector

    def __post_init__(self):
        A = self.algebra
        if A.mul(self.element, self.element) != tuple(self.element):
            raise AlgebraError(f"{A.format(self.element)} is not idempotent")

    @property
    def complement(self) -> Vector:
        return self.algebra.sub(self.algebra.unit, self.element)

    @property
    def nontrivial(self) -> bool:
        return any(self.element) and tuple(self.element) != tuple(self.algebra.unit)


def idempotent(A: StructureConstantAlgebra, spec) -> Idempotent:
    return Idempotent(A, A.vec(spec))


def _sandwich_span(A, left, right) -> Subspace:
    return span(A.field, A.dim, [A.mul(A.mul(left, e), right) for e in (A.basis_vector(i) for i in range(A.dim))])


@dataclass(frozen=True)
class Peirce:
    eAe: Subspace
    eAf: Subspace
    fAe: Subspace
    fAf: Subspace

    def dims(self) -> tuple[int, int, int, int]:
        return (self.eAe.dim, self.eAf.dim, self.fAe.dim, self.fAf.dim)


def peirce(A: StructureConstantAlgebra, e: Idempotent) -> Peirce:
    """Peirce components eAe, eAe⊥, e⊥Ae, e⊥Ae⊥ with e⊥ = 1 - e."""
    if not isinstance(e, Idempotent):
        e = idempotent(A, e)
    x, y = e.element, e.complement
    return Peirce(_sandwich_span(A, x, x), _sandwich_span(A, x, y), _sandwich_span(A, y, x), _sandwich_span(A, y, y))


def _annihilated_corner(A, corner: Subspace, right_of: Subspace, left_of: Subspace) -> Subspace:
    """{a in corner : a * right_of = 0 and left_of * a = 0}."""
    k = corner.dim
    if k == 0:
        return zero_subspace(A.field, A.dim)
    rows = []
    for m in right_of.basis:
        imgs = [A.mul(b, m) for b in corner.basis]
        for t in range(A.dim):
            row = {i: imgs[i][t] for i in range(k) if imgs[i][t]}
            if row:
                rows.append(row)
    for m in left_of.basis:
        imgs = [A.mul(m, b) for b in corner.basis]
        for t in range(A.dim):
            row = {i: imgs[i][t] for i in range(k) if imgs[i][t]}
            if row:
                rows.append(row)
    coeffs = nullspace_sparse(A.field, k, rows)
    vecs = []
    for w in coeffs.basis:
        v = A.zero
        for c, b in zip(w, corner.basis):
            if c:
                v = A.add(v, A.scale(c, b))
        vecs.append(v)
    return span(A.field, A.dim, vecs)


def condition_3_offenders(A: StructureConstantAlgebra, e: Idempotent) -> tuple[Subspace, Subspace]:
    """The two subspaces whose vanishing is the corner-faithfulness condition.

    First: {exe : exe·eAe⊥ = 0 and e⊥Ae·exe = 0}.
    Second: {e⊥xe⊥ : eAe⊥·e⊥xe⊥ = 0 and e⊥xe⊥·e⊥Ae = 0}.
    """
    if not isinstance(e, Idempotent):
        e = idempotent(A, e)
    if not e.nontrivial:
        raise AlgebraError("condition needs an idempotent other than 0 and 1")
    pc = peirce(A, e)
    first = _annihilated_corner(A, pc.eAe, right_of=pc.eAf, left_of=pc.fAe)
    second = _annihilated_corner(A, pc.fAf, right_of=pc.fAe, left_of=pc.eAf)
    return first, second


def check_condition_3(A: StructureConstantAlgebra, e) -> bool:
    """True iff neither Peirce corner has a nonzero element killed by both bimodules."""
    first, second = condition_3_offenders(A, e)
    return first.is_zero() and second.is_zero()


def is_triangular_idempotent(A: StructureConstantAlgebra, e) -> bool:
    """e⊥Ae = {0} and eAe⊥ is faithful as a left eAe- and right e⊥Ae⊥-module.

    With e⊥Ae = {0} the faithfulness requirement is exactly the corner
    condition checked by :func:`check_condition_3`.
    """
    if not isinstance(e, Idempotent):
        e = idempotent(A, e)
    return e.nontrivial and peirce(A, e).fAe.is_zero() and check_condition_3(A, e)


def generated_by(A: StructureConstantAlgebra, gens: Iterable) -> bool:
    return subalgebra_generated(A, list(gens), include_unit=True).is_full()
