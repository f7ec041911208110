"""Exact linear algebra over QQ or GF(p): RREF, nullspaces, subspace lattice.

Subspaces are always stored by their reduced row-echelon basis, so two
:class:`Subspace` values describe the same set exactly when they compare equal.

Large systems are handed around as *sparse rows*: dicts mapping a column index
to a nonzero scalar.  :class:`Echelon` keeps an incrementally maintained,
fully reduced echelon form of such rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import Field, FieldMismatchError

SparseRow = dict


class AmbientMismatchError(ValueError):
    """Two subspaces (or a subspace and a vector) live in different spaces."""


class Inconsistent(Exception):
    """Raised by :meth:`Echelon.add` when a row reduces to ``0 = c`` with c != 0."""

    def __init__(self, index: int):
        super().__init__(f"row {index} makes the system inconsistent")
        self.index = index


class Echelon:
    """Fully reduced echelon form built one sparse row at a time.

    Every stored row has leading coefficient 1 and contains no other pivot
    column, so after any number of :meth:`add` calls the stored rows, sorted
    by pivot, are the RREF of everything added so far.  An optional
    right-hand side is carried along for inhomogeneous systems.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, SparseRow] = {}
        self.rhs: dict[int, object] = {}
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: SparseRow, rhs=None):
        row = dict(row)
        zero = self.field.zero
        rhs = zero if rhs is None else rhs
        for col in [c for c in row if c in self.rows]:
            c = row.get(col)
            if not c:
                continue
            prow = self.rows[col]
            for j, v in prow.items():
                w = row.get(j, zero) - c * v
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
            rhs = rhs - c * self.rhs[col]
        return row, rhs

    def add(self, row: SparseRow, rhs=None) -> bool:
        """Add a row; return True if it raised the rank.

        Raises :class:`Inconsistent` if the row reduces to ``0 = c``, c != 0.
        """
        index = self.count
        self.count += 1
        row, rhs = self.reduce(row, rhs)
        if not row:
            if rhs:
                raise Inconsistent(index)
            return False
        p = min(row)
        inv = self.field.one / row[p]
        row = {j: v * inv for j, v in row.items()}
        rhs = rhs * inv
        zero = self.field.zero
        for q, other in self.rows.items():
            c = other.get(p)
            if not c:
                continue
            for j, v in row.items():
                w = other.get(j, zero) - c * v
                if w:
                    other[j] = w
                else:
                    other.pop(j, None)
            self.rhs[q] = self.rhs[q] - c * rhs
        self.rows[p] = row
        self.rhs[p] = rhs
        return True

    def pivots(self) -> tuple[int, ...]:
        return tuple(sorted(self.rows))

    def dense_rows(self) -> list[tuple]:
        zero = self.field.zero
        out = []
        for p in self.pivots():
            r = [zero] * self.ncols
            for j, v in self.rows[p].items():
                r[j] = v
            out.append(tuple(r))
        return out

    def kernel_vectors(self) -> list[tuple]:
        """One solution of the homogeneous system per free column."""
        zero, one = self.field.zero, self.field.one
        piv = self.pivots()
        pivset = set(piv)
        out = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            v = [zero] * self.ncols
            v[f] = one
            for p in piv:
                c = self.rows[p].get(f)
                if c:
                    v[p] = -c
            out.append(tuple(v))
        return out

    def particular_solution(self) -> tuple:
        """Solution with every free variable set to zero."""
        v = [self.field.zero] * self.ncols
        for p, r in self.rhs.items():
            v[p] = r
        return tuple(v)


def to_sparse(vec: Sequence) -> SparseRow:
    return {j: v for j, v in enumerate(vec) if v}


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix; every entry belongs to ``field``."""

    field: Field
    rows: tuple[tuple, ...]
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(field.coerce(a) for a in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        return cls(field, rows, ncols)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(
            field,
            tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)),
            n,
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        zero = self.field.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def _check_field(self):
        for r in self.rows:
            for a in r:
                if not self.field.contains(a):
                    raise FieldMismatchError(f"entry {a!r} does not belong to {self.field!r}")


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row-echelon form, pivot columns and rank."""
    M._check_field()
    ech = Echelon(M.field, M.ncols)
    for r in M.rows:
        ech.add(to_sparse(r))
    R = Matrix(M.field, tuple(ech.dense_rows()), M.ncols)
    return R, ech.pivots(), ech.rank


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^m stored by its canonical (RREF) basis."""

    field: Field
    ambient_dim: int
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        return subspace_leq(self, other)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coefficients of ``v`` in the stored basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatchError(f"vector of length {len(v)} in F^{self.ambient_dim}")
        coeffs = tuple(v[p] for p in self.pivots)
        zero = self.field.zero
        for j in range(self.ambient_dim):
            s = zero
            for c, b in zip(coeffs, self.basis):
                if c and b[j]:
                    s = s + c * b[j]
            if s != v[j]:
                return None
        return coeffs


def span(field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
    ech = Echelon(field, ambient_dim)
    for v in vectors:
        if len(v) != ambient_dim:
            raise AmbientMismatchError(f"vector of length {len(v)} in F^{ambient_dim}")
        ech.add(to_sparse(tuple(field.coerce(a) for a in v)))
    return Subspace(field, ambient_dim, tuple(ech.dense_rows()), ech.pivots())


def zero_subspace(field: Field, m: int) -> Subspace:
    return Subspace(field, m, (), ())


def full_space(field: Field, m: int) -> Subspace:
    return span(field, m, Matrix.identity(field, m).rows)


def _echelon_subspace(ech: Echelon) -> Subspace:
    return span(ech.field, ech.ncols, ech.kernel_vectors())


def nullspace(M: Matrix) -> Subspace:
    """Canonical basis of {v : M v = 0}."""
    M._check_field()
    ech = Echelon(M.field, M.ncols)
    for r in M.rows:
        ech.add(to_sparse(r))
    return _echelon_subspace(ech)


def nullspace_sparse(field: Field, ncols: int, rows: Iterable[SparseRow]) -> Subspace:
    ech = Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    return _echelon_subspace(ech)


def _check_ambient(U: Subspace, V: Subspace):
    if U.ambient_dim != V.ambient_dim:
        raise AmbientMismatchError(f"F^{U.ambient_dim} vs F^{V.ambient_dim}")
    if U.field != V.field:
        raise FieldMismatchError(f"{U.field!r} vs {V.field!r}")


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    return span(U.field, U.ambient_dim, U.basis + V.basis)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    """U ∩ V by the kernel method.

    Solve sum(a_i u_i) - sum(b_j v_j) = 0 and map each kernel vector back to
    sum(a_i u_i).
    """
    _check_ambient(U, V)
    field, m = U.field, U.ambient_dim
    k, l = U.dim, V.dim
    if k == 0 or l == 0:
        return zero_subspace(field, m)
    rows = []
    for c in range(m):
        row = {}
        for i, u in enumerate(U.basis):
            if u[c]:
                row[i] = u[c]
        for j, v in enumerate(V.basis):
            if v[c]:
                row[k + j] = -v[c]
        if row:
            rows.append(row)
    kernel = nullspace_sparse(field, k + l, rows)
    zero = field.zero
    vecs = []
    for w in kernel.basis:
        x = [zero] * m
        for i, u in enumerate(U.basis):
            a = w[i]
            if a:
                for c in range(m):
                    if u[c]:
                        x[c] = x[c] + a * u[c]
        vecs.append(x)
    return span(field, m, vecs)


def contains(U: Subspace, v: Sequence) -> bool:
    if len(v) != U.ambient_dim:
        raise AmbientMismatchError(f"vector of length {len(v)} in F^{U.ambient_dim}")
    return U.coordinates(tuple(U.field.coerce(a) for a in v)) is not None


def subspace_leq(U: Subspace, V: Subspace) -> bool:
    _check_ambient(U, V)
    return all(contains(V, u) for u in U.basis)


def restrict(field: Field, vectors: Iterable[Sequence], block: range) -> list[tuple]:
    return [tuple(v[j] for j in block) for v in vectors]


def solve_and_project(M: Matrix, block: range | tuple[int, int]) -> Subspace:
    """Canonical basis of { v[block] : M v = 0 }.

    Existential quantification over the coordinates outside ``block``.
    """
    if isinstance(block, tuple):
        block = range(*block)
    if len(block) == 0:
        raise ValueError("empty block")
    if block.start < 0 or block.stop > M.ncols or block.step != 1:
        raise ValueError(f"block {block} outside 0..{M.ncols}")
    M._check_field()
    return project_sparse(M.field, M.ncols, (to_sparse(r) for r in M.rows), block)


def project_sparse(field: Field, ncols: int, rows: Iterable[SparseRow], block: range) -> Subspace:
    ech = Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    return span(field, len(block), restrict(field, ech.kernel_vectors(), block))


def solve_sparse(field: Field, ncols: int, rows: Iterable[tuple[SparseRow, object]]) -> tuple:
    """Particular solution (free variables zero) of an inhomogeneous system.

    ``rows`` yields ``(sparse_row, rhs)`` pairs.  Raises :class:`Inconsistent`
    carrying the index of the first row that made the system unsolvable.
    """
    ech = Echelon(field, ncols)
    for r, b in rows:
        ech.add(r, b)
    return ech.particular_solution()
