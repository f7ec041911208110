"""Center Z(A), the sets Z_J(A) and Z_Q(A), and the semiprimeness test.

All three sets are nullspaces of linear conditions on the unknown element a,
imposed on basis elements only (bilinearity makes that sufficient):

* Z(A):   [a, e_i] = 0
* Z_J(A): [[a, e_i], e_j] = 0
* Z_Q(A): [a, [e_i, e_j]] = 0
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import StructureConstantAlgebra
from .fields import RationalField
from .linalg import Subspace, nullspace_sparse, span, subspace_leq


class UnsupportedFieldError(ValueError):
    """Operation is only valid in characteristic 0."""


class ChainViolation(AssertionError):
    pass


def _rows_from_images(A: StructureConstantAlgebra, images: list[dict]):
    """Constraint rows sum_m a_m * images[m][k] = 0, one per coordinate k."""
    by_k: dict[int, dict] = {}
    for m, img in enumerate(images):
        for k, c in img.items():
            by_k.setdefault(k, {})[m] = c
    return [by_k[k] for k in sorted(by_k)]


def _bracket_right(A, x: dict, j: int) -> dict:
    """[x, e_j] for a sparse element x."""
    L = A.lie_products
    zero = A.field.zero
    out: dict = {}
    for m, c in x.items():
        for k, d in L[m][j].items():
            out[k] = out.get(k, zero) + c * d
    return {k: v for k, v in out.items() if v}


def center(A: StructureConstantAlgebra) -> Subspace:
    n, L = A.dim, A.lie_products
    rows = []
    for i in range(n):
        rows += _rows_from_images(A, [L[m][i] for m in range(n)])
    return nullspace_sparse(A.field, n, rows)


def z_jordan(A: StructureConstantAlgebra) -> Subspace:
    """{a : [[a, x], y] = 0 for all x, y}."""
    n, L = A.dim, A.lie_products
    rows = []
    for i in range(n):
        for j in range(n):
            rows += _rows_from_images(A, [_bracket_right(A, L[m][i], j) for m in range(n)])
    return nullspace_sparse(A.field, n, rows)


def z_quasi(A: StructureConstantAlgebra) -> Subspace:
    """{a : [a, [x, y]] = 0 for all x, y}."""
    n, L = A.dim, A.lie_products
    commutators = {i * n + j: L[i][j] for i in range(n) for j in range(n) if L[i][j]}
    rows = []
    for key in sorted(commutators):
        comm = commutators[key]
        images = []
        for m in range(n):
            img = {}
            for t, c in comm.items():
                for k, d in L[m][t].items():
                    img[k] = img.get(k, A.field.zero) + c * d
            images.append({k: v for k, v in img.items() if v})
        rows += _rows_from_images(A, images)
    return nullspace_sparse(A.field, n, rows)


@dataclass(frozen=True)
class CenterChain:
    z: Subspace
    z_j: Subspace
    z_q: Subspace

    def dims(self) -> tuple[int, int, int]:
        return (self.z.dim, self.z_j.dim, self.z_q.dim)


def center_chain(A: StructureConstantAlgebra) -> CenterChain:
    """Z ⊆ Z_J ⊆ Z_Q together with F·1 ⊆ Z; raises ChainViolation if broken."""
    z, zj, zq = center(A), z_jordan(A), z_quasi(A)
    scalars = span(A.field, A.dim, [A.unit])
    for name, small, big in (("F1 in Z", scalars, z), ("Z in Z_J", z, zj), ("Z_J in Z_Q", zj, zq)):
        if not subspace_leq(small, big):
            raise ChainViolation(f"{name} fails for {A.name}")
    return CenterChain(z, zj, zq)


def trace_form(A: StructureConstantAlgebra) -> list[list]:
    """Gram matrix of (a, b) -> tr(L_a L_b) = tr(L_{ab}) on the basis."""
    n = A.dim
    zero = A.field.zero
    # tr(L_{e_k}) = sum_j c_{k j j}
    tr = [zero] * n
    for (k, j), terms in A.table.items():
        for t, c in terms:
            if t == j:
                tr[k] = tr[k] + c
    G = []
    for i in range(n):
        row = []
        for j in range(n):
            s = zero
            for k, c in A.products[i][j].items():
                s = s + c * tr[k]
            row.append(s)
        G.append(row)
    return G


def trace_radical(A: StructureConstantAlgebra) -> Subspace:
    if not isinstance(A.field, RationalField):
        raise UnsupportedFieldError("the trace-form criterion needs characteristic 0")
    G = trace_form(A)
    rows = [{j: v for j, v in enumerate(r) if v} for r in G]
    return nullspace_sparse(A.field, A.dim, [r for r in rows if r])


def is_semiprime_char0(A: StructureConstantAlgebra) -> bool:
    """Zero radical of the trace form of the regular representation.

    In characteristic 0 that radical is the Jacobson radical, so a
    finite-dimensional algebra is semiprime exactly when it vanishes.
    """
    return trace_radical(A).is_zero()
