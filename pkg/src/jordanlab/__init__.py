"""Exact linear algebra for Jordan-type maps on finite-dimensional associative algebras."""

from .algebra import (
    AlgebraError,
    Element,
    StructureConstantAlgebra,
    check_condition_3,
    idempotent,
    is_triangular_idempotent,
    jordan,
    lie,
    multiply,
    peirce,
    subalgebra_generated,
    validate,
)
from .catalog import CatalogEntry, get_entry
from .centers import center, center_chain, is_semiprime_char0, z_jordan, z_quasi
from .fields import QQ, PrimeField, RationalField, field_from_spec, prime_field
from .linalg import Matrix, Subspace, nullspace, rref, solve_and_project, span, subspace_intersect, subspace_sum
from .maps import (
    LinearMap,
    MapSpace,
    NotAMemberError,
    Spaces,
    cent_space,
    classify_qjder,
    decompose_gjder,
    der_space,
    extract_alpha,
    fgder_space,
    gjder_space,
    jcent_space,
    jder_space,
    qjcent_space,
    qjder_space,
)
from .verify import run_checks

__all__ = [
    "AlgebraError", "CatalogEntry", "Element", "LinearMap", "MapSpace", "Matrix", "NotAMemberError",
    "PrimeField", "QQ", "RationalField", "Spaces", "StructureConstantAlgebra", "Subspace",
    "cent_space", "center", "center_chain", "check_condition_3", "classify_qjder", "decompose_gjder",
    "der_space", "extract_alpha", "fgder_space", "field_from_spec", "get_entry", "gjder_space",
    "idempotent", "is_semiprime_char0", "is_triangular_idempotent", "jcent_space", "jder_space",
    "jordan", "lie", "multiply", "nullspace", "peirce", "prime_field", "qjcent_space", "qjder_space",
    "rref", "run_checks", "solve_and_project", "span", "subalgebra_generated", "subspace_intersect",
    "subspace_sum", "validate", "z_jordan", "z_quasi",
]
