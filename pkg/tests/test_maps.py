import pytest

import oracle
from jordanlab.catalog import DEFAULT_SUITE, get_entry, obstructed_qjder_example
from jordanlab.fields import prime_field
from jordanlab.linalg import subspace_intersect, subspace_leq, subspace_sum
from jordanlab.maps import (
    KINDS,
    LinearMap,
    NotAMemberError,
    Spaces,
    classify_qjder,
    decompose_gjder,
    evaluation_preimage,
    extract_alpha,
    find_witnesses,
    first_violation,
    jordan_map,
    jordan_maps_of,
    jordan_preimage,
    left_multiplication,
    satisfies,
)

LAW_OF = {"Cent": "Cent", "JCent": "JCent", "QJCent": "QJCent", "Der": "Der", "JDer": "JDer", "QJDer": "QJDer"}


@pytest.mark.parametrize("name", DEFAULT_SUITE + ("F",))
def test_dimensions_match_rank_oracle(name, spaces):
    S = spaces[name] if name in spaces else Spaces(get_entry(name).algebra)
    for kind in KINDS:
        assert S.by_kind(kind).dim == oracle.kind_dim(S.A, kind), kind


@pytest.mark.parametrize("name", ["T2", "primer"])
def test_dimensions_match_rank_oracle_mod_7(name):
    S = Spaces(get_entry(name, prime_field(7)).algebra)
    for kind in KINDS:
        assert S.by_kind(kind).dim == oracle.kind_dim(S.A, kind), kind


@pytest.mark.parametrize("name", DEFAULT_SUITE)
def test_basis_maps_satisfy_their_laws(name, spaces):
    S = spaces[name]
    for kind, law in LAW_OF.items():
        for f in S.by_kind(kind).maps():
            assert first_violation(S.A, law, f) is None, (kind, f.describe())


EXPECTED = {
    "M2": dict(Cent=1, JCent=1, QJCent=1, Der=3, JDer=3, QJDer=4, GJDer=4, FGDer=4),
    "M3": dict(Cent=1, JCent=1, QJCent=1, Der=8, JDer=8, QJDer=9, GJDer=9, FGDer=9),
    "T2": dict(Cent=1, JCent=1, QJCent=2, Der=2, JDer=2, QJDer=3, GJDer=4, FGDer=3),
    "T3": dict(Cent=1, JCent=1, QJCent=2, Der=5, JDer=5, QJDer=6, GJDer=7, FGDer=6),
    "B2-1": dict(Cent=1, JCent=1, QJCent=1, Der=6, JDer=6, QJDer=7, GJDer=7, FGDer=7),
    "grassmann3": dict(Cent=2, JCent=4, QJCent=4, Der=4, JDer=4, QJDer=8, GJDer=8, FGDer=8),
    "primer": dict(Cent=3, JCent=4, QJCent=5, Der=7, JDer=9, QJDer=15, GJDer=16, FGDer=15),
}


@pytest.mark.parametrize("name", DEFAULT_SUITE)
def test_frozen_dimension_table(name, spaces):
    S = spaces[name]
    assert {k: S.by_kind(k).dim for k in KINDS} == EXPECTED[name]


def test_one_dimensional_algebra():
    S = Spaces(get_entry("F").algebra)
    assert (S.der.dim, S.cent.dim, S.fgder.dim) == (0, 1, 1)


@pytest.mark.parametrize("name", DEFAULT_SUITE)
def test_chains_and_identities(name, spaces):
    S = spaces[name]
    A = S.A
    assert subspace_leq(S.cent.space, S.jcent.space) and subspace_leq(S.jcent.space, S.qjcent.space)
    split = subspace_sum(S.jcent.space, S.jder.space)
    assert subspace_leq(S.der.space, S.jder.space) and subspace_leq(split, S.qjder.space)
    assert S.gjder == subspace_sum(S.qjcent.space, S.qjder.space)
    assert S.jcent == subspace_intersect(S.qjcent.space, S.qjder.space)
    assert subspace_intersect(S.jcent.space, S.jder.space).is_zero()
    assert S.qjder == S.qjder_projected
    assert (S.qjcent.dim, S.jcent.dim, S.cent.dim) == (S.z_q.dim, S.z_j.dim, S.z.dim)
    assert jordan_maps_of(A, S.z_q) == S.qjcent.space
    assert jordan_maps_of(A, S.z_j) == S.jcent.space
    assert jordan_preimage(A, S.cent) == S.z


def test_evaluation_preimage():
    A = get_entry("T2").algebra
    S = Spaces(A)
    P = evaluation_preimage(A, S.z_j)
    assert P.dim == A.dim * A.dim - A.dim + S.z_j.dim
    for v in P.basis:
        assert LinearMap.from_vec(A, v)(A.unit) in S.z_j


# ---- worked examples ----------------------------------------------------


def test_t2_example_map():
    A = get_entry("T2").algebra
    S = Spaces(A)
    f = jordan_map(A, "e12")
    assert f in S.qjcent and f not in S.jcent and f not in S.fgder
    assert first_violation(A, "JCent", f) is not None
    assert extract_alpha(A, f) == A.vec("e12")


def test_obstructed_qjder_example():
    f, h = obstructed_qjder_example()
    A = f.algebra
    e23 = A.vec("e23")
    assert f(A.unit) == A.scale(2, e23)
    assert satisfies(A, "QJDer-h", f, h=h)
    assert satisfies(A, "QJDer", f)
    x = A.vec("e12+e34")
    d = f - jordan_map(A, e23)
    assert d(x) == A.scale(-1, A.add(A.vec("e13"), A.vec("e24")))
    dx = d(x)
    assert A.add(A.jordan(dx, x), A.jordan(x, dx)) == A.scale(-4, A.vec("e14"))
    c = classify_qjder(A, f)
    assert not c.split and c.alpha == e23
    assert c.verdict.pair == (1, 1) and c.verdict.value == A.scale(-2, A.vec("e14"))
    assert extract_alpha(A, jordan_map(A, e23)) == e23


def test_classify_split_cases():
    A = get_entry("T2").algebra
    ident = LinearMap.identity(A)
    c = classify_qjder(A, ident)
    assert c.split and c.alpha == A.scale(A.field(1) / 2, A.unit)
    assert c.verdict.jder_part.is_zero() and c.verdict.jcent_part == ident
    for d in Spaces(A).jder.maps():
        c = classify_qjder(A, d)
        assert c.split and c.verdict.jcent_part.is_zero() and c.verdict.jder_part == d


def test_classify_requires_membership():
    A = get_entry("M2").algebra
    with pytest.raises(NotAMemberError) as info:
        classify_qjder(A, left_multiplication(A, "e11"))
    assert info.value.pair is not None


def test_extract_alpha_of_zero():
    A = get_entry("primer").algebra
    assert extract_alpha(A, LinearMap.zero(A)) == A.zero
    with pytest.raises(NotAMemberError):
        extract_alpha(A, left_multiplication(A, "e12+e34"))


@pytest.mark.parametrize("name", ["M2", "T2", "grassmann3", "primer"])
def test_decompose_round_trips_on_gjder_basis(name, spaces):
    S = spaces[name]
    A = S.A
    for f in S.gjder.maps():
        d = decompose_gjder(A, f)
        assert d.f1 + d.f2 == f
        assert satisfies(A, "GJDer", f, d.g, d.h)
        assert d.f1 in S.qjder and d.f2 in S.qjcent


@pytest.mark.parametrize("name", ["M2", "T2", "primer"])
def test_decompose_keeps_jordan_maps_whole(name, spaces):
    S = spaces[name]
    A = S.A
    for f in S.jcent.maps() + S.der.maps():
        d = decompose_gjder(A, f)
        assert d.g == f and d.f1 == f and d.f2.is_zero()


def test_decompose_t2_example_has_quasi_part():
    A = get_entry("T2").algebra
    S = Spaces(A)
    d = decompose_gjder(A, jordan_map(A, "e12"))
    assert not d.f2.is_zero()
    assert d.f2 in S.qjcent and d.f2 not in S.jcent


def test_decompose_rejects_non_members_with_a_pair():
    A = get_entry("M2").algebra
    f = left_multiplication(A, "e11")
    assert f not in Spaces(A).gjder
    with pytest.raises(NotAMemberError) as info:
        find_witnesses(A, f)
    err = info.value
    assert err.pair is not None and err.left != err.right
    with pytest.raises(NotAMemberError):
        decompose_gjder(A, f)


@pytest.mark.parametrize("name", ["T2", "grassmann3"])
def test_every_fgder_basis_map_has_witnesses(name, spaces):
    from jordanlab.linalg import solve_sparse

    S = spaces[name]
    A = S.A
    N = A.dim * A.dim
    cols = oracle.constraint_columns(A, "GJDer")  # blocks f, g, h
    nrows = len(cols[0])
    for h in S.fgder.maps():
        hv = h.vec()
        rows = []
        for r in range(nrows):
            row = {c: cols[c][r] for c in range(2 * N) if cols[c][r]}
            rhs = -sum((cols[2 * N + t][r] * hv[t] for t in range(N)), A.field.zero)
            rows.append((row, rhs))
        sol = solve_sparse(A.field, 2 * N, rows)
        f, g = LinearMap.from_vec(A, sol[:N]), LinearMap.from_vec(A, sol[N:])
        assert satisfies(A, "GJDer", f, g, h)
