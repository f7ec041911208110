import pytest

from jordanlab.catalog import get_entry
from jordanlab.centers import (
    UnsupportedFieldError,
    center,
    center_chain,
    is_semiprime_char0,
    trace_radical,
    z_jordan,
    z_quasi,
)
from jordanlab.fields import prime_field
from jordanlab.linalg import span


def basis_span(A, *specs):
    return span(A.field, A.dim, [A.vec(s) for s in specs])


def test_primer_chain_matches_displayed_bases():
    A = get_entry("primer").algebra
    assert center(A) == basis_span(A, "1", {"e13": 1, "e24": 1}, "e14")
    assert z_jordan(A) == basis_span(A, "1", "e13", "e24", "e14")
    assert z_quasi(A) == basis_span(A, "1", "e13", "e24", "e14", "e23")


@pytest.mark.parametrize(
    "name, dims",
    [("M2", (1, 1, 1)), ("M3", (1, 1, 1)), ("T2", (1, 1, 2)), ("T3", (1, 1, 2)), ("grassmann3", (2, 4, 4)), ("primer", (3, 4, 5)), ("F", (1, 1, 1))],
)
def test_chain_dimensions(name, dims):
    assert center_chain(get_entry(name).algebra).dims() == dims


def test_t2_quasi_center_basis():
    A = get_entry("T2").algebra
    assert z_quasi(A) == basis_span(A, {"e11": 1, "e22": 1}, "e12")


def test_grassmann_jordan_center_is_everything():
    A = get_entry("grassmann3").algebra
    assert z_jordan(A).is_full() and z_quasi(A).is_full() and not center(A).is_full()


def test_sets_satisfy_their_defining_laws():
    for name in ("primer", "T3", "grassmann3"):
        A = get_entry(name).algebra
        basis = [A.basis_vector(i) for i in range(A.dim)]
        for a in center(A).basis:
            assert all(not any(A.lie(a, x)) for x in basis)
        for a in z_jordan(A).basis:
            assert all(not any(A.lie(A.lie(a, x), y)) for x in basis for y in basis)
        for a in z_quasi(A).basis:
            assert all(not any(A.lie(a, A.lie(x, y))) for x in basis for y in basis)


def test_chain_over_prime_field():
    A = get_entry("primer", prime_field(7)).algebra
    assert center_chain(A).dims() == (3, 4, 5)


@pytest.mark.parametrize("name, expected", [("M2", True), ("M3", True), ("F", True), ("M2+M2", True), ("T2", False), ("T3", False), ("primer", False), ("grassmann3", False)])
def test_semiprime_criterion(name, expected):
    assert is_semiprime_char0(get_entry(name).algebra) is expected


def test_primer_radical_contains_e14():
    A = get_entry("primer").algebra
    # e14 A e14 = 0, so e14 generates a nilpotent ideal
    assert all(not any(A.mul(A.mul(A.vec("e14"), A.basis_vector(i)), A.vec("e14"))) for i in range(A.dim))
    assert A.vec("e14") in trace_radical(A)


def test_semiprime_needs_characteristic_zero():
    with pytest.raises(UnsupportedFieldError):
        is_semiprime_char0(get_entry("M2", prime_field(5)).algebra)
