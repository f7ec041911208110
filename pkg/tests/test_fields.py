from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jordanlab.fields import (
    GF,
    QQ,
    CharacteristicError,
    FieldMismatchError,
    field_from_json,
    field_from_spec,
    prime_field,
)

F7 = prime_field(7)
residues = st.integers(min_value=-50, max_value=50)


def test_rational_parse_format_round_trip():
    for text in ("0", "3", "-2/6", "5/4"):
        a = QQ.parse(text)
        assert QQ.parse(QQ.format(a)) == a
    assert QQ.parse("-2/6") == Fraction(-1, 3)
    assert QQ.format(Fraction(1, 2)) == "1/2"


def test_rational_coerce_is_strict():
    assert QQ.coerce(3) == Fraction(3)
    with pytest.raises(FieldMismatchError):
        QQ.coerce(0.5)
    with pytest.raises(FieldMismatchError):
        QQ.coerce(F7(3))


def test_prime_field_arithmetic():
    a, b = F7(3), F7(5)
    assert a + b == F7(1)
    assert a * b == F7(1)
    assert a - b == F7(5)
    assert a.inverse() == b
    assert a / b == F7(2)
    assert F7(7) == 0 and not F7(14)
    assert F7.parse("10") == F7(3)


@pytest.mark.parametrize("p", [2, 4, 9, 1])
def test_prime_field_rejects_bad_characteristic(p):
    with pytest.raises(ValueError):
        prime_field(p)


def test_characteristic_two_has_its_own_error():
    with pytest.raises(CharacteristicError):
        prime_field(2)


def test_mixed_fields_raise():
    with pytest.raises(FieldMismatchError):
        GF(1, 5) + GF(1, 7)
    with pytest.raises(FieldMismatchError):
        F7.coerce(GF(1, 5))


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F7(0).inverse()


def test_field_specs_and_json():
    assert field_from_spec("rational") is QQ
    assert field_from_spec("prime:11") is prime_field(11)
    assert field_from_json(QQ.to_json()) is QQ
    assert field_from_json(F7.to_json()) is F7
    with pytest.raises(ValueError):
        field_from_spec("real")


@given(residues, residues, residues)
def test_prime_field_axioms(a, b, c):
    x, y, z = F7(a), F7(b), F7(c)
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    if x:
        assert x * x.inverse() == 1


@given(st.fractions(max_denominator=20))
def test_rational_text_round_trip(q):
    assert QQ.parse(QQ.format(q)) == q
