from fractions import Fraction

import pytest

from geninv import (GF, QI, QQ, FieldMismatchError, Lcg, ParseError, Scalar,
                    format_scalar, parse_scalar)
from support import FIELDS


def test_parse_literals():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse("-7") == Fraction(-7)
    assert QI.parse("2-4i") == (Fraction(2), Fraction(-4))
    assert QI.parse("19-4i") == (Fraction(19), Fraction(-4))
    assert QI.parse("i") == (Fraction(0), Fraction(1))
    assert QI.parse("-i") == (Fraction(0), Fraction(-1))
    assert QI.parse("-2/3i") == (Fraction(0), Fraction(-2, 3))
    assert QI.parse("1/2+1/3i") == (Fraction(1, 2), Fraction(1, 3))
    assert QI.parse(" 2 - 4 i ") == (Fraction(2), Fraction(-4))
    assert GF(7).parse("9") == 2
    assert GF(7).parse("14") == 0


def test_parse_rejects_garbage():
    for field, text in [(QQ, "1.5"), (QQ, "1/0"), (QQ, ""), (QQ, "2+i"),
                        (QI, "2+"), (QI, "1//2i"), (GF(7), "-3"), (GF(7), "a")]:
        with pytest.raises(ParseError):
            field.parse(text)


def test_modulus_must_be_prime():
    with pytest.raises(ParseError):
        GF(6)
    with pytest.raises(ParseError):
        GF(1)
    GF(2)
    GF(97)


def test_round_trip_format_parse():
    rng = Lcg(11)
    for field in FIELDS:
        for _ in range(300):
            a = field.sample(rng)
            assert field.parse(field.format(a)) == a


def test_field_op_examples():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    i = QI.parse("i")
    assert QI.mul(i, i) == QI.from_int(-1)
    assert GF(7).inv(3) == 5


def test_field_axioms_random_triples():
    rng = Lcg(2024)
    for field in FIELDS:
        one = field.one()
        for _ in range(1000):
            a, b, c = (field.sample(rng) for _ in range(3))
            assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
            assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)
            assert field.mul(a, field.add(b, c)) == \
                field.add(field.mul(a, b), field.mul(a, c))
            if a != field.zero():
                assert field.mul(a, field.inv(a)) == one


def test_division_by_zero_rejected():
    for field in FIELDS:
        with pytest.raises(ZeroDivisionError):
            field.inv(field.zero())


def test_scalar_wrapper_and_mismatch():
    a = parse_scalar("1/2", QQ)
    b = parse_scalar("1/3", QQ)
    assert format_scalar(a + b) == "5/6"
    assert (a / b) == Scalar(QQ, Fraction(3, 2))
    c = parse_scalar("2", GF(5))
    with pytest.raises(FieldMismatchError):
        a + c


def test_gaussian_formatting():
    cases = ["0", "1", "-1", "i", "-i", "2-4i", "3i", "1/2+1/3i", "-5/7-i"]
    for text in cases:
        assert QI.format(QI.parse(text)) == text


def test_finite_field_elements():
    assert list(GF(3).elements()) == [0, 1, 2]
    with pytest.raises(Exception):
        QQ.elements()
