from fractions import Fraction

import pytest

from jointres import GF, QQ, PrimeField, ValidationError
from jointres.errors import ParseError


def test_rational_basics():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(3, 4)) == Fraction(4, 3)
    assert QQ.parse("-7/3") == Fraction(-7, 3)
    assert QQ.fmt(Fraction(5, 2)) == "5/2"
    assert QQ.is_zero(Fraction(0))


def test_rational_parse_rejects_garbage():
    with pytest.raises(ParseError):
        QQ.parse("1/0")
    with pytest.raises(ParseError):
        QQ.parse("two")


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F.parse("10/3") == F.div(3, 3)
    assert F.parse("-1") == 6


def test_prime_field_rejects_composites():
    for bad in (0, 1, 4, 9, 561, 1 << 61):
        with pytest.raises(ValidationError):
            PrimeField(bad)


def test_gf_cache_and_equality():
    assert GF(5) is GF(5)
    assert GF(5) == PrimeField(5)
    assert GF(5) != GF(7)
    assert GF(5) != QQ


def test_large_prime_accepted():
    p = (1 << 61) - 1  # Mersenne prime
    F = GF(p)
    assert F.mul(p - 1, p - 1) == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
