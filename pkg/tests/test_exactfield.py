from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfbrace.exactfield import (
    BadFieldSpec, DivisionByZero, FieldMismatch, FieldSpec, Scalar, field_arith,
)

PRIMES = [2, 3, 5, 7, 11, 101, 7919]

fields = st.one_of(st.just(FieldSpec.rational()), st.sampled_from(PRIMES).map(FieldSpec.prime))
ints = st.integers(-10**6, 10**6)


def scalars(F):
    if F.p is None:
        return st.fractions(max_denominator=50).map(lambda x: Scalar(x, F))
    return ints.map(lambda x: Scalar(x, F))


@st.composite
def triples(draw):
    F = draw(fields)
    s = scalars(F)
    return F, draw(s), draw(s), draw(s)


@given(triples())
def test_ring_axioms(t):
    F, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + Scalar(0, F) == a
    assert a * Scalar(1, F) == a
    assert a - a == Scalar(0, F)
    assert -(-a) == a


@given(triples())
def test_inverses(t):
    F, a, b, _ = t
    if a:
        assert a * a.inv() == 1
        assert (b / a) * a == b
    else:
        with pytest.raises(DivisionByZero):
            a.inv()


@given(st.sampled_from(PRIMES), ints)
def test_prime_values_are_canonical_residues(p, x):
    F = FieldSpec.prime(p)
    v = F.norm(x)
    assert 0 <= v < p and (v - x) % p == 0


@given(st.fractions(max_denominator=1000))
def test_rational_norm_keeps_value(x):
    F = FieldSpec.rational()
    v = F.norm(x)
    assert v == x
    if x.denominator == 1:
        assert type(v) is int


def test_fraction_reduces_mod_p():
    F = FieldSpec.prime(5)
    assert F.norm(Fraction(1, 2)) == 3
    assert F.parse_scalar("1/2") == 3
    assert F.parse_scalar("-3") == 2
    with pytest.raises(DivisionByZero):
        F.parse_scalar("1/10")


def test_parse_scalar_rational():
    Q = FieldSpec.rational()
    assert Q.parse_scalar("6/4") == Fraction(3, 2)
    assert Q.parse_scalar("-7") == -7
    assert Q.parse_scalar(12) == 12
    for bad in ("1.5", "x", "1/0", ""):
        with pytest.raises((ValueError, DivisionByZero)):
            Q.parse_scalar(bad)


@pytest.mark.parametrize("text,p", [("q", None), ("rational", None), ("prime:5", 5), ("f7", 7),
                                    ("F_3", 3), ("GF(11)", 11)])
def test_field_names(text, p):
    assert FieldSpec.parse(text).p == p


@pytest.mark.parametrize("text", ["prime:4", "prime:1", "f0", "reals", "prime:"])
def test_bad_field_names(text):
    with pytest.raises(BadFieldSpec):
        FieldSpec.parse(text)


@given(fields)
def test_json_round_trip(F):
    assert FieldSpec.from_json(F.to_json()) == F


def test_characteristic_and_str():
    assert FieldSpec.rational().characteristic == 0
    assert FieldSpec.prime(7).characteristic == 7
    assert str(FieldSpec.prime(7)) == "F_7"
    assert str(FieldSpec.rational()) == "Q"


def test_mixed_fields_refuse():
    a = Scalar(1, FieldSpec.prime(3))
    b = Scalar(1, FieldSpec.prime(5))
    with pytest.raises(FieldMismatch):
        a + b
    with pytest.raises(FieldMismatch):
        field_arith(a, b, "mul")
    with pytest.raises(ValueError):
        field_arith(a, a, "pow")


def test_fermat():
    for p in PRIMES[:5]:
        F = FieldSpec.prime(p)
        for x in range(1, p):
            s = Scalar(1, F)
            for _ in range(p - 1):
                s = s * x
            assert s == 1


@given(triples())
def test_field_arith_matches_operators(t):
    F, a, b, _ = t
    assert field_arith(a, b, "add") == a + b
    assert field_arith(a, b, "sub") == a - b
    assert field_arith(a, b, "mul") == a * b
    assert field_arith(a, None, "neg") == -a
    assert field_arith(a, b, "eq") == (a == b)
