import pytest
from hypothesis import given, strategies as st

from multcode.field import PrimeField, add, egcd_inverse, inv, is_prime, mul, neg, sub

GF2, GF5, GF7, GF13 = PrimeField(2), PrimeField(5), PrimeField(7), PrimeField(13)
BIG = PrimeField((1 << 61) - 1)


def test_add_wraps_mod_7():
    assert add(GF7(3), GF7(5)) == GF7(1)


def test_mul_mod_7():
    assert mul(GF7(3), GF7(5)) == GF7(1)


def test_char_two_addition():
    assert GF2(1) + GF2(1) == GF2(0)


def test_sub_and_neg():
    assert sub(GF7(2), GF7(5)) == GF7(4)
    assert neg(GF7(3)) == GF7(4)
    assert -GF7(0) == GF7(0)


@pytest.mark.parametrize("field, a, expected", [(GF7, 3, 5), (GF5, 4, 4), (GF13, 1, 1)])
def test_inverse_examples(field, a, expected):
    assert inv(field(a)) == field(expected)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        inv(GF7(0))
    with pytest.raises(ZeroDivisionError):
        GF7(3) / 0


def test_mixed_fields_rejected():
    with pytest.raises(TypeError):
        GF5(1) + GF7(1)


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 561, 1 << 62, 2.0])
def test_field_rejects_bad_modulus(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)


def test_primality_against_trial_division():
    def slow(n):
        return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if slow(n)]
    assert is_prime((1 << 61) - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_ints_coerce_and_canonical_form():
    x = GF13(20)
    assert x.value == 7
    assert (x + 10).value == 4 and (10 - x).value == 3 and int(x * 2) == 1
    assert GF13(2) ** -1 == GF13(7)


elems = st.integers(min_value=0, max_value=BIG.p - 1)


@given(elems, elems, elems)
def test_ring_axioms_large_prime(a, b, c):
    x, y, z = BIG(a), BIG(b), BIG(c)
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(st.integers(min_value=1, max_value=BIG.p - 1))
def test_inverse_property(a):
    assert BIG(a) * inv(BIG(a)) == BIG.one
    assert egcd_inverse(a, BIG.p) == pow(a, -1, BIG.p)
