import pytest
from hypothesis import given, settings, strategies as st

from hierdepth.errors import CompositeModulus, DivisionByZero, ReducibleModulus, SpecMismatch
from hierdepth.gf import (
    FieldSpec,
    default_modulus,
    element_from_json,
    enumerate_field,
    is_irreducible,
    is_prime,
    square_roots,
)

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2)]


def egcd_inverse(a, p):
    # extended Euclid, independent of the Fermat inverse in the library
    r0, r1, s0, s1 = p, a % p, 0, 1
    while r1:
        q = r0 // r1
        r0, r1, s0, s1 = r1, r0 - q * r1, s1, s0 - q * s1
    return s0 % p


def test_prime_field_values():
    F = FieldSpec(5)
    assert F(3) + F(4) == F(2)
    assert F(2) * F(3) == F(1)
    assert F(2).inv() == F(3)
    assert F(0) - F(1) == F(4)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 101])
def test_inverse_matches_extended_euclid(p):
    F = FieldSpec(p)
    for a in range(1, p):
        assert F(a).inv().index == egcd_inverse(a, p)


def test_gf4_and_gf9():
    F4 = FieldSpec(2, 2)
    a = F4.gen
    assert [e.index for e in enumerate_field(F4)] == [0, 1, 2, 3]
    assert a * a == a + 1
    F9 = FieldSpec(3, 2)
    assert F9.modulus == (1, 0, 1)
    assert F9.gen.inv() == 2 * F9.gen


def test_default_moduli():
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(5, 2) == (2, 0, 1)
    assert is_irreducible((1, 1, 0, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)


def test_bad_specs():
    with pytest.raises(CompositeModulus):
        FieldSpec(6)
    with pytest.raises(ReducibleModulus):
        FieldSpec(2, 2, (1, 0, 1))
    with pytest.raises(DivisionByZero):
        FieldSpec(7)(0).inv()
    with pytest.raises(SpecMismatch):
        FieldSpec(5)(1) + FieldSpec(7)(1)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, k):
    F = FieldSpec(p, k)
    els = enumerate_field(F)
    assert len(els) == p**k == len(set(els))
    for x in els:
        assert x + F.zero == x and x * F.one == x
        assert x + (-x) == F.zero
        if not x.is_zero():
            assert x * x.inv() == F.one
            assert x ** (F.q - 1) == F.one
        # Frobenius is additive
        for y in els[:6]:
            assert (x + y) ** p == x**p + y**p


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_tables_match_scalar_ops(p, k):
    F = FieldSpec(p, k)
    add, mul = F.tables()
    els = enumerate_field(F)
    for x in els:
        for y in els:
            assert add[x.index, y.index] == (x + y).index
            assert mul[x.index, y.index] == (x * y).index


def test_square_roots_gf5():
    roots = square_roots(FieldSpec(5))
    assert sorted(r.index for r in roots[FieldSpec(5)(4)]) == [2, 3]
    assert roots.get(FieldSpec(5)(2), []) == []


@pytest.mark.parametrize("p,k", [(5, 1), (3, 2)])
def test_json_round_trip(p, k):
    F = FieldSpec(p, k)
    assert FieldSpec.from_json(F.to_json()) == F
    for x in enumerate_field(F):
        assert element_from_json(F, x.to_json()) == x


field_and_elements = st.sampled_from(SMALL_FIELDS).flatmap(
    lambda pk: st.tuples(
        st.just(FieldSpec(*pk)),
        st.integers(0, pk[0] ** pk[1] - 1),
        st.integers(0, pk[0] ** pk[1] - 1),
        st.integers(0, pk[0] ** pk[1] - 1),
    )
)


@settings(max_examples=300, deadline=None)
@given(field_and_elements)
def test_ring_laws(data):
    F, i, j, l = data
    a, b, c = F.from_index(i), F.from_index(j), F.from_index(l)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not b.is_zero():
        assert (a / b) * b == a
