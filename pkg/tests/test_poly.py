"""Polynomial algebra, bigrading and the structural maps."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from principal_subspaces.poly import (
    Monomial,
    PolyQ,
    coordinates,
    derive,
    drop_minus_one_terms,
    enumerate_monomials,
    translate,
    x,
)

monomials = st.builds(
    Monomial, st.lists(st.integers(min_value=-6, max_value=4), max_size=4)
)
polys = st.builds(
    PolyQ,
    st.lists(
        st.tuples(monomials, st.integers(min_value=-4, max_value=4)), max_size=4
    ),
)


def test_unit_is_identity():
    p = x(-1) + 2 * x(-2)
    assert PolyQ.one() * p == p


def test_square_of_generator():
    assert x(-1) * x(-1) == PolyQ({Monomial((-1, -1)): 1})


def test_product_distributes():
    # (x(-1) + x(-2)) * x(-1), distributed by hand
    lhs = (x(-1) + x(-2)) * x(-1)
    rhs = PolyQ({Monomial((-1, -1)): 1, Monomial((-2, -1)): 1})
    assert lhs == rhs


def test_monomial_gradings():
    mono = Monomial((-3, -1, -1))
    assert mono.weight == 5
    assert mono.charge == 3
    assert Monomial(()).weight == 0
    assert Monomial(()).charge == 0


@settings(deadline=None, max_examples=60)
@given(monomials, monomials)
def test_bigrading_additive_under_product(a, b):
    prod = a * b
    assert prod.weight == a.weight + b.weight
    assert prod.charge == a.charge + b.charge


def test_translate_examples():
    assert translate(x(-1) * x(-1), 1) == x(-2) * x(-2)
    p = x(-1) + 3 * x(-4)
    assert translate(p, 0) == p
    assert translate(x(-2) * x(-3), -1) == x(-1) * x(-2)


@settings(deadline=None, max_examples=60)
@given(polys, st.integers(-3, 3), st.integers(-3, 3))
def test_translate_composes(p, s, t):
    assert translate(translate(p, s), t) == translate(p, s + t)


@settings(deadline=None, max_examples=60)
@given(monomials, st.integers(-3, 3))
def test_translate_weight_shift(mono, s):
    shifted = translate(PolyQ({mono: 1}), s)
    (target,) = shifted.terms
    assert target.charge == mono.charge
    assert target.weight == mono.weight + mono.charge * s
    if mono.charge == 0:
        assert target == mono
    elif s > 0:
        assert target.weight > mono.weight


def test_projection_kills_minus_one_terms():
    assert drop_minus_one_terms(x(-1) * x(-1)) == PolyQ.zero()
    r40 = 2 * (x(-3) * x(-1)) + x(-2) * x(-2)
    assert drop_minus_one_terms(r40) == x(-2) * x(-2)
    fixed = x(-2) * x(-3)
    assert drop_minus_one_terms(fixed) == fixed


def test_projection_is_idempotent():
    p = 2 * (x(-3) * x(-1)) + x(-2) * x(-2) + 5 * x(-1)
    once = drop_minus_one_terms(p)
    assert drop_minus_one_terms(once) == once


def test_projection_rejects_nonnegative_indices():
    with pytest.raises(ValueError):
        drop_minus_one_terms(x(0) * x(-2))


def test_derive_examples():
    assert derive(x(-1)) == x(-2)
    assert derive(PolyQ.one()) == PolyQ.zero()
    assert derive(x(-1) * x(-1)) == 2 * (x(-2) * x(-1))


@settings(deadline=None, max_examples=60)
@given(polys, polys)
def test_derive_satisfies_leibniz(a, b):
    assert derive(a * b) == derive(a) * b + a * derive(b)


@settings(deadline=None, max_examples=60)
@given(monomials)
def test_derive_raises_weight_preserves_charge(mono):
    image = derive(PolyQ({mono: 1}))
    for target in image.terms:
        assert target.weight == mono.weight + 1
        assert target.charge == mono.charge


def test_enumerate_monomials_examples():
    assert enumerate_monomials(4, 2, -1) == [Monomial((-3, -1)), Monomial((-2, -2))]
    assert enumerate_monomials(2, 2, -2) == []
    assert enumerate_monomials(0, 0, -1) == [Monomial(())]
    assert enumerate_monomials(0, 0, -5) == [Monomial(())]


def test_enumerate_monomials_rejects_bad_floor():
    with pytest.raises(ValueError):
        enumerate_monomials(3, 1, 0)


def count_partitions_exact(n, k, min_part):
    """Independent recursive counter: partitions of n into exactly k parts,
    each >= min_part."""
    if k == 0:
        return 1 if n == 0 else 0
    if n < k * min_part:
        return 0
    # smallest part equals min_part, or all parts exceed it (shift each down 1)
    return count_partitions_exact(n - min_part, k - 1, min_part) + count_partitions_exact(
        n - k, k, min_part
    )


def test_enumeration_count_matches_recursive_counter():
    for floor in (-1, -2, -3):
        for weight in range(0, 13):
            for charge in range(0, 7):
                got = len(enumerate_monomials(weight, charge, floor))
                assert got == count_partitions_exact(weight, charge, -floor)


def test_enumeration_is_canonically_ordered_and_on_degree():
    for weight in range(0, 10):
        for charge in range(0, 5):
            monos = enumerate_monomials(weight, charge, -1)
            assert monos == sorted(monos)
            for mono in monos:
                assert mono.weight == weight
                assert mono.charge == charge
                assert all(idx <= -1 for idx in mono.indices)


def test_rendering():
    r40 = 2 * (x(-3) * x(-1)) + x(-2) * x(-2)
    assert str(r40) == "2*x(-3)*x(-1) + x(-2)^2"
    assert str(PolyQ.zero()) == "0"
    assert str(x(-2) * x(-2) - 2 * (x(-3) * x(-1))) == "-2*x(-3)*x(-1) + x(-2)^2"
    assert str(Fraction(1, 2) * x(-1)) == "1/2*x(-1)"
    assert str(PolyQ.one() * 3) == "3"


def test_coordinates_roundtrip():
    basis = enumerate_monomials(4, 2, -1)
    r40 = 2 * (x(-3) * x(-1)) + x(-2) * x(-2)
    assert coordinates(r40, basis) == [Fraction(2), Fraction(1)]
    with pytest.raises(ValueError):
        coordinates(x(-4), basis)


def test_bidegree():
    assert (x(-3) * x(-1)).bidegree() == (4, 2)
    with pytest.raises(ValueError):
        PolyQ.zero().bidegree()
    with pytest.raises(ValueError):
        (x(-1) + x(-2)).bidegree()
