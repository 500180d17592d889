"""Relation families, ideal pieces and the supporting identities."""

import pytest

from principal_subspaces.linalg import span_equal, subspace_leq
from principal_subspaces.poly import (
    Monomial,
    PolyQ,
    coordinates,
    drop_minus_one_terms,
    enumerate_monomials,
    translate,
    x,
)
from principal_subspaces.relations import (
    check_derive_relation,
    check_lift_identity,
    check_translate_ideal_inclusion,
    check_translate_relation,
    ideal_piece,
    quadratic_relation,
)


def build_by_ordered_pairs(t, floor):
    """Independent oracle: literally sum over ordered pairs."""
    total = PolyQ.zero()
    m1 = floor
    while -t - m1 <= floor:
        total = total + x(m1) * x(-t - m1)
        m1 -= 1
    return total


def test_relation_minimal_cases():
    assert quadratic_relation(2, -1) == x(-1) * x(-1)
    assert quadratic_relation(4, -2) == x(-2) * x(-2)


def test_relation_matches_ordered_pair_oracle():
    for floor in (-1, -2):
        for t in range(-2 * floor, 16):
            assert quadratic_relation(t, floor) == build_by_ordered_pairs(t, floor)


def test_relation_frozen_weight_four():
    rel = quadratic_relation(4, -1)
    assert rel.terms == {
        Monomial((-3, -1)): 2,
        Monomial((-2, -2)): 1,
    }


def test_relation_rejects_bad_arguments():
    with pytest.raises(ValueError):
        quadratic_relation(1, -1)
    with pytest.raises(ValueError):
        quadratic_relation(3, -2)
    with pytest.raises(ValueError):
        quadratic_relation(4, -3)


def test_relation_bidegree_and_coefficient_pattern():
    for floor in (-1, -2):
        for t in range(-2 * floor, 21):
            rel = quadratic_relation(t, floor)
            assert rel.bidegree() == (t, 2)
            for mono, coeff in rel.terms.items():
                m1, m2 = mono.indices
                assert coeff == (1 if m1 == m2 else 2)


def test_projection_sends_floor1_family_to_floor2_family():
    for t in range(4, 21):
        assert drop_minus_one_terms(quadratic_relation(t, -1)) == quadratic_relation(t, -2)


def test_ideal_piece_examples():
    assert ideal_piece("lambda0", 2, 2) == [x(-1) * x(-1)]
    assert ideal_piece("lambda0", 4, 2) == [quadratic_relation(4, -1)]
    assert ideal_piece("lambda1prime", 4, 2) == [x(-2) * x(-2)]


def test_ideal_piece_charge_zero_or_negative_weight_empty():
    assert ideal_piece("lambda0", 5, 0) == []
    assert ideal_piece("lambda1", 0, 0) == []


def test_lambda1_piece_includes_degree_one_generator():
    piece = ideal_piece("lambda1", 1, 1)
    assert piece == [x(-1)]


def test_ideal_pieces_are_bihomogeneous():
    for tag in ("lambda0", "lambda1", "lambda1prime"):
        for weight in range(0, 9):
            for charge in range(1, weight + 1):
                for element in ideal_piece(tag, weight, charge):
                    assert element.bidegree() == (weight, charge)


def test_translate_relation_identity():
    # t = 2: the shift of x(-1)^2 is x(-2)^2, and the identity rearranges it
    assert translate(quadratic_relation(2, -1), 1) == x(-2) * x(-2)
    for t in range(2, 21):
        assert check_translate_relation(t)


def test_lift_identity_weight_four_expansion():
    # expand both sides by hand at t = 4
    lhs = x(-3) * x(-3) * x(-1)
    rhs = (
        quadratic_relation(6, -1) * x(-1)
        - x(-4) * (2 * (x(-2) * x(-1)))
        - 2 * (x(-5) * (x(-1) * x(-1)))
    )
    assert lhs == rhs
    for t in range(4, 21):
        assert check_lift_identity(t)


def test_derive_relation_identity():
    for t in range(2, 21):
        assert check_derive_relation(t)


def test_translate_ideal_inclusion_examples():
    assert check_translate_ideal_inclusion(2, 2)
    assert check_translate_ideal_inclusion(3, 2)
    assert check_translate_ideal_inclusion(5, 3)


def test_translate_ideal_inclusion_sweep():
    for weight in range(0, 9):
        for charge in range(0, weight + 1):
            assert check_translate_ideal_inclusion(weight, charge)


def test_translated_lambda0_piece_spans_lambda1prime_piece():
    """After projecting away x(-1) terms (a no-op here, since every shifted
    index is <= -2) the translated piece spans exactly the floor -2 ideal
    piece at the shifted bidegree."""
    for weight in range(2, 9):
        for charge in range(2, weight + 1):
            source = ideal_piece("lambda0", weight, charge)
            if not source:
                continue
            basis = enumerate_monomials(weight + charge, charge, -1)
            shifted = [
                coordinates(drop_minus_one_terms(translate(p, 1)), basis)
                for p in source
            ]
            target = [
                coordinates(q, basis)
                for q in ideal_piece("lambda1prime", weight + charge, charge)
            ]
            assert span_equal(shifted, target)


def test_lift_composition_closes():
    """Shifting down then up returns any x(-1)-multiple unchanged, which is
    what chains the two lifting maps together."""
    for b in (x(-3), x(-4) * x(-3), x(-5) * x(-3) * x(-3)):
        assert translate(translate(b, -1), 1) * x(-1) == b * x(-1)
