from fractions import Fraction

import pytest

from combinatorics.group_algebra import (
    class_decomposition,
    class_sum,
    commutator_element,
    cycle_type,
    factorization_count,
    group_elements,
    identity,
    multiply,
    psi_element,
    psi_image,
    psi_product,
)
from combinatorics.partial_perm import ClassVector, structure_constants
from common.errors import InvalidInputError


def test_group_elements_and_cycle_types(P):
    assert len(group_elements(4)) == 24
    assert len(group_elements(0)) == 1
    types = {cycle_type(perm) for perm in group_elements(3)}
    assert types == {P(1, 1, 1), P(2, 1), P(3)}


def test_class_sums_multiply_like_classes(P):
    square = multiply(class_sum(P(2), 3), class_sum(P(2), 3))
    vector = class_decomposition(square, 3)
    assert vector == ClassVector.from_mapping({P(1, 1, 1): 3, P(3): 3})


def test_identity_is_neutral(P):
    element = class_sum(P(3), 3)
    assert multiply(identity(3), element) == element


def test_psi_element_scaling(P):
    assert set(psi_element(P(1), 3).values()) == {Fraction(3)}
    assert psi_element(P(4), 3) == {}


@pytest.mark.parametrize("left,right,n", [((1,), (2,), 3), ((2,), (2,), 4), ((2,), (1, 1), 4), ((3,), (2,), 5)])
def test_psi_is_a_homomorphism(P, left, right, n):
    constants = structure_constants(P(*left), P(*right))
    assert psi_product(P(*left), P(*right), n) == psi_image(constants, n)


def test_commutator_sums(P):
    assert commutator_element(2) == {(0, 1): Fraction(4)}
    element = commutator_element(3)
    assert element[(0, 1, 2)] == 18
    assert sum(element.values()) == 36
    with pytest.raises(InvalidInputError):
        commutator_element(6)


def test_factorization_count_limits(P):
    with pytest.raises(InvalidInputError):
        factorization_count(2, 2, ())
    assert factorization_count(0, 2, (P(3),)) == 0
    assert factorization_count(0, 2, (P(2), P(2))) == Fraction(1, 2)
