from fractions import Fraction

import pytest

from combinatorics.partial_perm import (
    IDENTITY,
    ClassVector,
    PartialPermutation,
    class_count,
    class_elements,
    class_of,
    class_representative,
    count_Pn,
    enumerate_partial_permutations,
    pp_multiply,
    psi_coefficient,
    structure_constants,
    theta_project,
)
from combinatorics.partitions import EMPTY
from common.errors import InvalidInputError


def vector(mapping):
    return ClassVector.from_mapping({k: Fraction(v) for k, v in mapping.items()})


def test_bijection_check():
    with pytest.raises(InvalidInputError):
        PartialPermutation(((1, 2), (2, 2)))
    with pytest.raises(InvalidInputError):
        PartialPermutation(((1, 3),))
    with pytest.raises(InvalidInputError):
        PartialPermutation.from_cycles({1, 2}, (1, 3))


def test_multiplication_unions_supports(P):
    a = PartialPermutation.from_cycles({1, 2}, (1, 2))
    b = PartialPermutation.from_cycles({2, 3}, (2, 3))
    product = pp_multiply(a, b)
    assert product.support == frozenset({1, 2, 3})
    assert product(3) == 1
    assert product(2) == 3
    assert class_of(product) == P(3)
    assert a * IDENTITY == a


def test_fixed_points_count_in_class(P):
    x = PartialPermutation.from_cycles({1, 2, 4}, (1, 2))
    assert class_of(x) == P(2, 1)
    assert x.degree == 3
    assert class_of(IDENTITY) == EMPTY


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 2), (2, 5), (3, 16), (4, 65)])
def test_count_Pn(n, expected):
    assert count_Pn(n) == expected
    if n <= 3:
        assert sum(1 for _ in enumerate_partial_permutations(n)) == expected


def test_class_counts(P):
    assert class_count(P(2), 3) == 3
    assert class_count(P(1, 1), 3) == 3
    assert class_count(P(3), 4) == 8
    assert class_count(P(3), 2) == 0
    assert len(class_elements(P(2, 1), 3)) == class_count(P(2, 1), 3)
    assert class_elements(P(3), 2) == []


def test_representative(P):
    rep = class_representative(P(3, 1))
    assert rep.support == frozenset({1, 2, 3, 4})
    assert class_of(rep) == P(3, 1)


@pytest.mark.parametrize("left,right,expected", [
    ((1,), (1,), {(1,): 1, (1, 1): 2}),
    ((1,), (2,), {(2,): 2, (2, 1): 1}),
    ((1,), (1, 1), {(1, 1): 2, (1, 1, 1): 3}),
    ((2,), (2,), {(1, 1): 1, (3,): 3, (2, 2): 2}),
])
def test_structure_constants(P, left, right, expected):
    found = structure_constants(P(*left), P(*right))
    assert found == vector({P(*k): v for k, v in expected.items()})


def test_structure_constants_are_stable(P):
    assert structure_constants(P(2), P(2), 4) == structure_constants(P(2), P(2), 6, threads=2)


def test_structure_constants_reject_small_degree(P):
    with pytest.raises(InvalidInputError):
        structure_constants(P(2), P(2), 3)


def test_class_vector_algebra(P):
    a = vector({P(1): 1, P(2): 2})
    b = vector({P(1): -1, P(3): 1})
    assert a + b == vector({P(2): 2, P(3): 1})
    assert a.scale(Fraction(1, 2)).coefficient(P(2)) == 1
    assert theta_project(a + b, 2) == vector({P(2): 2})
    assert a.to_dict() == [{'partition': '[1]', 'coeff': '1'}, {'partition': '[2]', 'coeff': '2'}]
    assert str(ClassVector()) == "0"


def test_psi_coefficient(P):
    assert psi_coefficient(P(1), 4) == 4
    assert psi_coefficient(P(2, 1, 1), 5) == 3
    assert psi_coefficient(P(3), 2) == 0
