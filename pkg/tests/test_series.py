from fractions import Fraction

import pytest

from algebra.laurent import LaurentScalar
from algebra.series import MultiSeries, TruncatedSeries, constant_series, exp_series, shift_monomial
from combinatorics.partitions import EMPTY
from common.errors import InvalidInputError


def test_monomials_beyond_bound_are_dropped(P):
    series = TruncatedSeries(2, {P(1): 1, P(2, 1): 5})
    assert len(series) == 1
    assert series.coefficient(P(2, 1)).is_zero()


def test_negative_bound_rejected():
    with pytest.raises(InvalidInputError):
        TruncatedSeries(-1)


def test_arithmetic(P):
    a = TruncatedSeries(3, {P(1): 1, P(2): 2})
    b = TruncatedSeries(3, {P(1): -1})
    assert (a + b) == TruncatedSeries(3, {P(2): 2})
    assert (a - a).is_zero()
    product = a * a
    assert product.coefficient(P(1, 1)) == LaurentScalar.constant(1)
    assert product.coefficient(P(2, 1)) == LaurentScalar.constant(4)
    assert product.coefficient(P(2, 2)).is_zero()


def test_bound_mismatch(P):
    with pytest.raises(InvalidInputError):
        TruncatedSeries(2, {P(1): 1}) + TruncatedSeries(3, {P(1): 1})


def test_shift_monomial(P):
    assert shift_monomial(P(2), Fraction(1)) == [(P(2), 1)]
    expansion = dict(shift_monomial(P(2, 1, 1), Fraction(1)))
    assert expansion == {P(2, 1, 1): 1, P(2, 1): 2, P(2): 1}


def test_shift_p1_is_invertible(P):
    series = TruncatedSeries(3, {P(1, 1, 1): 1, P(2, 1): LaurentScalar.monomial(-1, 3)})
    assert series.shift_p1(Fraction(1)).shift_p1(Fraction(-1)) == series
    shifted = TruncatedSeries(2, {P(1, 1): 1}).shift_p1(Fraction(1))
    assert shifted == TruncatedSeries(2, {P(1, 1): 1, P(1): 2, EMPTY: 1})


def test_degree_part_and_to_dict(P):
    series = TruncatedSeries(3, {P(1): 1, P(2): LaurentScalar.monomial(-2, Fraction(1, 2)), P(1, 1): 3})
    assert len(series.degree_part(2)) == 2
    assert series.to_dict()[0] == {'partition': '[1]', 'z_exp': 0, 'coeff': '1'}
    assert series.to_dict()[1] == {'partition': '[2]', 'z_exp': -2, 'coeff': '1/2'}


def test_multiseries_truncation(P):
    series = MultiSeries(('u',), 1, 2, 1)
    series.add_term(((2,), (P(1),)), LaurentScalar.constant(1))
    series.add_term(((1,), (P(3),)), LaurentScalar.constant(1))
    series.add_term(((1,), (P(2),)), LaurentScalar.constant(1))
    assert len(series) == 1
    with pytest.raises(InvalidInputError):
        series.add_term(((1, 0), (P(1),)), LaurentScalar.constant(1))


def test_multiseries_families_must_be_one_or_two():
    with pytest.raises(InvalidInputError):
        MultiSeries((), 3, 2, 0)


def test_u_operations(P):
    series = MultiSeries(('u', 'v'), 1, 2, 2)
    series.add_term(((1, 0), (P(1),)), LaurentScalar.constant(3))
    series.add_term(((1, 1), (P(2),)), LaurentScalar.constant(2))
    derivative = series.u_derivative('u')
    assert derivative.u_bound == 1
    assert derivative.coefficient((0, 0), (P(1),)) == LaurentScalar.constant(3)
    assert derivative.coefficient((0, 1), (P(2),)) == LaurentScalar.constant(2)
    raised = series.times_u('v')
    assert len(raised) == 1
    assert raised.coefficient((1, 1), (P(1),)) == LaurentScalar.constant(3)
    with pytest.raises(InvalidInputError):
        series.u_derivative('w')


def test_with_u_names_and_bound(P):
    base = MultiSeries((), 1, 2, 0, {((), (P(2),)): LaurentScalar.constant(1)})
    lifted = base.with_u_names(('u',), 3)
    assert lifted.coefficient((0,), (P(2),)) == LaurentScalar.constant(1)
    assert base.with_bound(1).is_zero()
    with pytest.raises(InvalidInputError):
        lifted.with_u_names(('v',), 1)


def test_p_slices_round_trip(P):
    series = MultiSeries(('u',), 2, 2, 1)
    series.add_term(((0,), (P(1), P(2))), LaurentScalar.constant(1))
    series.add_term(((0,), (P(1), P(1))), LaurentScalar.constant(2))
    series.add_term(((1,), (EMPTY, P(1))), LaurentScalar.constant(5))
    slices = series.p_slices()
    assert set(slices) == {((0,), (P(1),)), ((1,), (EMPTY,))}
    assert MultiSeries.from_p_slices(series, slices.items()) == series


def test_exp_series_of_p1(P):
    exponent = MultiSeries((), 1, 3, 0, {((), (P(1),)): LaurentScalar.constant(1)})
    result = exp_series(exponent)
    assert result.coefficient((), (EMPTY,)) == LaurentScalar.constant(1)
    assert result.coefficient((), (P(1, 1),)) == LaurentScalar.constant(Fraction(1, 2))
    assert result.coefficient((), (P(1, 1, 1),)) == LaurentScalar.constant(Fraction(1, 6))


def test_exp_series_rejects_constant_term():
    with pytest.raises(InvalidInputError):
        exp_series(constant_series((), 1, 2, 0))
