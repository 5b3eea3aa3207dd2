from fractions import Fraction

import pytest

from algebra.laurent import LaurentScalar
from combinatorics.partitions import EMPTY, Partition
from common.errors import InvalidInputError
from genfun.closed_forms import (
    phi0_closed,
    phi0_exponential,
    phi0_first_line,
    phi0_two_family,
    two_family_exponential,
)
from genfun.comparisons import closed_form_reports, compare_series, displayed_terms_expected, displayed_terms_report
from genfun.generating import (
    InsertionSpec,
    differential_equation,
    path_independence,
    phi_degree_slice,
    phi_direct,
    phi_exp_action,
    phi_exp_literal,
    u_vectors,
)

NO_INSERTIONS = InsertionSpec()


def single(delta, name='u'):
    return InsertionSpec(((name, Partition(delta)),))


def test_insertion_parsing(P):
    spec = InsertionSpec.parse(["u=[2,1]", "v = (2)"])
    assert spec.names == ('u', 'v')
    assert spec.deltas == (P(2, 1), P(2))
    assert spec.reversed().names == ('v', 'u')
    assert spec.to_dict() == [{'name': 'u', 'delta': '[2,1]'}, {'name': 'v', 'delta': '[2]'}]


@pytest.mark.parametrize("items", [["u=[]"], ["u=[2]", "u=[1]"], ["[2]"], ["1u=[2]"]])
def test_insertion_errors(items):
    with pytest.raises(InvalidInputError):
        InsertionSpec.parse(items)


def test_u_vectors():
    assert u_vectors(0, 3) == [()]
    assert len(u_vectors(2, 2)) == 6
    assert all(sum(v) <= 3 for v in u_vectors(3, 3))


def test_initial_value_low_degree(P):
    series = phi_direct(0, NO_INSERTIONS, 1, 0)
    assert series.coefficient((), (EMPTY,)) == LaurentScalar.from_mapping({0: 1, -2: 1})
    assert series.coefficient((), (P(1),)) == LaurentScalar.monomial(-2, 1)
    assert len(series) == 2


def test_initial_value_constant_term():
    series = phi_direct(0, NO_INSERTIONS, 3, 0)
    expected = LaurentScalar.from_mapping({0: 1, -2: 1, -4: Fraction(1, 2), -6: Fraction(1, 6)})
    assert series.coefficient((), (EMPTY,)) == expected


def test_genus_one_has_no_dimension_weight():
    series = phi_direct(1, NO_INSERTIONS, 2, 0)
    assert series.coefficient((), (EMPTY,)) == LaurentScalar.constant(1 + 1 + 2)


def test_negative_genus_rejected():
    with pytest.raises(InvalidInputError):
        phi_direct(-1, NO_INSERTIONS, 2, 0)


@pytest.mark.parametrize("bound", [1, 2, 3])
def test_closed_forms_match_character_sum(bound):
    direct = phi_direct(0, NO_INSERTIONS, bound, 0)
    assert phi0_closed(bound) == direct
    assert phi0_exponential(bound) == direct


def test_literal_first_line_differs():
    assert phi0_first_line(1).coefficient((), (EMPTY,)) == LaurentScalar.constant(2)
    assert phi0_first_line(1) != phi0_closed(1)


def test_two_family_low_degree(P):
    series = phi0_two_family(1)
    assert series.coefficient((), (P(1), P(1))) == LaurentScalar.monomial(-2, 1)
    assert series.coefficient((), (EMPTY, EMPTY)) == LaurentScalar.from_mapping({0: 1, -2: 1})
    assert series == phi_direct(0, NO_INSERTIONS, 1, 0, two_family=True)


@pytest.mark.parametrize("bound", [2, 3])
def test_two_family_closed_form_needs_inverse_m(P, bound):
    series = phi0_two_family(bound)
    assert series == phi_direct(0, NO_INSERTIONS, bound, 0, two_family=True)
    assert two_family_exponential(bound, inverse_m=True) == series
    without = two_family_exponential(bound, inverse_m=False)
    assert without != series
    assert series.coefficient((), (P(2), P(2))).coefficient(-2) == Fraction(1, 2)


def test_closed_form_reports_hard_entries_hold():
    reports = closed_form_reports(2)
    assert all(entry['holds'] for entry in reports if entry['hard'])
    by_name = {entry['name']: entry for entry in reports}
    assert not by_name["literal first line vs initial value"]['holds']
    assert not by_name["two-family initial value vs exponential without 1/m"]['holds']


@pytest.mark.parametrize("g,delta,bound,u_bound", [
    (0, (2,), 3, 3),
    (0, (2, 1), 3, 3),
    (0, (1, 1), 3, 2),
    (1, (2,), 2, 2),
])
def test_path_independence(g, delta, bound, u_bound):
    outcome = path_independence(g, single(delta), bound, u_bound)
    assert outcome['holds'], outcome['differences'][:3]
    assert outcome['insertions'] == [{'name': 'u', 'delta': str(Partition(delta))}]


def test_differential_equation():
    insertions = InsertionSpec.parse(["u=[2]", "v=[1,1]"])
    series = phi_direct(0, insertions, 3, 2)
    assert differential_equation(series, insertions) == {'u': True, 'v': True}


def test_differential_equation_needs_u_order():
    with pytest.raises(InvalidInputError):
        differential_equation(phi_direct(0, single((2,)), 2, 0), single((2,)))


def test_insertion_order_does_not_matter():
    insertions = InsertionSpec.parse(["u=[2]", "v=[1,1]"])
    base = phi_direct(0, NO_INSERTIONS, 3, 0)
    forward = phi_exp_action(0, insertions, base, 3, 2)
    backward = phi_exp_action(0, insertions, base, 3, 2, order=insertions.reversed())
    assert forward == backward
    assert forward == phi_direct(0, insertions, 3, 2)


def test_exponential_checks_arguments():
    base = phi_direct(0, NO_INSERTIONS, 2, 0)
    with pytest.raises(InvalidInputError):
        phi_exp_action(0, single((2,)), base, 3, 1)
    with pytest.raises(InvalidInputError):
        phi_exp_action(0, single((2,)), phi_direct(0, single((2,)), 2, 1), 2, 1)
    with pytest.raises(InvalidInputError):
        phi_exp_action(0, single((2,)), base, 2, 1, order=single((3,)))


def test_no_insertions_leave_base_unchanged():
    base = phi_direct(0, NO_INSERTIONS, 3, 0)
    assert phi_exp_action(0, NO_INSERTIONS, base, 3, 0) == base


def test_literal_action_is_not_conjugated():
    base = phi_direct(0, NO_INSERTIONS, 2, 0)
    literal = phi_exp_literal(0, single((1,)), base, 2, 1)
    assert literal != phi_exp_action(0, single((1,)), base, 2, 1)


def test_displayed_degree_three_terms(P):
    expected = displayed_terms_expected()
    assert expected.coefficient((1,), (P(2),)) == LaurentScalar.monomial(-4, Fraction(1, 2))
    slice_ = phi_degree_slice(0, single((2, 1)), 3, 3)
    assert compare_series("slice", slice_, expected)['holds']
    reports = {entry['name']: entry['holds'] for entry in displayed_terms_report()}
    assert reports["displayed terms vs direct path"]
    assert reports["displayed terms vs action path"]


def test_direct_sum_keeps_smaller_partitions_of_each_degree(P):
    series = phi_direct(0, NO_INSERTIONS, 2, 0)
    # degree-1 covers contribute z^-2, degree-2 covers z^-4
    expected = LaurentScalar.monomial(-2, 1) + LaurentScalar.monomial(-4, 1)
    assert series.coefficient((), (P(1),)) == expected
