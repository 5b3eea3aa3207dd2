from fractions import Fraction

import pytest

from algebra.linear import matrix_rank, solve_exact
from common.errors import InvalidInputError


def test_matrix_rank():
    assert matrix_rank([[1, 2], [2, 4]], 2) == 1
    assert matrix_rank([[1, 0], [0, Fraction(1, 3)]], 2) == 2
    assert matrix_rank([], 3) == 0


def test_solve_unique():
    assert solve_exact([[1, 1], [1, -1]], [3, 1], 2) == [2, 1]
    assert solve_exact([[3]], [Fraction(1, 2)], 1) == [Fraction(1, 6)]


def test_solve_overdetermined_consistent():
    assert solve_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 3], 2) == [1, 2]


def test_solve_inconsistent_or_underdetermined():
    assert solve_exact([[1, 1], [1, 1]], [1, 2], 2) is None
    assert solve_exact([[1, 1]], [1], 2) is None


def test_solve_without_unknowns():
    assert solve_exact([[]], [0], 0) == []
    assert solve_exact([[]], [1], 0) is None


def test_shape_errors():
    with pytest.raises(InvalidInputError):
        solve_exact([[1, 2]], [1, 2], 2)
    with pytest.raises(InvalidInputError):
        matrix_rank([[1, 2], [1]], 2)
