"""
Exact rational linear algebra over sympy's DomainMatrix
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from common.errors import InvalidInputError

logger = logging.getLogger(__name__)


def _to_qq(value: Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def to_domain_matrix(rows: Sequence[Sequence[Fraction]], columns: int) -> DomainMatrix:
    """
    Convert a list of rational rows to a DomainMatrix over QQ

    Args:
        rows: Row-major entries
        columns: Column count (needed when rows is empty)

    Returns:
        DomainMatrix
    """
    for row in rows:
        if len(row) != columns:
            raise InvalidInputError(f"Row of length {len(row)} in a {columns}-column matrix")
    data = [[_to_qq(entry) for entry in row] for row in rows]
    return DomainMatrix(data, (len(rows), columns), QQ)


def matrix_rank(rows: Sequence[Sequence[Fraction]], columns: int) -> int:
    """Rank of a rational matrix"""
    if not rows or columns == 0:
        return 0
    return to_domain_matrix(rows, columns).rank()


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction],
                unknowns: int) -> Optional[List[Fraction]]:
    """
    Solve A x = b exactly

    Args:
        rows: Coefficient rows of A
        rhs: Right-hand side b
        unknowns: Number of unknowns

    Returns:
        The unique solution, or None when the system is inconsistent or underdetermined
    """
    if len(rows) != len(rhs):
        raise InvalidInputError(f"{len(rows)} equations but {len(rhs)} right-hand sides")
    if unknowns == 0:
        return [] if all(value == 0 for value in rhs) else None

    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    if not augmented:
        return None

    reduced, pivots = to_domain_matrix(augmented, unknowns + 1).rref()
    if unknowns in pivots:
        logger.debug("Linear system is inconsistent")
        return None
    if len(pivots) < unknowns:
        logger.debug(f"Linear system has rank {len(pivots)} < {unknowns} unknowns")
        return None

    dense = reduced.to_Matrix()
    solution = [Fraction(0)] * unknowns
    for row_index, column in enumerate(pivots):
        solution[column] = _to_fraction(dense[row_index, unknowns])
    return solution
