"""
Genus-expanded Schur functions, eigenvalue checks and operator structure constants
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from algebra.laurent import LaurentScalar
from algebra.linear import matrix_rank, solve_exact
from algebra.series import TruncatedSeries
from characters.symmetric_group import dimension_weight, phi
from combinatorics.partial_perm import ClassVector
from combinatorics.partitions import Partition, partitions_of, partitions_up_to
from common.errors import InvalidInputError
from cutjoin.operators import (
    BlockOperator,
    apply,
    build_w_action,
    build_w_hat,
    compose,
    linear_combination,
)

logger = logging.getLogger(__name__)


def genus_schur(shape: Partition, bound: int) -> TruncatedSeries:
    """
    S_λ{p, z} = Σ_{Γ' ⊢ |λ|} z^{-|Γ'|-l(Γ')} (dim λ / |λ|!) φ_λ(Γ') p_{Γ'}

    Args:
        shape: Young diagram λ
        bound: Truncation bound N >= |λ|

    Returns:
        TruncatedSeries
    """
    if shape.size > bound:
        raise InvalidInputError(f"|{shape}| = {shape.size} exceeds truncation {bound}")
    weight = dimension_weight(shape)
    coefficients = {}
    for gamma in partitions_of(shape.size):
        value = weight * phi(shape, gamma)
        if value:
            coefficients[gamma] = LaurentScalar.monomial(-gamma.size - gamma.length, value)
    return TruncatedSeries(bound, coefficients)


@dataclass(frozen=True)
class EigenResult:
    """Outcome of one eigenvalue check"""
    delta: Partition
    shape: Partition
    eigenvalue: LaurentScalar
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'delta': str(self.delta),
            'lambda': str(self.shape),
            'eigenvalue': self.eigenvalue.to_dict(),
            'holds': self.holds,
        }


def eigenvalue(delta: Partition, shape: Partition) -> LaurentScalar:
    """z^{|Δ|-l(Δ)} φ_λ(Δ)"""
    return LaurentScalar.monomial(delta.size - delta.length, phi(shape, delta))


def eigencheck(delta: Partition, shape: Partition, bound: int,
               operator: Optional[BlockOperator] = None) -> EigenResult:
    """
    Check W(Δ, z) S_λ{p, z} = z^{|Δ|-l(Δ)} φ_λ(Δ) S_λ{p, z} exactly

    Args:
        delta: Defining partition Δ
        shape: Young diagram λ with |λ| <= bound
        bound: Truncation bound N
        operator: Prebuilt W(Δ, z), optional

    Returns:
        EigenResult
    """
    if operator is None:
        operator = build_w_action(delta, bound)
    schur = genus_schur(shape, bound)
    value = eigenvalue(delta, shape)
    holds = apply(operator, schur) == schur.scale(value)
    if not holds:
        logger.warning(f"Eigenvalue check failed for W({delta}) on S_{shape}")
    return EigenResult(delta, shape, value, holds)


def product_expansion(delta1: Partition, delta2: Partition, constants: ClassVector, bound: int) -> BlockOperator:
    """Σ_{Δ3} z^{d(Δ1)+d(Δ2)-d(Δ3)} Ĉ W(Δ3), d(Δ) = |Δ| - l(Δ)"""
    base = (delta1.size - delta1.length) + (delta2.size - delta2.length)
    terms = []
    for delta3, coeff in constants.coefficients:
        exponent = base - (delta3.size - delta3.length)
        terms.append((LaurentScalar.monomial(exponent, coeff), build_w_action(delta3, bound)))
    return linear_combination(terms, bound)


def verify_theorem(delta1: Partition, delta2: Partition, bound: int, constants: ClassVector) -> bool:
    """
    Check W(Δ1)W(Δ2) = Σ z^{...} Ĉ W(Δ3) on every block n <= bound

    Args:
        delta1: Left partition
        delta2: Right partition
        bound: Truncation bound N
        constants: Structure constants Ĉ_{Δ1,Δ2}

    Returns:
        True when the operators agree entry for entry
    """
    product = compose(build_w_action(delta1, bound), build_w_action(delta2, bound))
    holds = product.same_blocks(product_expansion(delta1, delta2, constants, bound))
    if not holds:
        logger.warning(f"Product W({delta1})W({delta2}) differs from Σ Ĉ W on N={bound}")
    return holds


def commutes(delta1: Partition, delta2: Partition, bound: int) -> bool:
    """Ŵ(Δ1)Ŵ(Δ2) = Ŵ(Δ2)Ŵ(Δ1)"""
    left = compose(build_w_hat(delta1, bound), build_w_hat(delta2, bound))
    right = compose(build_w_hat(delta2, bound), build_w_hat(delta1, bound))
    return left.same_blocks(right)


def _entry_coordinates(operators: List[BlockOperator], target: BlockOperator) -> List[Tuple[int, int, int, int]]:
    """(n, i, j, z_exp) positions touched by any operator"""
    positions = set()
    for operator in operators + [target]:
        for n, block in enumerate(operator.blocks):
            for i, row in enumerate(block):
                for j, entry in enumerate(row):
                    for exp in entry.exponents():
                        positions.add((n, i, j, exp))
    return sorted(positions)


def solve_structure_constants(delta1: Partition, delta2: Partition, bound: int) -> Optional[ClassVector]:
    """
    Expand Ŵ(Δ1)Ŵ(Δ2) in the basis Ŵ(Δ3), |Δ3| <= N, with rational (z-free) unknowns

    Args:
        delta1: Left partition
        delta2: Right partition
        bound: Truncation bound N

    Returns:
        ClassVector of coefficients, or None when no z-free expansion exists
    """
    product = compose(build_w_hat(delta1, bound), build_w_hat(delta2, bound))
    basis = [delta for delta in partitions_up_to(bound) if delta.size > 0]
    operators = [build_w_hat(delta, bound) for delta in basis]
    positions = _entry_coordinates(operators, product)

    rows = []
    rhs = []
    for n, i, j, exp in positions:
        rows.append([operator.blocks[n][i][j].coefficient(exp) for operator in operators])
        rhs.append(product.blocks[n][i][j].coefficient(exp))
    logger.info(f"Solving {len(rows)} equations in {len(basis)} unknowns for Ŵ({delta1})Ŵ({delta2})")

    solution = solve_exact(rows, rhs, len(basis))
    if solution is None:
        return None
    return ClassVector.from_mapping(dict(zip(basis, solution)))


def eigenbasis_rank(n: int) -> int:
    """Rank of the coefficient matrix of {S_λ{p, z} : λ ⊢ n}; full rank is p(n)"""
    basis = partitions_of(n)
    rows = []
    for shape in basis:
        schur = genus_schur(shape, n)
        # each monomial carries a single power of z, so the rational parts suffice
        rows.append([sum((c for _, c in schur.coefficient(gamma).terms), Fraction(0)) for gamma in basis])
    return matrix_rank(rows, len(basis))
