"""
Schur polynomials in power-sum coordinates
"""
import logging
from typing import Optional

from algebra.laurent import LaurentScalar
from algebra.series import TruncatedSeries
from characters.symmetric_group import dimension_weight, phi
from combinatorics.partitions import Partition, partitions_of
from common.errors import InvalidInputError

logger = logging.getLogger(__name__)


def schur_poly(shape: Partition, bound: Optional[int] = None) -> TruncatedSeries:
    """
    Classical Schur function S_λ{p} = Σ_{Γ ⊢ |λ|} (dim λ / |λ|!) φ_λ(Γ) p_Γ

    Args:
        shape: Young diagram λ
        bound: Truncation bound, defaults to |λ|

    Returns:
        z-free TruncatedSeries
    """
    bound = shape.size if bound is None else bound
    if shape.size > bound:
        raise InvalidInputError(f"|{shape}| = {shape.size} exceeds truncation {bound}")
    weight = dimension_weight(shape)
    coefficients = {}
    for gamma in partitions_of(shape.size):
        value = weight * phi(shape, gamma)
        if value:
            coefficients[gamma] = LaurentScalar.constant(value)
    return TruncatedSeries(bound, coefficients)
