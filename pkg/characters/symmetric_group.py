"""
Irreducible characters of symmetric groups and normalized shifted characters
"""
import logging
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from combinatorics.partitions import Partition, canonicalize, class_size, shift_binomial
from common.errors import InvalidInputError

logger = logging.getLogger(__name__)

_character_cache: Dict[Tuple[Partition, Partition], int] = {}
_character_lock = threading.Lock()


def _beta_set(shape: Partition) -> Tuple[int, ...]:
    """First-column hook lengths λ_i + (l - 1 - i)"""
    length = shape.length
    return tuple(part + length - 1 - index for index, part in enumerate(shape.parts))


def _shape_from_beta(beads: Tuple[int, ...]) -> Partition:
    ordered = sorted(beads, reverse=True)
    length = len(ordered)
    return canonicalize(bead - (length - 1 - index) for index, bead in enumerate(ordered))


def _murnaghan_nakayama(shape: Partition, cycle_type: Partition) -> int:
    if not cycle_type.parts:
        return 1
    key = (shape, cycle_type)
    with _character_lock:
        cached = _character_cache.get(key)
    if cached is not None:
        return cached

    strip = cycle_type.parts[0]
    remaining = Partition(cycle_type.parts[1:])
    beads = _beta_set(shape)
    occupied = set(beads)

    total = 0
    for bead in beads:
        target = bead - strip
        if target < 0 or target in occupied:
            continue
        # height of the removed border strip
        height = sum(1 for other in beads if target < other < bead)
        moved = tuple(target if b == bead else b for b in beads)
        sign = -1 if height % 2 else 1
        total += sign * _murnaghan_nakayama(_shape_from_beta(moved), remaining)

    with _character_lock:
        _character_cache[key] = total
    return total


def character(shape: Partition, cycle_type: Partition) -> int:
    """
    Irreducible character χ_λ(μ) of S_{|λ|} by border-strip removal

    Args:
        shape: Young diagram λ
        cycle_type: Cycle type μ with |μ| = |λ|

    Returns:
        Integer character value
    """
    if shape.size != cycle_type.size:
        raise InvalidInputError(f"Character needs |λ| = |μ|, got {shape} and {cycle_type}")
    return _murnaghan_nakayama(shape, cycle_type)


def clear_character_cache():
    """Drop memoized characters"""
    with _character_lock:
        logger.debug(f"Clearing {len(_character_cache)} memoized characters")
        _character_cache.clear()


@lru_cache(maxsize=None)
def dim(shape: Partition) -> int:
    """
    Dimension of the irreducible representation by the hook-length formula

    Args:
        shape: Young diagram λ

    Returns:
        |λ|! / Π hook lengths
    """
    columns = shape.conjugate().parts
    hooks = 1
    for row, part in enumerate(shape.parts):
        for column in range(part):
            hooks *= part - column + columns[column] - row - 1
    return math.factorial(shape.size) // hooks


def phi(shape: Partition, delta: Partition) -> Fraction:
    """
    Normalized shifted character φ_λ(Δ)

    Args:
        shape: Young diagram λ
        delta: Partition Δ

    Returns:
        0 when |Δ| > |λ|, else binomial(|λ|-|Δ|+m_1, m_1) · |C_{Δ;|λ|}| · χ_λ([Δ,1^...]) / dim λ
    """
    n = shape.size
    if delta.size > n:
        return Fraction(0)
    value = shift_binomial(delta, n) * class_size(delta, n) * character(shape, delta.pad(n))
    return Fraction(value, dim(shape))


def dimension_weight(shape: Partition) -> Fraction:
    """dim λ / |λ|!"""
    return Fraction(dim(shape), math.factorial(shape.size))
