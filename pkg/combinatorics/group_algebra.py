"""
Brute-force oracle in the group algebra of S_n

Elements are dictionaries from permutation array forms to rationals; sympy
supplies the group elements, cycle types and commutators.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup

from combinatorics.partial_perm import ClassVector, psi_coefficient
from combinatorics.partitions import Partition, canonicalize
from common.errors import InvalidInputError

logger = logging.getLogger(__name__)

ArrayForm = Tuple[int, ...]
GroupElement = Dict[ArrayForm, Fraction]

# commutator sums over S_n x S_n grow as (n!)^2
MAX_COMMUTATOR_DEGREE = 5


@lru_cache(maxsize=None)
def group_elements(n: int) -> Tuple[Permutation, ...]:
    """All of S_n as sympy permutations"""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    if n == 0:
        return (Permutation([]),)
    return tuple(SymmetricGroup(n).generate())


def cycle_type(perm: Permutation) -> Partition:
    """Cycle type of a permutation, fixed points included"""
    parts = []
    for length, count in perm.cycle_structure.items():
        parts.extend([length] * count)
    return canonicalize(parts)


def _compose(a: ArrayForm, b: ArrayForm) -> ArrayForm:
    """a after b"""
    return tuple(a[b[i]] for i in range(len(b)))


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    """Product in C[S_n]"""
    product: GroupElement = {}
    for a, coeff_a in x.items():
        for b, coeff_b in y.items():
            key = _compose(a, b)
            product[key] = product.get(key, Fraction(0)) + coeff_a * coeff_b
    return {key: value for key, value in product.items() if value}


@lru_cache(maxsize=None)
def _class_members(delta: Partition, n: int) -> Tuple[ArrayForm, ...]:
    return tuple(tuple(p.array_form) for p in group_elements(n) if cycle_type(p) == delta)


def class_sum(delta: Partition, n: int) -> GroupElement:
    """C_{Δ;n}: the sum of all permutations of cycle type [Δ, 1^{n-|Δ|}]"""
    return {member: Fraction(1) for member in _class_members(delta.pad(n), n)}


def psi_element(delta: Partition, n: int) -> GroupElement:
    """ψ(A_{Δ;n}) as an element of C[S_n]"""
    if delta.size > n:
        return {}
    factor = psi_coefficient(delta, n)
    return {member: Fraction(factor) for member in _class_members(delta.pad(n), n)}


def identity(n: int) -> GroupElement:
    return {tuple(range(n)): Fraction(1)}


@lru_cache(maxsize=None)
def _commutator_counts(n: int) -> Tuple[Tuple[ArrayForm, Fraction], ...]:
    element: GroupElement = {}
    elements = group_elements(n)
    for a in elements:
        for b in elements:
            key = tuple(a.commutator(b).array_form) if n else ()
            element[key] = element.get(key, Fraction(0)) + 1
    return tuple(sorted(element.items()))


def commutator_element(n: int) -> GroupElement:
    """Σ_{a,b in S_n} [a, b]"""
    if n > MAX_COMMUTATOR_DEGREE:
        raise InvalidInputError(f"Commutator sum over S_{n} is too large (limit {MAX_COMMUTATOR_DEGREE})")
    return dict(_commutator_counts(n))


def class_decomposition(element: GroupElement, n: int) -> ClassVector:
    """Read a central element as Σ_μ c_μ C_μ, μ ⊢ n, from one member per class"""
    coefficients = {}
    seen = set()
    for perm in group_elements(n):
        mu = cycle_type(perm)
        if mu in seen:
            continue
        seen.add(mu)
        coefficients[mu] = element.get(tuple(perm.array_form), Fraction(0))
    return ClassVector.from_mapping(coefficients)


def psi_image(vector: ClassVector, n: int) -> ClassVector:
    """ψ(Σ c_Δ A_{Δ;n}) in the C_μ basis of Z(C[S_n])"""
    coefficients: Dict[Partition, Fraction] = {}
    for delta, coeff in vector.coefficients:
        if delta.size > n:
            continue
        mu = delta.pad(n)
        coefficients[mu] = coefficients.get(mu, Fraction(0)) + coeff * psi_coefficient(delta, n)
    return ClassVector.from_mapping(coefficients)


def psi_product(delta1: Partition, delta2: Partition, n: int) -> ClassVector:
    """ψ(A_{Δ1;n}) ψ(A_{Δ2;n}) in the C_μ basis"""
    return class_decomposition(multiply(psi_element(delta1, n), psi_element(delta2, n)), n)


def factorization_count(g: int, n: int, ramification: Sequence[Partition]) -> Fraction:
    """
    1/n! times the identity coefficient of (Σ[a,b])^g Π_i ψ(A_{Δ_i;n})

    Args:
        g: Target genus, 0 or 1
        n: Covering degree
        ramification: Ramification partitions

    Returns:
        Shifted Hurwitz number by direct counting
    """
    if g not in (0, 1):
        raise InvalidInputError(f"The group-algebra oracle handles genus 0 and 1, got {g}")
    if any(delta.size > n for delta in ramification):
        return Fraction(0)

    running = identity(n)
    if g == 1:
        running = commutator_element(n)
    factors: List[GroupElement] = [psi_element(delta, n) for delta in ramification]
    for factor in factors:
        running = multiply(running, factor)
    logger.debug(f"Counted factorizations in S_{n} for {[str(d) for d in ramification]}")
    return running.get(tuple(range(n)), Fraction(0)) / math.factorial(n)
