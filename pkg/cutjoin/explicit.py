"""
Closed-form low-degree cut-and-join operators written as normal-ordered sums

Sums run over ordered index tuples a, b, c >= 1, exactly as displayed.
"""
import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from algebra.laurent import LaurentScalar
from combinatorics.partitions import Partition, canonicalize
from common.errors import InvalidInputError
from cutjoin.normal_ordered import NormalOrderedTerm, realize_terms
from cutjoin.operators import BlockOperator

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


def _term(coeff: Fraction, z_exp: int, multiplier, derivative) -> NormalOrderedTerm:
    return NormalOrderedTerm(LaurentScalar.monomial(z_exp, coeff), canonicalize(multiplier), canonicalize(derivative))


def _indices(count: int, limit: int):
    return itertools.product(range(1, limit + 1), repeat=count)


def _terms_one(n: int) -> List[NormalOrderedTerm]:
    return [_term(Fraction(a), 0, [a], [a]) for a in range(1, n + 1)]


def _terms_one_one(n: int) -> List[NormalOrderedTerm]:
    terms = [_term(HALF * a * (a - 1), 0, [a], [a]) for a in range(1, n + 1)]
    terms += [_term(HALF * a * b, 0, [a, b], [a, b]) for a, b in _indices(2, n) if a + b <= n]
    return terms


def _terms_one_one_one(n: int) -> List[NormalOrderedTerm]:
    terms = [_term(SIXTH * a * (a - 1) * (a - 2), 0, [a], [a]) for a in range(1, n + 1)]
    terms += [_term(HALF * a * (a - 1) * b, 0, [a, b], [a, b]) for a, b in _indices(2, n) if a + b <= n]
    terms += [_term(SIXTH * a * b * c, 0, [a, b, c], [a, b, c])
              for a, b, c in _indices(3, n) if a + b + c <= n]
    return terms


def _terms_two(n: int) -> List[NormalOrderedTerm]:
    terms = []
    for a, b in _indices(2, n):
        if a + b > n:
            continue
        terms.append(_term(HALF * (a + b), 0, [a, b], [a + b]))
        terms.append(_term(HALF * a * b, 2, [a + b], [a, b]))
    return terms


def _terms_two_one(n: int) -> List[NormalOrderedTerm]:
    terms = []
    for a, b in _indices(2, n):
        if a + b > n:
            continue
        terms.append(_term(HALF * (a + b) * (a + b - 2), 0, [a, b], [a + b]))
        terms.append(_term(HALF * a * b * (a + b - 2), 2, [a + b], [a, b]))
    for a, b, c in _indices(3, n):
        if a + b + c > n:
            continue
        terms.append(_term(HALF * (a + b) * c, 0, [a, b, c], [a + b, c]))
        terms.append(_term(HALF * a * b * c, 2, [a, b + c], [a, b, c]))
    return terms


EXPLICIT_OPERATORS: Dict[Tuple[int, ...], Callable[[int], List[NormalOrderedTerm]]] = {
    (1,): _terms_one,
    (1, 1): _terms_one_one,
    (1, 1, 1): _terms_one_one_one,
    (2,): _terms_two,
    (2, 1): _terms_two_one,
}


def explicit_deltas() -> List[Partition]:
    """Partitions with a closed-form operator"""
    return sorted((Partition(parts) for parts in EXPLICIT_OPERATORS), key=Partition.sort_key)


@lru_cache(maxsize=None)
def _terms_for_degree(parts: Tuple[int, ...], n: int) -> Tuple[NormalOrderedTerm, ...]:
    return tuple(term for term in EXPLICIT_OPERATORS[parts](n) if term.coeff)


def build_w_explicit(delta: Partition, bound: int) -> BlockOperator:
    """
    Matrix of the closed-form operator for Δ in {(1), (1,1), (1,1,1), (2), (2,1)}

    Args:
        delta: Defining partition
        bound: Largest weighted degree N

    Returns:
        Unnormalized BlockOperator
    """
    if delta.parts not in EXPLICIT_OPERATORS:
        raise InvalidInputError(f"No closed-form operator for {delta}")
    logger.info(f"Realizing closed-form W({delta}) up to N={bound}")
    return realize_terms(lambda source: _terms_for_degree(delta.parts, source.size), delta, bound,
                         label=f"W({delta}) closed form")
