"""
Normal-ordered differential operators and the re-partition definition of W(Δ, z)
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Set, Tuple

from algebra.laurent import ZERO, LaurentScalar
from combinatorics.partitions import (
    EMPTY,
    Partition,
    aut_count,
    falling_factorial,
    partitions_of,
    proper_repartitions,
    sub_partitions,
)
from common.errors import InvariantBreach
from cutjoin.operators import BlockOperator, build_w_action
from hurwitz.exponential import connected_CU
from hurwitz.numbers import HurwitzQuery

logger = logging.getLogger(__name__)

Triple = Tuple[Partition, Partition, Partition]


@dataclass(frozen=True)
class NormalOrderedTerm:
    """coeff · p_multiplier ∂/∂p_derivative with every p to the left of every derivative"""
    coeff: LaurentScalar
    multiplier: Partition
    derivative: Partition

    def act(self, source: Partition) -> Optional[Tuple[Partition, LaurentScalar]]:
        """
        Apply to the monomial p_source

        Returns:
            (target monomial, coefficient), or None when the derivative kills p_source
        """
        remainder = source.subtract(self.derivative)
        if remainder is None:
            return None
        counts = source.multiplicities()
        factor = math.prod(falling_factorial(counts.get(part, 0), times)
                           for part, times in self.derivative.multiplicities().items())
        return self.multiplier + remainder, self.coeff * factor


def realize_terms(terms_for: Callable[[Partition], Iterable[NormalOrderedTerm]],
                  delta: Optional[Partition], bound: int, label: str = '') -> BlockOperator:
    """
    Matrix of a normal-ordered operator on every block n <= bound

    Args:
        terms_for: Terms that may act on a given source monomial
        delta: Defining partition recorded on the result
        bound: Largest weighted degree
        label: Display label

    Returns:
        Unnormalized BlockOperator
    """
    blocks = []
    for n in range(bound + 1):
        basis = partitions_of(n)
        index = {gamma: i for i, gamma in enumerate(basis)}
        columns: List[Dict[int, LaurentScalar]] = []
        for source in basis:
            column: Dict[int, LaurentScalar] = {}
            for term in terms_for(source):
                result = term.act(source)
                if result is None:
                    continue
                target, value = result
                if target.size != n:
                    raise InvariantBreach(f"Term {term} maps degree {n} to degree {target.size}")
                column[index[target]] = column.get(index[target], ZERO) + value
            columns.append(column)
        block = tuple(tuple(columns[j].get(i, ZERO) for j in range(len(basis))) for i in range(len(basis)))
        blocks.append(block)
    return BlockOperator(delta, bound, tuple(blocks), label=label)


def _block_candidates(block: Partition, available: Partition) -> List[Tuple[Triple, Fraction]]:
    """Connected factors (Γ', Δ^i, Γ) with Γ' taken from the available monomial"""
    budget = block.size - block.length + 2
    candidates = []
    for gamma_prime in sub_partitions(available):
        if gamma_prime.size < max(block.size, 1):
            continue
        for gamma in partitions_of(gamma_prime.size):
            lengths = gamma_prime.length + gamma.length
            if lengths > budget or (budget - lengths) % 2:
                continue
            value = connected_CU(HurwitzQuery(0, gamma_prime.size, (gamma_prime, block, gamma))).value
            if value:
                candidates.append(((gamma_prime, block, gamma), gamma_prime.norm * value))
    return candidates


def formula_terms(delta: Partition, source: Partition) -> List[NormalOrderedTerm]:
    """
    Terms of the re-partition sum for W(Δ, z) whose derivative divides p_source

    Each proper re-partition contributes products over its blocks of
    ||Γ'_i|| CU_0(Γ'_i, Δ^i, Γ_i), one term per multiset of triples, divided by |Aut|.

    Args:
        delta: Defining partition Δ
        source: Monomial the terms will act on

    Returns:
        List of NormalOrderedTerm
    """
    if delta == EMPTY:
        return []
    defect = delta.size - delta.length
    terms = []
    for repartition in proper_repartitions(delta):
        seen: Set[Tuple[Triple, ...]] = set()
        weights: Dict[Tuple[Triple, ...], Fraction] = {}

        def extend(index: int, available: Partition, chosen: List[Triple], weight: Fraction):
            if index == len(repartition.blocks):
                key = tuple(sorted(chosen, key=lambda t: (t[0].sort_key(), t[1].sort_key(), t[2].sort_key())))
                if key not in seen:
                    seen.add(key)
                    weights[key] = weight
                return
            for triple, factor in _block_candidates(repartition.blocks[index], available):
                extend(index + 1, available.subtract(triple[0]), chosen + [triple], weight * factor)

        extend(0, source, [], Fraction(1))

        for key in sorted(weights, key=lambda k: [tuple(p.sort_key() for p in t) for t in k]):
            derivative = EMPTY
            multiplier = EMPTY
            for gamma_prime, _, gamma in key:
                derivative = derivative + gamma_prime
                multiplier = multiplier + gamma
            exponent = defect + derivative.length - multiplier.length
            coeff = LaurentScalar.monomial(exponent, weights[key] / aut_count(list(key)))
            terms.append(NormalOrderedTerm(coeff, multiplier, derivative))
    return terms


def build_w_normal_ordered(delta: Partition, bound: int) -> BlockOperator:
    """
    W(Δ, z) assembled from the normal-ordered re-partition sum

    Args:
        delta: Defining partition Δ (∅ gives the identity)
        bound: Largest weighted degree N

    Returns:
        Unnormalized BlockOperator
    """
    if delta == EMPTY:
        return build_w_action(delta, bound)
    logger.info(f"Assembling normal-ordered W({delta}) up to N={bound}")
    return realize_terms(lambda source: formula_terms(delta, source), delta, bound,
                         label=f"W({delta}) normal-ordered")


def normal_ordered_discrepancies(delta: Partition, bound: int) -> List[Dict[str, Any]]:
    """
    Compare the normal-ordered and action constructions block by block

    Args:
        delta: Defining partition Δ
        bound: Largest weighted degree N

    Returns:
        One record per block n: {delta, n, mismatches, entries}
    """
    ordered = build_w_normal_ordered(delta, bound)
    action = build_w_action(delta, bound)
    by_block: Dict[int, List[Dict[str, Any]]] = {n: [] for n in range(bound + 1)}
    for record in ordered.differences(action):
        by_block[record['n']].append(record)
    report = []
    for n, entries in by_block.items():
        if entries:
            logger.warning(f"Normal-ordered W({delta}) differs from the action on block {n}: "
                           f"{len(entries)} entries")
        report.append({'delta': str(delta), 'n': n, 'mismatches': len(entries), 'entries': entries})
    return report
