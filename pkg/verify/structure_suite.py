"""
Partial-permutation suite: displayed products, stability and the ψ-homomorphism
"""
import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from combinatorics.group_algebra import psi_image, psi_product
from combinatorics.partial_perm import (
    ClassVector,
    count_Pn,
    enumerate_partial_permutations,
    structure_constants,
)
from combinatorics.partitions import Partition, partitions_of, partitions_up_to, proper_repartitions
from verify.base_suite import BaseSuite

logger = logging.getLogger(__name__)

STABILITY_MAX_TOTAL = 6
PSI_MAX_N = 6
PSI_PAIR_MAX_TOTAL = 4
ENUMERATION_MAX_N = 6
REPARTITION_MAX_N = 8

BELL_NUMBERS = (1, 1, 2, 5, 15, 52, 203, 877, 4140)

DISPLAYED_PRODUCTS: Tuple[Tuple[Partition, Partition, Dict[Partition, int]], ...] = (
    (Partition((1,)), Partition((2,)), {Partition((2,)): 2, Partition((2, 1)): 1}),
    (Partition((1,)), Partition((1, 1)), {Partition((1, 1)): 2, Partition((1, 1, 1)): 3}),
    (Partition((2,)), Partition((2,)), {Partition((1, 1)): 1, Partition((3,)): 3, Partition((2, 2)): 2}),
)


def product_pairs(max_total: int) -> List[Tuple[Partition, Partition]]:
    """Unordered pairs of nonempty partitions with |Δ1| + |Δ2| <= max_total"""
    nonempty = [delta for delta in partitions_up_to(max_total) if delta.size]
    pairs = []
    for i, first in enumerate(nonempty):
        for second in nonempty[i:]:
            if first.size + second.size <= max_total:
                pairs.append((first, second))
    return pairs


class StabilitySuite(BaseSuite):
    """Ĉ against the displayed products, across ambient degrees and through ψ"""

    name = 'stability'

    def run(self):
        threads = self.settings.threads

        for left, right, expected in DISPLAYED_PRODUCTS:
            expected_vector = ClassVector.from_mapping({k: Fraction(v) for k, v in expected.items()})
            for n in (5, 6):
                found = structure_constants(left, right, n, threads)
                self.check(f"A{left} A{right} in B_{n}", found == expected_vector, str(found))

        constants: Dict[Tuple[Partition, Partition], ClassVector] = {}
        for left, right in product_pairs(STABILITY_MAX_TOTAL):
            minimal = structure_constants(left, right, threads=threads)
            constants[(left, right)] = minimal
            larger = structure_constants(left, right, left.size + right.size + 1, threads)
            self.check(f"Ĉ({left},{right}) stable", minimal == larger)
            if left != right:
                swapped = structure_constants(right, left, threads=threads)
                self.check(f"Ĉ({left},{right}) = Ĉ({right},{left})", minimal == swapped)
            bounded = all(delta.size <= left.size + right.size for delta in minimal.support())
            self.check(f"Ĉ({left},{right}) support bound", bounded)

        for n in range(1, PSI_MAX_N + 1):
            holds = True
            for left, right in product_pairs(PSI_PAIR_MAX_TOTAL):
                if left.size > n or right.size > n:
                    continue
                if psi_product(left, right, n) != psi_image(constants[(left, right)], n):
                    holds = False
                    logger.error(f"ψ fails for A{left} A{right} at n={n}")
            self.check(f"ψ-homomorphism n={n}", holds)

        for n in range(ENUMERATION_MAX_N + 1):
            counted = sum(1 for _ in enumerate_partial_permutations(n))
            self.check(f"|P_{n}| = {count_Pn(n)}", counted == count_Pn(n))

        for n in range(1, REPARTITION_MAX_N + 1):
            count = len(proper_repartitions(Partition((1,) * n)))
            self.check(f"re-partitions of (1^{n}) = p({n})", count == len(partitions_of(n)))
        for delta in partitions_up_to(REPARTITION_MAX_N):
            if delta.size and len(set(delta.parts)) == delta.length:
                self.check(f"re-partitions of {delta} = Bell({delta.length})",
                           len(proper_repartitions(delta)) == BELL_NUMBERS[delta.length])
