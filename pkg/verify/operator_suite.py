"""
Cut-and-join suites: closed forms, normal ordering, eigenvalues and products
"""
import logging
from fractions import Fraction

from combinatorics.partial_perm import ClassVector, structure_constants
from combinatorics.partitions import Partition, partitions_of, partitions_up_to
from cutjoin.eigen import commutes, eigenbasis_rank, eigencheck, solve_structure_constants, verify_theorem
from cutjoin.explicit import build_w_explicit, explicit_deltas
from cutjoin.normal_ordered import normal_ordered_discrepancies
from cutjoin.operators import build_w_action
from verify.base_suite import BaseSuite
from verify.structure_suite import product_pairs

logger = logging.getLogger(__name__)

NORMAL_ORDERED_MAX_DELTA = 4
NORMAL_ORDERED_MAX_N = 5
COMMUTATOR_MAX_DELTA = 4

DISPLAYED_OPERATOR_PRODUCTS = (
    (Partition((1,)), Partition((2,)), {Partition((2,)): 2, Partition((2, 1)): 1}),
    (Partition((1,)), Partition((1, 1)), {Partition((1, 1)): 2, Partition((1, 1, 1)): 3}),
)


class ClosedFormSuite(BaseSuite):
    """Action matrices against the closed-form operators, entry for entry"""

    name = 'closed-forms'

    def run(self):
        bound = self.settings.closed_form_max_n
        for delta in explicit_deltas():
            action = build_w_action(delta, bound, self.settings.threads)
            explicit = build_w_explicit(delta, bound)
            differences = action.differences(explicit)
            self.check(f"W({delta}) closed form, N={bound}", not differences,
                       f"{len(differences)} entries differ", differences[:10] or None)


class NormalOrderedSuite(BaseSuite):
    """Re-partition formula against the action formula, reported per block"""

    name = 'normal-ordered'

    def run(self):
        bound = min(self.settings.operator_max_n, NORMAL_ORDERED_MAX_N)
        for delta in partitions_up_to(NORMAL_ORDERED_MAX_DELTA):
            if not delta.size:
                continue
            for record in normal_ordered_discrepancies(delta, bound):
                self.report(f"normal-ordered W({delta}) block {record['n']}", record['mismatches'] == 0,
                            f"{record['mismatches']} entries differ", record['entries'][:5] or None)


class EigenSuite(BaseSuite):
    """Eigenvalues on genus-expanded Schur functions, grading and commutativity"""

    name = 'eigen'

    def run(self):
        bound = self.settings.operator_max_n
        threads = self.settings.threads
        deltas = [delta for delta in partitions_up_to(bound) if delta.size]

        for delta in deltas:
            operator = build_w_action(delta, bound, threads)
            failed = [str(shape) for shape in partitions_up_to(bound)
                      if not eigencheck(delta, shape, bound, operator).holds]
            self.check(f"W({delta}) eigenvalues, N={bound}", not failed, ", ".join(failed))

            graded = True
            defect = delta.size - delta.length
            for n in range(bound + 1):
                basis = partitions_of(n)
                for i, target in enumerate(basis):
                    for j, source in enumerate(basis):
                        entry = operator.blocks[n][i][j]
                        if entry and entry.single_exponent() != defect + source.length - target.length:
                            graded = False
                if delta.size > n and any(entry for row in operator.blocks[n] for entry in row):
                    graded = False
            self.check(f"W({delta}) z-grading", graded)

        for n in range(bound + 1):
            self.check(f"genus-expanded Schur basis rank n={n}", eigenbasis_rank(n) == len(partitions_of(n)))

        small = [delta for delta in deltas if delta.size <= COMMUTATOR_MAX_DELTA]
        for i, first in enumerate(small):
            for second in small[i + 1:]:
                self.check(f"Ŵ({first}) Ŵ({second}) = Ŵ({second}) Ŵ({first})", commutes(first, second, bound))


class ProductSuite(BaseSuite):
    """Operator products against the partial-permutation structure constants"""

    name = 'products'

    def run(self):
        bound = self.settings.operator_max_n
        threads = self.settings.threads

        for left, right, expected in DISPLAYED_OPERATOR_PRODUCTS:
            vector = ClassVector.from_mapping({k: Fraction(v) for k, v in expected.items()})
            self.check(f"W({left}) W({right}) = {vector}", verify_theorem(left, right, bound, vector))

        for left, right in product_pairs(bound):
            constants = structure_constants(left, right, threads=threads)
            self.check(f"W({left}) W({right}) = Σ Ĉ W", verify_theorem(left, right, bound, constants))
            solved = solve_structure_constants(left, right, bound)
            self.check(f"Ŵ({left}) Ŵ({right}) expands z-free with Ĉ", solved == constants,
                       f"solved {solved}, expected {constants}")
