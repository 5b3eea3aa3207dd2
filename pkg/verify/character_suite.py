"""
Character-layer suite: orthogonality, dimensions and class sizes
"""
import logging
import math
from fractions import Fraction

from characters.symmetric_group import character, dim, phi
from combinatorics.partitions import Partition, class_size, partitions_of, partitions_up_to
from verify.base_suite import BaseSuite

logger = logging.getLogger(__name__)

ORTHOGONALITY_MAX_N = 7
DIMENSION_MAX_N = 10
PHI_ONE_MAX_N = 8
CLASS_SIZE_MAX_N = 12


class OrthogonalitySuite(BaseSuite):
    """Row and column orthogonality of χ and the derived counting identities"""

    name = 'orthogonality'

    def run(self):
        self.check("χ_∅(∅) = 1", character(Partition(), Partition()) == 1)

        for n in range(1, ORTHOGONALITY_MAX_N + 1):
            shapes = partitions_of(n)
            rows_ok = True
            columns_ok = True
            for first in shapes:
                for second in shapes:
                    inner = sum((Fraction(character(first, mu) * character(second, mu), mu.centralizer_order())
                                 for mu in shapes), Fraction(0))
                    rows_ok &= inner == (1 if first == second else 0)
                    column = sum(character(shape, first) * character(shape, second) for shape in shapes)
                    expected = math.factorial(n) // class_size(first, n) if first == second else 0
                    columns_ok &= column == expected
            self.check(f"row orthogonality n={n}", rows_ok)
            self.check(f"column orthogonality n={n}", columns_ok)

        for n in range(DIMENSION_MAX_N + 1):
            shapes = partitions_of(n)
            self.check(f"Σ dim² = {n}!", sum(dim(shape) ** 2 for shape in shapes) == math.factorial(n))
            self.check(f"hook dimension = χ(1^{n})",
                       all(dim(shape) == character(shape, Partition((1,) * n)) for shape in shapes))

        one = Partition((1,))
        for shape in partitions_up_to(PHI_ONE_MAX_N):
            if shape.size and phi(shape, one) != shape.size:
                self.check(f"φ_{shape}((1)) = |λ|", False, f"got {phi(shape, one)}")
                break
        else:
            self.check(f"φ_λ((1)) = |λ| for |λ| <= {PHI_ONE_MAX_N}", True)

        vanishing = all(phi(shape, delta) == 0
                        for shape in partitions_up_to(4) for delta in partitions_up_to(6) if delta.size > shape.size)
        self.check("φ_λ(Δ) = 0 when |Δ| > |λ|", vanishing)

        for n in range(CLASS_SIZE_MAX_N + 1):
            total = sum(class_size(delta, n) for delta in partitions_of(n))
            self.check(f"Σ class sizes = {n}!", total == math.factorial(n))
