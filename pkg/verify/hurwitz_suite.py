"""
Hurwitz-number suites: displayed connected values and the exponential relation
"""
import itertools
import logging
from fractions import Fraction
from typing import Callable, List, Tuple

from combinatorics.group_algebra import factorization_count
from combinatorics.partitions import EMPTY, Partition, canonicalize, partitions_up_to
from hurwitz.exponential import connected_CU, exponentiate_connected
from hurwitz.numbers import HurwitzQuery, derived_genus, disconnected_U
from verify.base_suite import BaseSuite

logger = logging.getLogger(__name__)

CONNECTED_MAX = 5
EXPONENTIAL_MAX_N = 5
EXPONENTIAL_MAX_BRANCH = 3
# three branch points up to this degree, two beyond
EXPONENTIAL_WIDE_MAX_N = 4
SHIFT_G0_MAX_N = 6
SHIFT_G1_MAX_N = 4

MIXED_QUERY = HurwitzQuery(0, 7, (Partition((4, 3)), Partition((2, 1)), Partition((4, 2, 1))))
MIXED_VALUE = Fraction(5, 4)
MIXED_GENUS = -1


def _half_delta(a: int, b: int) -> Fraction:
    return Fraction(1) - (Fraction(1, 2) if a == b else 0)


# name, degree, ramification, expected value, all as functions of (a, b)
ConnectedFormula = Tuple[str, Callable[[int, int], int], Callable[[int, int], Tuple[Partition, ...]],
                         Callable[[int, int], Fraction]]

CONNECTED_FORMULAS: Tuple[ConnectedFormula, ...] = (
    ("CU((a),∅,(a)) = 1/a", lambda a, b: a,
     lambda a, b: (Partition((a,)), EMPTY, Partition((a,))), lambda a, b: Fraction(1, a)),
    ("CU((a),(1),(a)) = 1", lambda a, b: a,
     lambda a, b: (Partition((a,)), Partition((1,)), Partition((a,))), lambda a, b: Fraction(1)),
    ("CU((a),(1,1),(a)) = (a-1)/2", lambda a, b: a,
     lambda a, b: (Partition((a,)), Partition((1, 1)), Partition((a,))), lambda a, b: Fraction(a - 1, 2)),
    ("CU((a),(1,1,1),(a)) = (a-1)(a-2)/6", lambda a, b: a,
     lambda a, b: (Partition((a,)), Partition((1, 1, 1)), Partition((a,))),
     lambda a, b: Fraction((a - 1) * (a - 2), 6)),
    ("CU((a,b),(2),(a+b)) = 1 - δ/2", lambda a, b: a + b,
     lambda a, b: (canonicalize((a, b)), Partition((2,)), Partition((a + b,))),
     lambda a, b: _half_delta(a, b)),
    ("CU((a,b),(2,1),(a+b)) = (1 - δ/2)(a+b-2)", lambda a, b: a + b,
     lambda a, b: (canonicalize((a, b)), Partition((2, 1)), Partition((a + b,))),
     lambda a, b: _half_delta(a, b) * (a + b - 2)),
)


def ramification_tuples(n: int, max_branch: int) -> List[Tuple[Partition, ...]]:
    """Unordered lists of 1..max_branch nonempty partitions with |Δ| <= n"""
    pool = [delta for delta in partitions_up_to(n) if delta.size]
    tuples = []
    for k in range(1, max_branch + 1):
        tuples.extend(itertools.combinations_with_replacement(pool, k))
    return tuples


class ConnectedValuesSuite(BaseSuite):
    """Displayed connected genus-zero numbers and the shifted-product value"""

    name = 'connected'

    def run(self):
        base = connected_CU(HurwitzQuery(0, 1, (EMPTY, Partition((1,)), EMPTY)))
        self.check("CU(∅,(1),∅) = 1", base.value == 1 and base.source_genus_h == 0)

        for label, degree, ramification, expected in CONNECTED_FORMULAS:
            failures = []
            for a in range(1, CONNECTED_MAX + 1):
                for b in range(1, CONNECTED_MAX + 1):
                    if degree(a, b) == a and b > 1:
                        continue
                    query = HurwitzQuery(0, degree(a, b), ramification(a, b))
                    value = connected_CU(query)
                    if value.value != expected(a, b) or value.source_genus_h != 0:
                        failures.append(f"a={a} b={b}: {value.value}")
            self.check(label, not failures, "; ".join(failures))

        mixed = disconnected_U(MIXED_QUERY, self.settings.threads)
        self.check(f"U{tuple(str(d) for d in MIXED_QUERY.ramification)} = 5/4, h = -1",
                   mixed.value == MIXED_VALUE and mixed.source_genus_h == MIXED_GENUS,
                   f"value {mixed.value}, h {mixed.source_genus_h}")


class ExponentialSuite(BaseSuite):
    """Exponential relation and shift consistency against direct counting in S_n"""

    name = 'exponential'

    def run(self):
        for g in (0, 1):
            max_n = EXPONENTIAL_MAX_N if g == 0 else 3
            for n in range(1, max_n + 1):
                failures = []
                branches = EXPONENTIAL_MAX_BRANCH if n <= EXPONENTIAL_WIDE_MAX_N else 2
                for ramification in ramification_tuples(n, branches):
                    rebuilt = exponentiate_connected(g, n, ramification)
                    direct = disconnected_U(HurwitzQuery(g, n, ramification)).value
                    if rebuilt != direct:
                        failures.append(str([str(d) for d in ramification]))
                self.check(f"exp(connected) = disconnected, g={g} n={n}", not failures, ", ".join(failures[:5]))

        for g, max_n in ((0, SHIFT_G0_MAX_N), (1, SHIFT_G1_MAX_N)):
            for n in range(1, max_n + 1):
                branches = 2 if n > 4 else 3
                pool = ramification_tuples(min(n, 3) if n > 4 else n, branches)
                failures = []
                for ramification in pool:
                    query = HurwitzQuery(g, n, ramification)
                    value = disconnected_U(query).value
                    counted = factorization_count(g, n, ramification)
                    if derived_genus(query) is None:
                        if value or counted:
                            failures.append(f"{[str(d) for d in ramification]} should vanish")
                    elif value != counted:
                        failures.append(f"{[str(d) for d in ramification]}: {value} vs {counted}")
                self.check(f"shifted Frobenius sum = factorization count, g={g} n={n}",
                           not failures, "; ".join(failures[:5]))
