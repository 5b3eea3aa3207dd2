"""
Generating-function suite: path independence, the u-derivative equation and initial values
"""
import logging

from combinatorics.partitions import Partition
from genfun.comparisons import closed_form_reports, displayed_terms_report
from genfun.generating import InsertionSpec, differential_equation, path_independence, phi_direct, phi_exp_action
from verify.base_suite import BaseSuite

logger = logging.getLogger(__name__)

SINGLE_INSERTIONS = (Partition((2,)), Partition((2, 1)), Partition((1, 1)))
PAIRED_INSERTIONS = InsertionSpec((('u', Partition((2,))), ('v', Partition((1, 1)))))


class GeneratingFunctionSuite(BaseSuite):
    """Both evaluation paths of Φ_g and their comparison with displayed values"""

    name = 'genfun'

    def run(self):
        bound = self.settings.genfun_max_n
        u_bound = self.settings.genfun_max_u
        threads = self.settings.threads

        cases = [(0, InsertionSpec((('u', delta),))) for delta in SINGLE_INSERTIONS]
        cases.append((0, PAIRED_INSERTIONS))
        cases.append((1, InsertionSpec((('u', Partition((2,))),))))
        for g, insertions in cases:
            label = ", ".join(f"{name}={delta}" for name, delta in insertions.pairs)
            outcome = path_independence(g, insertions, bound, u_bound, threads)
            self.check(f"Φ_{g}({label}) direct = exponential, N={bound} U={u_bound}", outcome['holds'],
                       f"{len(outcome['differences'])} coefficients differ", outcome['differences'][:5] or None)

            series = phi_direct(g, insertions, bound, u_bound, threads=threads)
            for name, holds in differential_equation(series, insertions, threads).items():
                self.check(f"Φ_{g}({label}) ∂/∂{name} = W Φ", holds)

        base = phi_direct(0, InsertionSpec(), bound, 0, threads=threads)
        forward = phi_exp_action(0, PAIRED_INSERTIONS, base, bound, u_bound, threads)
        backward = phi_exp_action(0, PAIRED_INSERTIONS, base, bound, u_bound, threads,
                                  order=PAIRED_INSERTIONS.reversed())
        self.check("exponentials commute across insertions", forward == backward)

        for entry in closed_form_reports(bound):
            record = self.check if entry['hard'] else self.report
            record(entry['name'], entry['holds'], f"{len(entry['differences'])} coefficients differ",
                   entry['differences'][:5] or None)

        for entry in displayed_terms_report(threads):
            self.report(entry['name'], entry['holds'], f"{len(entry['differences'])} coefficients differ",
                        entry['differences'][:10] or None)
