import time

import pytest

from common.errors import InvalidInputError
from config.settings import EngineSettings
from hurwitz.exponential import clear_connected_cache
from verify.base_suite import BaseSuite, CheckResult, SuiteResult
from verify.character_suite import OrthogonalitySuite
from verify.genfun_suite import GeneratingFunctionSuite
from verify.hurwitz_suite import ExponentialSuite, ramification_tuples
from verify.operator_suite import ClosedFormSuite, EigenSuite, NormalOrderedSuite, ProductSuite
from verify.registry import SUITE_ALIASES, SUITE_CHOICES, SUITES, run_suites
from verify.structure_suite import product_pairs

SMALL = EngineSettings(operator_max_n=3, closed_form_max_n=4, genfun_max_n=2, genfun_max_u=2)


class ToySuite(BaseSuite):
    name = 'toy'

    def run(self):
        self.check("always", True)
        self.check("never", False, "broken")
        self.report("displayed value", False, "differs")


def test_suite_bookkeeping():
    with ToySuite() as suite:
        result = suite.execute()
    assert [check.name for check in result.hard_failures] == ["never"]
    assert [check.name for check in result.discrepancies] == ["displayed value"]
    assert not result.passed
    payload = result.to_dict()
    assert payload['hard_checks'] == 2
    assert payload['hard_failures'] == 1
    assert payload['discrepancies'] == 1


def test_reports_alone_do_not_fail():
    result = SuiteResult('x', [CheckResult('a', True), CheckResult('b', False, hard=False)])
    assert result.passed
    assert CheckResult('c', True, data=[1]).to_dict()['data'] == [1]
    assert 'data' not in CheckResult('d', True).to_dict()


def test_registry_order_and_choices():
    assert list(SUITES) == ['orthogonality', 'stability', 'connected', 'exponential', 'closed-forms',
                            'normal-ordered', 'eigen', 'products', 'genfun']
    assert SUITE_CHOICES[-1] == 'all'
    with pytest.raises(InvalidInputError):
        run_suites('nope', SMALL)


def test_helpers():
    pairs = product_pairs(3)
    assert all(a.size + b.size <= 3 for a, b in pairs)
    assert len(pairs) == 3
    assert all(len(t) <= 2 for t in ramification_tuples(2, 2))


@pytest.mark.parametrize("suite_class", [OrthogonalitySuite, ClosedFormSuite, EigenSuite, ProductSuite,
                                         GeneratingFunctionSuite])
def test_small_suites_pass(suite_class):
    with suite_class(SMALL) as suite:
        result = suite.execute()
    assert result.checks
    assert result.passed, [check.name for check in result.hard_failures]


def test_normal_ordered_suite_only_reports():
    with NormalOrderedSuite(SMALL) as suite:
        result = suite.execute()
    assert all(not check.hard for check in result.checks)
    assert result.passed


def test_run_single_suite():
    results = run_suites('products', SMALL)
    assert [result.suite for result in results] == ['products']


@pytest.mark.parametrize("alias,canonical", [
    ('examples32', 'connected'),
    ('example42', 'closed-forms'),
    ('theorem44', 'products'),
])
def test_suite_aliases(alias, canonical):
    assert alias in SUITE_CHOICES
    assert SUITE_ALIASES[alias] == canonical
    assert canonical in SUITES


def test_exponential_suite_finishes_at_default_bounds():
    clear_connected_cache()
    started = time.perf_counter()
    with ExponentialSuite(EngineSettings()) as suite:
        result = suite.execute()
    elapsed = time.perf_counter() - started
    assert result.passed, [check.name for check in result.hard_failures]
    assert elapsed < 60, f"exponential suite took {elapsed:.1f}s"
