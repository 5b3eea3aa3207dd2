"""
Suite registry and runner
"""
import logging
from typing import Dict, List, Type

from common.errors import InvalidInputError
from config.settings import EngineSettings
from verify.base_suite import BaseSuite, SuiteResult
from verify.character_suite import OrthogonalitySuite
from verify.genfun_suite import GeneratingFunctionSuite
from verify.hurwitz_suite import ConnectedValuesSuite, ExponentialSuite
from verify.operator_suite import ClosedFormSuite, EigenSuite, NormalOrderedSuite, ProductSuite
from verify.structure_suite import StabilitySuite

logger = logging.getLogger(__name__)

SUITES: Dict[str, Type[BaseSuite]] = {
    suite.name: suite
    for suite in (
        OrthogonalitySuite,
        StabilitySuite,
        ConnectedValuesSuite,
        ExponentialSuite,
        ClosedFormSuite,
        NormalOrderedSuite,
        EigenSuite,
        ProductSuite,
        GeneratingFunctionSuite,
    )
}

# Alternate names accepted by run_suites and the CLI
SUITE_ALIASES: Dict[str, str] = {
    'examples32': 'connected',
    'example42': 'closed-forms',
    'theorem44': 'products',
}

SUITE_CHOICES = tuple(SUITES) + tuple(SUITE_ALIASES) + ('all',)


def run_suites(name: str, settings: EngineSettings) -> List[SuiteResult]:
    """
    Run one suite, or every suite in registry order for 'all'

    Args:
        name: Suite name, alias or 'all'
        settings: Bounds and thread count

    Returns:
        List of SuiteResult
    """
    name = SUITE_ALIASES.get(name, name)
    if name == 'all':
        selected = list(SUITES.values())
    elif name in SUITES:
        selected = [SUITES[name]]
    else:
        raise InvalidInputError(f"Unknown suite '{name}', expected one of {', '.join(SUITE_CHOICES)}")

    results = []
    for suite_class in selected:
        with suite_class(settings) as suite:
            results.append(suite.execute())
    failed = [result.suite for result in results if not result.passed]
    if failed:
        logger.error(f"Hard-gate failures in: {', '.join(failed)}")
    return results
