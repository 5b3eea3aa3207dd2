"""
Base verification suite with result bookkeeping
"""
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from config.settings import DEFAULT_SETTINGS, EngineSettings

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """One named check; hard checks gate the exit code, the rest are comparison reports"""
    name: str
    passed: bool
    hard: bool = True
    detail: str = ''
    data: Optional[Any] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'name': self.name,
            'passed': self.passed,
            'hard': self.hard,
            'detail': self.detail,
        }
        if self.data is not None:
            result['data'] = self.data
        return result


@dataclass
class SuiteResult:
    """All checks of one suite run"""
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def hard_failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.hard and not check.passed]

    @property
    def discrepancies(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.hard and not check.passed]

    @property
    def passed(self) -> bool:
        return not self.hard_failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'passed': self.passed,
            'hard_checks': sum(1 for check in self.checks if check.hard),
            'hard_failures': len(self.hard_failures),
            'discrepancies': len(self.discrepancies),
            'checks': [check.to_dict() for check in self.checks],
        }


class BaseSuite(ABC):
    """Base verification suite"""

    name = ''

    def __init__(self, settings: EngineSettings = DEFAULT_SETTINGS):
        """
        Initialize suite

        Args:
            settings: Bounds and thread count
        """
        self.settings = settings
        self.result = SuiteResult(self.name)
        self._started: Optional[float] = None

    def check(self, name: str, passed: bool, detail: str = '', data: Optional[Any] = None) -> CheckResult:
        """Record a hard check"""
        return self._record(CheckResult(name, bool(passed), True, detail, data))

    def report(self, name: str, passed: bool, detail: str = '', data: Optional[Any] = None) -> CheckResult:
        """Record a comparison whose failure is reported but not fatal"""
        return self._record(CheckResult(name, bool(passed), False, detail, data))

    def _record(self, result: CheckResult) -> CheckResult:
        self.result.checks.append(result)
        if result.passed:
            logger.debug(f"[{self.name}] ok: {result.name}")
        elif result.hard:
            logger.error(f"[{self.name}] FAILED: {result.name} {result.detail}".rstrip())
        else:
            logger.warning(f"[{self.name}] discrepancy: {result.name} {result.detail}".rstrip())
        return result

    @abstractmethod
    def run(self):
        """
        Record every check of the suite

        Subclasses call check() and report(); exceptions propagate to the caller.
        """
        pass

    def execute(self) -> SuiteResult:
        """Run the suite once and return its result"""
        logger.info(f"=== Running suite {self.name} ===")
        self._started = time.perf_counter()
        self.run()
        return self.result

    def close(self):
        """Log the suite summary"""
        if self._started is not None:
            elapsed = time.perf_counter() - self._started
            logger.info(f"Suite {self.name}: {len(self.result.checks)} checks, "
                        f"{len(self.result.hard_failures)} failures, "
                        f"{len(self.result.discrepancies)} discrepancies in {elapsed:.2f}s")

    def __enter__(self):
        """Context manager enter"""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Context manager exit"""
        self.close()
