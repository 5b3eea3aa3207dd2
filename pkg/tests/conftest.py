import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from combinatorics.partitions import Partition  # noqa: E402


@pytest.fixture
def P():
    """Shorthand partition constructor: P(2, 1) -> [2,1]"""
    return lambda *parts: Partition(tuple(parts))
