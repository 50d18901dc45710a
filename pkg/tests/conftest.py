import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from triality.checks import run_suite


@pytest.fixture(scope="session")
def full_report():
    return run_suite("all")


@pytest.fixture(scope="session")
def results_by_id(full_report):
    return {r.check_id: r for r in full_report.results}
