import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest  # noqa: E402

from crystaldeg.tableaux import Partition, Tableau  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def T(*rows):
    """Tableau from rows listed bottom row first."""
    return Tableau(tuple(tuple(r) for r in rows))


def P(*parts):
    return Partition(tuple(parts))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
