import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from docmetrics import build_document

FIXTURE = "The cat sat on the mat. It was happy."


@pytest.fixture
def fixture_doc():
    return build_document("fx", FIXTURE)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
