import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance_report():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n in _ACCEPTANCE:
            mark = "PASS" if _ACCEPTANCE[n] else "FAIL"
            terminalreporter.write_line(f"criterion {n:2d} {mark}  {CRITERIA[n]}")
