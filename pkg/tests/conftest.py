import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = {}


@pytest.fixture
def record_criterion():
    def record(number, title, ok, seconds, budget, note=""):
        status = "PASS" if ok else "FAIL"
        line = "criterion %d [%s] %s (%.2fs, budget %ds)" % (number, status, title, seconds, budget)
        if note:
            line += " - " + note
        ACCEPTANCE_LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
