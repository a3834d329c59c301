import json
from pathlib import Path

import numpy as np
import pytest

DATA = Path(__file__).parent / "data"

_ACCEPTANCE_LINES = []


def load_golden(name):
    doc = json.loads((DATA / f"golden_{name}.json").read_text())
    U = np.array(doc["U"]["re"]) + 1j * np.array(doc["U"]["im"])
    return doc, U


@pytest.fixture
def record_criterion():
    """Collect one PASS/FAIL line per acceptance criterion for the summary."""

    def record(label, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def max_abs(a):
    return float(np.max(np.abs(a)))
