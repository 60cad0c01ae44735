from __future__ import annotations

from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# expected tokens of ActionError::void evaluateExtraParams() in fixtures/
ACTION_ERROR_TERMS = [
    "findValue", "if{", "for{", "StringUtil.isNotBlank", "if{", "break",
    "}", "}", "}", "addParameter", "addParameter", "}",
]


@pytest.fixture
def action_error_source() -> str:
    return (FIXTURES / "ActionError.java").read_text(encoding="utf-8")


@pytest.fixture
def action_error_terms() -> list[str]:
    return list(ACTION_ERROR_TERMS)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
