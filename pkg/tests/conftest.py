import numpy as np
import pytest

import acceptance_report


@pytest.fixture
def rng():
    return np.random.default_rng(20031025)


def pytest_terminal_summary(terminalreporter):
    if acceptance_report.LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(acceptance_report.LINES.items()):
            terminalreporter.write_line(line)
