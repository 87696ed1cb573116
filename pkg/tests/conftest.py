import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skcurve import kernels  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
        terminalreporter.write_line(f"kernel backend: {kernels.BACKEND}")
