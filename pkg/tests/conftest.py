import pytest

from squeezespec import _kernels

BACKENDS = _kernels.available_backends()

# filled by the acceptance tests, printed at the end of the session
ACCEPTANCE_LINES = {}


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Run the test once per kernel backend."""
    previous = _kernels.activate(request.param)
    yield request.param
    _kernels.activate(previous)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
