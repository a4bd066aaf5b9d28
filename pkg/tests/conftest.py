import pytest

from toricsing import kernels


@pytest.fixture(params=["python", "compiled"])
def backend(request):
    """Run a test once per kernel backend; skip compiled when not built."""
    if request.param == "compiled" and not kernels.COMPILED_AVAILABLE:
        pytest.skip("compiled kernels not built")
    previous = kernels.get_backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "CRITERIA_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
