import pytest

from whamming import kernels
from whamming.gf import field_create

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]
DESK_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1)]


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


@pytest.fixture(params=DESK_FIELDS, ids=lambda pm: f"q{pm[0] ** pm[1]}")
def desk_field(request):
    return field_create(*request.param)


# One line per acceptance criterion, filled in by tests/test_acceptance.py.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
