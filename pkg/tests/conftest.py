import sys

import pytest

PRIMES = (3, 5, 7, 11, 13)


@pytest.fixture(params=PRIMES)
def prime(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
