import pytest

from milnor import Ring, parse_polynomial


@pytest.fixture
def R():
    return Ring.of("x,y,z")


@pytest.fixture
def parse(R):
    def _parse(text):
        return parse_polynomial(text, R)

    return _parse


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
