import pytest

from qrsync.poly2 import parse

# Polynomials as printed in the worked examples.
EX1_G = parse("x^15+x^12+x^7+x^6+x^2+x+1")
EX1_BAR_PRINTED = parse("x^16+x^15+x^13+x^12+x^8+x^6+x^3+x+1")
# (x+1) * EX1_G, computed by hand and by the oracle in test_poly2.
EX1_BAR = parse("x^16+x^15+x^13+x^12+x^8+x^6+x^3+1")
M1 = parse("x^5+x^2+1")
M5 = parse("x^5+x^4+x^2+x+1")
M7 = parse("x^5+x^3+x^2+x+1")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
