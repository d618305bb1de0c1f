from fractions import Fraction

import pytest

from jacquet import CuspidalLine, CuspidalPoint, Multisegment, RElem, Segment

RHO = CuspidalLine("rho")

ACCEPTANCE_LINES = []


def seg(a, b, line=RHO):
    return Segment(line, Fraction(a), Fraction(b))


def pt(e, line=RHO):
    return CuspidalPoint(line, Fraction(e))


def lab(*segs):
    return Multisegment(segs)


def el(*segs, c=1):
    return RElem.basis(lab(*segs), c)


def word(*es, line=RHO):
    return tuple(pt(e, line) for e in es)


@pytest.fixture
def rho():
    return RHO


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
