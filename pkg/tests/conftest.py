import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from univoq import base_from_word, named_base, rational_base  # noqa: E402
from univoq.words import EPWord  # noqa: E402


@pytest.fixture(scope="session")
def G():
    return named_base("G")


@pytest.fixture(scope="session")
def q_star():
    return named_base("q_star")


@pytest.fixture(scope="session")
def q_1():
    return base_from_word(EPWord.parse("110(10)"))


@pytest.fixture(scope="session")
def rat():
    return lambda s: rational_base(Fraction(s))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
