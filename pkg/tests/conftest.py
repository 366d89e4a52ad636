import random

import pytest

from helpers import small_corpus


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture
def rng():
    return random.Random(1234)



def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome, status in (("passed", "PASS"), ("failed", "FAIL")):
        for rep in terminalreporter.stats.get(outcome, []):
            label = dict(rep.user_properties).get("criterion")
            if rep.when == "call" and label:
                lines.append((int(label.split(".")[0]), status, label))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, status, label in sorted(lines):
            terminalreporter.write_line(f"{status}  {label}")
