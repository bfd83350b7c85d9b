import pytest
from hypothesis import settings

from fibrox import ideal, veronese_type

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture
def example_m():
    return veronese_type((3, 2, 1), 3, 3)


@pytest.fixture
def remark_reza():
    return ideal((3, 0, 0), (2, 1, 0), (1, 2, 0), (1, 1, 1))


@pytest.fixture
def final_remark():
    return ideal((5, 0), (3, 2), (2, 3), (1, 4))


@pytest.fixture
def example_a():
    return ideal((12, 0), (9, 3), (6, 6), (3, 9))


@pytest.fixture
def example_b():
    return ideal((3, 0, 0), (2, 0, 1), (1, 0, 2), (0, 3, 0), (0, 0, 3))


def bivariate(d, x2_exponents):
    return ideal(*[(d - e, e) for e in x2_exponents])


@pytest.fixture
def intro_i1():
    return bivariate(11, (0, 2, 4, 5, 6, 7, 9, 11))


@pytest.fixture
def intro_i2():
    return bivariate(11, (0, 1, 4, 5, 6, 7, 10, 11))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::test_criterion_")[1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"criterion {name}: {verdict}")
